// Copyright 2026 the cqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQA_RANDGEN_HPP
#define CQA_RANDGEN_HPP

#include <random>

#include "cqa/kdb.hpp"

namespace cqa {

/// Shape parameters for seeded random databases: per relation up to
/// max_blocks key groups with up to max_facts_per_block facts each, values
/// drawn from a pool of domain_size constants. Annotations come from a
/// small palette (1..5 for counting, a 0.1 grid for the real semirings, 1
/// for Boolean), so inconsistent blocks with genuinely different repair
/// values are common.
struct RandomDbOptions {
    std::size_t max_blocks = 3;
    std::size_t max_facts_per_block = 3;
    std::size_t domain_size = 6;
    bool allow_empty_relations = true;
};

Value random_annotation(const Semiring& sr, std::mt19937_64& rng);

KDatabase random_database(const std::vector<RelationSig>& schema, const Semiring& sr,
                          std::uint64_t seed, const RandomDbOptions& opts = {});

/// Assigns each variable a uniformly drawn active-domain value.
Assignment random_assignment(const std::vector<std::string>& vars, const KDatabase& db,
                             std::uint64_t seed);

} // namespace cqa

#endif
