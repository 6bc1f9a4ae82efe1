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

#ifndef CQA_REDUCE_HPP
#define CQA_REDUCE_HPP

#include "cqa/kdb.hpp"

namespace cqa {

/// Configuration of the approximation-hardness instance builder. Facts of
/// the target relation receive the weight M, the smallest natural number
/// above epsilon; all other facts receive 1.
struct ReductionConfig {
    std::string target_relation;
    double epsilon = 1.0; // must be >= 1

    std::uint64_t weight() const; // floor(epsilon) + 1
};

/// Turns a Boolean database into a counting-semiring instance whose repairs
/// correspond one-to-one to the input's; the consistent answer is zero
/// exactly when some repair of the input falsifies the query, and at least
/// M otherwise.
KDatabase hardness_reduce(const KDatabase& boolean_db, const ReductionConfig& cfg);

} // namespace cqa

#endif
