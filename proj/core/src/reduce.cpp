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

#include "cqa/reduce.hpp"

#include <cmath>

#include "cqa/error.hpp"

namespace cqa {

std::uint64_t ReductionConfig::weight() const {
    if (!(epsilon >= 1.0))
        throw SemiringDomainError("approximation guarantee must be at least 1, got " +
                                  std::to_string(epsilon));
    return static_cast<std::uint64_t>(std::floor(epsilon)) + 1;
}

KDatabase hardness_reduce(const KDatabase& boolean_db, const ReductionConfig& cfg) {
    if (boolean_db.semiring().name() != "bool")
        throw SchemaError("the reduction starts from a Boolean database, got semiring " +
                          boolean_db.semiring().name());
    if (!boolean_db.has_relation(cfg.target_relation))
        throw SchemaError("target relation '" + cfg.target_relation + "' is not in the schema");
    const std::uint64_t m = cfg.weight();

    KDatabase out(boolean_db.schema(), semiring("nat"));
    for (const Fact& f : boolean_db.facts())
        out.insert(f.relation, f.tuple,
                   Value::of_nat(f.relation == cfg.target_relation ? m : 1));
    return out;
}

} // namespace cqa
