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

#ifndef CQA_REPAIRS_HPP
#define CQA_REPAIRS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "cqa/query.hpp"

namespace cqa {

/// Maximal set of facts of one relation agreeing on the key positions. A
/// repair keeps exactly one fact per block.
struct Block {
    std::string relation;
    Tuple key;
    std::vector<std::pair<Tuple, Value>> facts; // sorted by tuple
};

/// Block decomposition of a database; the cartesian product of the blocks
/// is the repair space. Blocks are ordered by (relation, key) and facts
/// within a block lexicographically, so enumeration order is canonical.
class RepairSpace {
public:
    static RepairSpace of(const KDatabase& db);

    const KDatabase& database() const { return *db_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const BigNat& repair_count() const { return count_; }

private:
    const KDatabase* db_ = nullptr;
    std::vector<Block> blocks_;
    BigNat count_;
};

inline constexpr std::uint64_t kDefaultRepairCap = 1'000'000;

/// Streams the repairs in canonical order (a mixed-radix counter over the
/// per-block choices). Owns a copy of the space, so temporaries are fine;
/// the underlying database must outlive the enumerator. Construction throws
/// RepairExplosionError when the repair count exceeds the cap.
class RepairEnumerator {
public:
    explicit RepairEnumerator(RepairSpace space, std::uint64_t cap = kDefaultRepairCap);

    std::optional<KDatabase> next();

private:
    RepairSpace space_;
    std::vector<std::size_t> counter_;
    bool exhausted_ = false;
};

void for_each_repair(const RepairSpace& space, const std::function<void(const KDatabase&)>& fn,
                     std::uint64_t cap = kDefaultRepairCap);

/// Consistent answers by brute force: the least query value over all
/// repairs in the natural order of the database's semiring.
Value mca_oracle(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha = {},
                 std::uint64_t cap = kDefaultRepairCap);

/// Possible answers: the greatest value over all repairs.
Value mca_possible(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha = {},
                   std::uint64_t cap = kDefaultRepairCap);

} // namespace cqa

#endif
