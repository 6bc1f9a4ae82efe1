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

#include "cqa/repairs.hpp"

#include "cqa/error.hpp"
#include "cqa/semantics.hpp"

namespace cqa {

RepairSpace RepairSpace::of(const KDatabase& db) {
    RepairSpace out;
    out.db_ = &db;
    for (const RelationSig& sig : db.schema()) {
        // relation(...) iterates tuples lexicographically; since the key is a
        // tuple prefix, facts of one block are contiguous and blocks appear
        // in key order.
        const Block* current = nullptr;
        for (const auto& [tuple, ann] : db.relation(sig.name)) {
            Tuple key(tuple.begin(), tuple.begin() + sig.key_len);
            if (!current || current->key != key) {
                out.blocks_.push_back({sig.name, std::move(key), {}});
                current = &out.blocks_.back();
            }
            out.blocks_.back().facts.emplace_back(tuple, ann);
        }
    }
    out.count_ = BigNat(1);
    for (const Block& b : out.blocks_) out.count_ = out.count_ * BigNat(b.facts.size());
    return out;
}

RepairEnumerator::RepairEnumerator(RepairSpace space, std::uint64_t cap)
    : space_(std::move(space)), counter_(space_.blocks().size(), 0) {
    if (space_.repair_count() > BigNat(cap))
        throw RepairExplosionError("the database has " + space_.repair_count().to_decimal() +
                                   " repairs, above the cap of " + std::to_string(cap));
}

std::optional<KDatabase> RepairEnumerator::next() {
    if (exhausted_) return std::nullopt;
    const KDatabase& db = space_.database();
    KDatabase repair(db.schema(), db.semiring());
    for (std::size_t i = 0; i < counter_.size(); ++i) {
        const Block& b = space_.blocks()[i];
        const auto& [tuple, ann] = b.facts[counter_[i]];
        repair.insert(b.relation, tuple, ann);
    }
    // advance the mixed-radix counter (last block varies fastest)
    exhausted_ = true;
    for (std::size_t i = counter_.size(); i > 0; --i) {
        if (++counter_[i - 1] < space_.blocks()[i - 1].facts.size()) {
            exhausted_ = false;
            break;
        }
        counter_[i - 1] = 0;
    }
    return repair;
}

void for_each_repair(const RepairSpace& space, const std::function<void(const KDatabase&)>& fn,
                     std::uint64_t cap) {
    RepairEnumerator en(space, cap);
    while (auto repair = en.next()) fn(*repair);
}

namespace {

Value fold_repairs(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha,
                   std::uint64_t cap, bool take_max) {
    const Semiring& sr = db.semiring();
    std::optional<Value> best;
    for_each_repair(RepairSpace::of(db), [&](const KDatabase& repair) {
        Value v = eval_cq(q, repair, alpha);
        if (!best) {
            best = v;
            return;
        }
        bool replace = take_max ? (sr.nat_leq(*best, v) && !sr.nat_leq(v, *best))
                                : (sr.nat_leq(v, *best) && !sr.nat_leq(*best, v));
        if (replace) best = v;
    }, cap);
    // a database always has at least one repair (the empty database when
    // there are no facts at all)
    return best ? *best : sr.zero();
}

} // namespace

Value mca_oracle(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha,
                 std::uint64_t cap) {
    return fold_repairs(q, db, alpha, cap, false);
}

Value mca_possible(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha,
                   std::uint64_t cap) {
    return fold_repairs(q, db, alpha, cap, true);
}

} // namespace cqa
