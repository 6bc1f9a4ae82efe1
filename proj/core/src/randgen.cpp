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

#include "cqa/randgen.hpp"

#include <set>

#include "cqa/error.hpp"

namespace cqa {

Value random_annotation(const Semiring& sr, std::mt19937_64& rng) {
    const std::string& name = sr.name();
    if (name == "bool") return Value::of_bool(true);
    if (name == "nat") {
        std::uniform_int_distribution<std::uint64_t> d(1, 5);
        return Value::of_nat(d(rng));
    }
    // real-valued semirings: the 0.1, 0.2, ..., 1.0 grid
    std::uniform_int_distribution<int> d(1, 10);
    return Value::of_real(d(rng) / 10.0);
}

KDatabase random_database(const std::vector<RelationSig>& schema, const Semiring& sr,
                          std::uint64_t seed, const RandomDbOptions& opts) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> pool;
    for (std::size_t i = 0; i < opts.domain_size; ++i)
        pool.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                       (i >= 26 ? std::to_string(i / 26) : ""));
    std::uniform_int_distribution<std::size_t> pick_value(0, pool.size() - 1);

    KDatabase db(schema, sr);
    auto fill_relation = [&](const RelationSig& sig, bool force_nonempty) {
        std::uniform_int_distribution<std::size_t> nblocks_dist(
            opts.allow_empty_relations && !force_nonempty ? 0 : 1, opts.max_blocks);
        std::size_t nblocks = nblocks_dist(rng);
        std::set<Tuple> keys;
        for (std::size_t b = 0; b < nblocks; ++b) {
            Tuple key(sig.key_len);
            for (std::string& v : key) v = pool[pick_value(rng)];
            if (!keys.insert(key).second) continue; // key collision: fewer blocks
            std::uniform_int_distribution<std::size_t> nfacts_dist(1, opts.max_facts_per_block);
            std::size_t nfacts = nfacts_dist(rng);
            std::set<Tuple> rests;
            for (std::size_t f = 0; f < nfacts; ++f) {
                Tuple rest(sig.arity - sig.key_len);
                for (std::string& v : rest) v = pool[pick_value(rng)];
                if (!rests.insert(rest).second) continue;
                Tuple tuple = key;
                tuple.insert(tuple.end(), rest.begin(), rest.end());
                db.insert(sig.name, std::move(tuple), random_annotation(sr, rng));
            }
        }
    };
    for (const RelationSig& sig : schema) fill_relation(sig, false);
    if (db.empty() && !schema.empty()) fill_relation(schema.front(), true);
    return db;
}

Assignment random_assignment(const std::vector<std::string>& vars, const KDatabase& db,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::string> dom = db.active_domain();
    std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
    Assignment alpha;
    for (const std::string& v : vars) alpha[v] = dom[pick(rng)];
    return alpha;
}

} // namespace cqa
