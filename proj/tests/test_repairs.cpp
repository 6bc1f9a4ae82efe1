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

#include <doctest.h>

#include "cqa/attack.hpp"
#include "cqa/error.hpp"
#include "cqa/randgen.hpp"
#include "cqa/repairs.hpp"
#include "cqa/semantics.hpp"
#include "testutil.hpp"

using namespace cqa;

namespace {

KDatabase running_example() {
    KDatabase db({{"R", 3, 2}}, semiring("nat"));
    db.insert("R", {"a", "b", "c"}, Value::of_nat(2));
    db.insert("R", {"a", "b", "d"}, Value::of_nat(3));
    db.insert("R", {"a", "a", "a"}, Value::of_nat(4));
    return db;
}

KDatabase counterexample_db() {
    KDatabase db({{"R", 2, 1}, {"S", 2, 1}}, semiring("nat"));
    db.insert("R", {"a", "b"}, Value::of_nat(1));
    db.insert("R", {"a", "c"}, Value::of_nat(1));
    db.insert("S", {"b", "d"}, Value::of_nat(1));
    db.insert("S", {"c", "d"}, Value::of_nat(1));
    return db;
}

} // namespace

TEST_CASE("block decomposition of the running example") {
    RepairSpace space = RepairSpace::of(running_example());
    REQUIRE(space.blocks().size() == 2);
    CHECK(space.blocks()[0].key == Tuple{"a", "a"});
    CHECK(space.blocks()[0].facts.size() == 1);
    CHECK(space.blocks()[1].key == Tuple{"a", "b"});
    CHECK(space.blocks()[1].facts.size() == 2);
    CHECK(space.repair_count().to_decimal() == "2");
}

TEST_CASE("block decomposition shapes") {
    // key-consistent database: all blocks singleton
    KDatabase ok({{"R", 2, 1}}, semiring("nat"));
    ok.insert("R", {"a", "b"}, Value::of_nat(1));
    ok.insert("R", {"b", "c"}, Value::of_nat(1));
    CHECK(RepairSpace::of(ok).repair_count().to_decimal() == "1");

    // 2 x 2 x 3 blocks
    KDatabase db({{"R", 2, 1}, {"S", 2, 1}}, semiring("nat"));
    for (const char* v : {"p", "q"}) db.insert("R", {"a", v}, Value::of_nat(1));
    for (const char* v : {"p", "q"}) db.insert("R", {"b", v}, Value::of_nat(1));
    for (const char* v : {"p", "q", "r"}) db.insert("S", {"a", v}, Value::of_nat(1));
    CHECK(RepairSpace::of(db).repair_count().to_decimal() == "12");
}

TEST_CASE("repair enumeration of the running example") {
    KDatabase db = running_example();
    RepairEnumerator en(RepairSpace::of(db));
    std::vector<KDatabase> repairs;
    while (auto r = en.next()) repairs.push_back(std::move(*r));
    REQUIRE(repairs.size() == 2);

    CHECK(repairs[0].semiring().print(repairs[0].lookup("R", {"a", "b", "c"})) == "2");
    CHECK(repairs[0].semiring().print(repairs[0].lookup("R", {"a", "a", "a"})) == "4");
    CHECK(repairs[0].fact_count() == 2);
    CHECK(repairs[1].semiring().print(repairs[1].lookup("R", {"a", "b", "d"})) == "3");
    CHECK(repairs[1].semiring().print(repairs[1].lookup("R", {"a", "a", "a"})) == "4");
    CHECK(repairs[1].fact_count() == 2);

    FoPtr key = key_constraint_sentence(db.sig("R"));
    for (const KDatabase& r : repairs) {
        CHECK(contains_subset(r, db));
        CHECK(satisfies(r, {}, *key));
        // maximality: each omitted fact clashes with the repair's choice
        for (const Fact& f : db.facts()) {
            if (!r.semiring().is_zero(r.lookup(f.relation, f.tuple))) continue;
            KDatabase extended = r;
            extended.insert(f.relation, f.tuple, f.annotation);
            CHECK_FALSE(satisfies(extended, {}, *key));
        }
    }
}

TEST_CASE("consistent databases repair to themselves") {
    KDatabase ok({{"R", 2, 1}}, semiring("nat"));
    ok.insert("R", {"a", "b"}, Value::of_nat(5));
    RepairEnumerator en(RepairSpace::of(ok));
    auto r = en.next();
    REQUIRE(r);
    CHECK(contains_subset(*r, ok));
    CHECK(contains_subset(ok, *r));
    CHECK_FALSE(en.next());
}

TEST_CASE("repair stream matches the independent enumeration on random inputs") {
    std::mt19937_64 rng(2026);
    for (int i = 0; i < 25; ++i) {
        KDatabase db = random_database({{"R", 3, 2}, {"S", 2, 1}}, semiring("nat"), rng());
        std::size_t independent_count = 0;
        cqatest::independent_repairs(db, [&](const std::vector<Fact>&) { ++independent_count; });
        std::size_t streamed = 0;
        for_each_repair(RepairSpace::of(db), [&](const KDatabase&) { ++streamed; });
        CHECK(streamed == independent_count);
        CHECK(BigNat(streamed) == RepairSpace::of(db).repair_count());
    }
}

TEST_CASE("the enumeration cap trips") {
    KDatabase db({{"R", 2, 1}}, semiring("nat"));
    for (char k = 'a'; k <= 'j'; ++k)
        for (char v = 'a'; v <= 'd'; ++v)
            db.insert("R", {std::string(1, k), std::string(1, v)}, Value::of_nat(1));
    // 4^10 repairs, cap at 1000
    CHECK_THROWS_AS(RepairEnumerator(RepairSpace::of(db), 1000), RepairExplosionError);
    ConjunctiveQuery q = parse_query("q() :- R(x;y).");
    CHECK_THROWS_AS(mca_oracle(q, db, {}, 1000), RepairExplosionError);
}

TEST_CASE("repair oracle on the reference instances") {
    ConjunctiveQuery qpath = parse_query("q() :- R(x;y), S(y;z).");
    CHECK(semiring("nat").print(mca_oracle(qpath, counterexample_db())) == "1");
    CHECK(semiring("nat").print(mca_possible(qpath, counterexample_db())) == "1");

    ConjunctiveQuery qr = parse_query("q() :- R(x1,x2;y).");
    KDatabase db = running_example();
    CHECK(db.semiring().print(mca_oracle(qr, db)) == "6");
    CHECK(db.semiring().print(mca_possible(qr, db)) == "7");

    // consistent database: the oracle is plain evaluation
    KDatabase ok({{"R", 2, 1}, {"S", 2, 1}}, semiring("nat"));
    ok.insert("R", {"a", "b"}, Value::of_nat(2));
    ok.insert("S", {"b", "c"}, Value::of_nat(5));
    CHECK(ok.semiring().equals(mca_oracle(qpath, ok), eval_cq(qpath, ok)));
    CHECK(ok.semiring().equals(mca_possible(qpath, ok), eval_cq(qpath, ok)));
}

TEST_CASE("oracle values bound every repair, with the bound attained") {
    ConjunctiveQuery qpath = parse_query("q() :- R(x;y), S(y;z).");
    std::mt19937_64 rng(31337);
    for (const std::string& name : semiring_names()) {
        const Semiring& sr = semiring(name);
        for (int i = 0; i < 10; ++i) {
            KDatabase db = random_database({{"R", 2, 1}, {"S", 2, 1}}, sr, rng());
            Value lo = mca_oracle(qpath, db);
            Value hi = mca_possible(qpath, db);
            bool lo_attained = false, hi_attained = false;
            for_each_repair(RepairSpace::of(db), [&](const KDatabase& r) {
                Value v = eval_cq(qpath, r);
                CHECK(sr.nat_leq(lo, v));
                CHECK(sr.nat_leq(v, hi));
                lo_attained = lo_attained || sr.equals(v, lo);
                hi_attained = hi_attained || sr.equals(v, hi);
            });
            CHECK(lo_attained);
            CHECK(hi_attained);
        }
    }
}

TEST_CASE("peeling an unattacked variable splits the oracle into a sum") {
    std::mt19937_64 rng(777);
    for (const std::string& text : cqatest::acyclic_corpus()) {
        ConjunctiveQuery q = parse_query(text);
        std::set<std::string> candidates = unattacked_vars(q);
        if (candidates.empty()) continue;
        for (const std::string& name : {std::string("nat"), std::string("trop")}) {
            const Semiring& sr = semiring(name);
            for (int i = 0; i < 5; ++i) {
                KDatabase db = random_database(q.induced_schema(), sr, rng());
                Assignment alpha = random_assignment(q.free_vars(), db, rng());
                for (const std::string& x : candidates) {
                    ConjunctiveQuery qx = q.unbind(x);
                    Value direct = mca_oracle(q, db, alpha);
                    Value split = sr.zero();
                    for (const std::string& c : db.active_domain()) {
                        Assignment ext = alpha;
                        ext[x] = c;
                        split = sr.add(split, mca_oracle(qx, db, ext));
                    }
                    CHECK(sr.equals(direct, split));
                }
            }
        }
    }
}
