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

#include <filesystem>
#include <fstream>
#include <random>

#include "cqa/error.hpp"
#include "cqa/io.hpp"
#include "cqa/randgen.hpp"
#include "cqa/kdb.hpp"

using namespace cqa;

namespace {

// The running inconsistent instance: one ternary relation keyed on its
// first two columns, one block with two facts plus one singleton block.
KDatabase running_example() {
    KDatabase db({{"R", 3, 2}}, semiring("nat"));
    db.insert("R", {"a", "b", "c"}, Value::of_nat(2));
    db.insert("R", {"a", "b", "d"}, Value::of_nat(3));
    db.insert("R", {"a", "a", "a"}, Value::of_nat(4));
    return db;
}

} // namespace

TEST_CASE("lookup returns the stored annotation, zero for absent tuples") {
    KDatabase db = running_example();
    CHECK(db.semiring().print(db.lookup("R", {"a", "b", "c"})) == "2");
    CHECK(db.semiring().print(db.lookup("R", {"a", "a", "a"})) == "4");
    CHECK(db.semiring().is_zero(db.lookup("R", {"z", "z", "z"})));
    CHECK_THROWS_AS(db.lookup("Q", {"a", "b", "c"}), SchemaError);
    CHECK_THROWS_AS(db.lookup("R", {"a", "b"}), SchemaError);
}

TEST_CASE("zero-annotated inserts are rejected") {
    KDatabase db({{"R", 2, 1}}, semiring("nat"));
    CHECK_THROWS_AS(db.insert("R", {"a", "b"}, Value::of_nat(BigNat())), SemiringDomainError);
    CHECK_THROWS_AS(db.insert("R", {"a"}, Value::of_nat(1)), SchemaError);
}

TEST_CASE("support flattens annotations to Boolean") {
    KDatabase db = running_example();
    KDatabase supp = db.support();
    CHECK(supp.semiring().name() == "bool");
    CHECK(supp.fact_count() == 3);
    CHECK(supp.lookup("R", {"a", "b", "c"}).as_bool());
    CHECK(supp.lookup("R", {"a", "b", "d"}).as_bool());
    CHECK(supp.lookup("R", {"a", "a", "a"}).as_bool());
    // idempotent
    CHECK(contains_subset(supp.support(), supp));
    CHECK(contains_subset(supp, supp.support()));
    // empty relation stays empty
    KDatabase empty({{"R", 2, 1}}, semiring("nat"));
    CHECK(empty.support().fact_count() == 0);
}

TEST_CASE("active domain") {
    KDatabase db = running_example();
    CHECK(db.active_domain() == std::vector<std::string>{"a", "b", "c", "d"});
    KDatabase single({{"R", 2, 1}}, semiring("nat"));
    single.insert("R", {"a", "a"}, Value::of_nat(1));
    CHECK(single.active_domain() == std::vector<std::string>{"a"});
    KDatabase empty({{"R", 2, 1}}, semiring("nat"));
    CHECK_THROWS_AS(empty.active_domain(), EmptyActiveDomainError);
    CHECK(db.support().active_domain() == db.active_domain());
}

TEST_CASE("sub-database comparison") {
    KDatabase db = running_example();
    KDatabase repair({{"R", 3, 2}}, semiring("nat"));
    repair.insert("R", {"a", "b", "c"}, Value::of_nat(2));
    repair.insert("R", {"a", "a", "a"}, Value::of_nat(4));
    CHECK(contains_subset(repair, db));
    CHECK_FALSE(contains_subset(db, repair));
    CHECK(contains_subset(db, db));

    // same support, one annotation disagrees
    KDatabase tweaked({{"R", 3, 2}}, semiring("nat"));
    tweaked.insert("R", {"a", "b", "c"}, Value::of_nat(5));
    tweaked.insert("R", {"a", "b", "d"}, Value::of_nat(3));
    tweaked.insert("R", {"a", "a", "a"}, Value::of_nat(4));
    CHECK_FALSE(contains_subset(tweaked, db));
    // but the pointwise order can still hold
    CHECK(leq_database(db, tweaked));

    KDatabase other({{"S", 3, 2}}, semiring("nat"));
    CHECK_THROWS_AS(contains_subset(db, other), SchemaError);
}

TEST_CASE("sub-database containment is a partial order on samples") {
    std::mt19937_64 rng(808);
    std::vector<KDatabase> dbs;
    std::vector<RelationSig> schema = {{"R", 2, 1}, {"S", 2, 1}};
    for (int i = 0; i < 6; ++i) {
        KDatabase big = random_database(schema, semiring("nat"), rng());
        KDatabase sub(schema, semiring("nat"));
        for (const Fact& f : big.facts())
            if (rng() % 2) sub.insert(f.relation, f.tuple, f.annotation);
        dbs.push_back(std::move(big));
        dbs.push_back(std::move(sub));
    }
    for (const KDatabase& a : dbs) {
        CHECK(contains_subset(a, a));
        for (const KDatabase& b : dbs) {
            if (contains_subset(a, b) && contains_subset(b, a)) {
                CHECK(a.fact_count() == b.fact_count());
            }
            for (const KDatabase& c : dbs)
                if (contains_subset(a, b) && contains_subset(b, c))
                    CHECK(contains_subset(a, c));
        }
    }
}

TEST_CASE("schema validation") {
    CHECK_THROWS_AS(KDatabase({{"R", 2, 3}}, semiring("nat")), SchemaError);
    CHECK_THROWS_AS(KDatabase({{"R", 2, 1}, {"R", 2, 1}}, semiring("nat")), SchemaError);
    CHECK_THROWS_AS(KDatabase({{"R", 0, 0}}, semiring("nat")), SchemaError);
}

TEST_CASE("csv round-trip through save and load") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cqa_kdb_roundtrip";
    fs::remove_all(dir);
    KDatabase db = running_example();
    save_database(db, dir);
    KDatabase loaded = load_database(dir / "schema.json", dir, semiring("nat"));
    CHECK(contains_subset(db, loaded));
    CHECK(contains_subset(loaded, db));
    fs::remove_all(dir);
}

TEST_CASE("loader rejects malformed input") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cqa_kdb_bad";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "schema.json") << R"({"relations":[{"name":"R","arity":2,"key":1}]})";
    {
        std::ofstream csv(dir / "R.csv");
        csv << "c1,c2,ann\na,b,1\nx,y,0\n";
    }
    CHECK_THROWS_AS(load_database(dir / "schema.json", dir, semiring("nat")), IoError);
    {
        std::ofstream csv(dir / "R.csv");
        csv << "c1,c2,ann\na,b,c,1\n";
    }
    CHECK_THROWS_AS(load_database(dir / "schema.json", dir, semiring("nat")), IoError);
    std::ofstream(dir / "schema.json") << R"({"relations":[{"name":"R","arity":2,"key":5}]})";
    CHECK_THROWS_AS(load_schema(dir / "schema.json"), IoError);
    fs::remove_all(dir);
}
