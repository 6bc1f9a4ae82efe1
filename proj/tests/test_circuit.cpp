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

#include "cqa/circuit.hpp"
#include "cqa/error.hpp"
#include "cqa/randgen.hpp"
#include "cqa/rewrite.hpp"
#include "cqa/semantics.hpp"
#include "testutil.hpp"

using namespace cqa;

TEST_CASE("a sum over one unary relation") {
    const Semiring& sr = semiring("nat");
    std::vector<RelationSig> schema = {{"R", 1, 1}};
    LkPtr f = parse_lk("E x . R(x)");
    Circuit c = Circuit::compile(*f, 2, schema, sr);
    CHECK(c.layout().total == 2);

    std::vector<Value> enc = {Value::of_nat(2), Value::of_nat(3)};
    CHECK(sr.print(c.evaluate(enc)) == "5");

    Circuit::Stats st = c.stats();
    CHECK(st.depth == 1); // one addition over the input gates

    KDatabase db(schema, sr);
    db.insert("R", {"a"}, Value::of_nat(2));
    db.insert("R", {"b"}, Value::of_nat(3));
    CHECK(sr.print(c.evaluate(encode(db, {}, 2))) == "5");
}

TEST_CASE("a single atom compiles to a bare input gate") {
    const Semiring& sr = semiring("nat");
    Circuit c = Circuit::compile(*parse_lk("R(x)"), 3, {{"R", 1, 1}}, sr, {"x"});
    CHECK(c.stats().depth == 0);
    CHECK(c.stats().size == 1);
}

TEST_CASE("support negation with an assignment slot") {
    const Semiring& sr = semiring("nat");
    std::vector<RelationSig> schema = {{"R", 1, 1}};
    Circuit c = Circuit::compile(*parse_lk("NSupp(R(x))"), 1, schema, sr, {"x"});
    // layout: R over (1 domain slot + 1 assignment slot)
    CHECK(c.layout().total == 2);
    std::vector<Value> enc = {sr.zero(), sr.zero()};
    CHECK(sr.print(c.evaluate(enc)) == "1");
    enc[1] = Value::of_nat(4);
    CHECK(sr.print(c.evaluate(enc)) == "0");
    // a free variable with no slot is rejected
    CHECK_THROWS_AS(Circuit::compile(*parse_lk("NSupp(R(x))"), 1, schema, sr), CompileError);
}

TEST_CASE("encoding positions follow the lexicographic tuple order") {
    KDatabase db({{"R", 3, 2}}, semiring("nat"));
    db.insert("R", {"a", "b", "c"}, Value::of_nat(2));
    db.insert("R", {"a", "b", "d"}, Value::of_nat(3));
    db.insert("R", {"a", "a", "a"}, Value::of_nat(4));
    std::vector<Value> enc = encode(db, {}, 4);
    REQUIRE(enc.size() == 64);
    // with a<b<c<d: (a,a,a) -> 0, (a,b,c) -> 0*16+1*4+2, (a,b,d) -> 7
    CHECK(db.semiring().print(enc[0]) == "4");
    CHECK(db.semiring().print(enc[6]) == "2");
    CHECK(db.semiring().print(enc[7]) == "3");
    std::size_t nonzero = 0;
    for (const Value& v : enc)
        if (!db.semiring().is_zero(v)) ++nonzero;
    CHECK(nonzero == 3);

    // too small a domain budget
    CHECK_THROWS_AS(encode(db, {}, 3), DomainOverflowError);
}

TEST_CASE("encoding is injective on supports") {
    std::mt19937_64 rng(404);
    std::vector<RelationSig> schema = {{"R", 2, 1}, {"S", 2, 1}};
    for (int i = 0; i < 20; ++i) {
        KDatabase a = random_database(schema, semiring("bool"), rng(), {.domain_size = 4});
        KDatabase b = random_database(schema, semiring("bool"), rng(), {.domain_size = 4});
        bool same_support = contains_subset(a.support(), b.support()) &&
                            contains_subset(b.support(), a.support());
        // distinct supports over the same domain ordering yield distinct encodings
        if (!same_support && a.active_domain() == b.active_domain())
            CHECK(encode(a, {}, 4) != encode(b, {}, 4));
        CHECK(encode(a, {}, 4) == encode(a, {}, 4));
    }
}

TEST_CASE("compiled rewritings agree with direct evaluation over the padded domain") {
    std::mt19937_64 rng(2480);
    for (const std::string& text : cqatest::acyclic_corpus()) {
        ConjunctiveQuery q = parse_query(text);
        Rewriting rw = rewrite(q);
        std::vector<std::string> slots = q.free_vars();
        for (std::size_t n = 2; n <= 4; ++n) {
            for (const std::string& name : {std::string("bool"), std::string("nat")}) {
                const Semiring& sr = semiring(name);
                Circuit c = Circuit::compile(*rw.formula, n, q.induced_schema(), sr, slots);
                for (int i = 0; i < 5; ++i) {
                    KDatabase db =
                        random_database(q.induced_schema(), sr, rng(),
                                        {.max_blocks = 2, .max_facts_per_block = 2,
                                         .domain_size = n});
                    if (db.active_domain().size() > n) continue;
                    Assignment alpha = random_assignment(slots, db, rng());
                    Value direct = eval_lk(*rw.formula, db, alpha, padded_domain(db, n));
                    Value circ = c.evaluate(encode(db, alpha, n, slots));
                    CAPTURE(text); CAPTURE(name); CAPTURE(n); CAPTURE(i);
                    CHECK(sr.equals(direct, circ));
                }
            }
        }
    }
}

TEST_CASE("depth is independent of the domain size; width is polynomial") {
    const Semiring& sr = semiring("nat");
    std::vector<RelationSig> schema = {{"R", 2, 1}, {"S", 2, 1}};
    LkPtr f5 = parse_lk("E x . Nabla[R(x,y)] y . (R(x,y) & Nabla[S(y,z)] z . S(y,z))");
    std::vector<std::size_t> sizes;
    std::size_t depth2 = Circuit::compile(*f5, 2, schema, sr).stats().depth;
    for (std::size_t n = 2; n <= 6; ++n) {
        Circuit::Stats st = Circuit::compile(*f5, n, schema, sr).stats();
        CHECK(st.depth == depth2);
        sizes.push_back(st.size);
    }
    // three binder variables: cubic growth with headroom
    double c0 = static_cast<double>(sizes[0]) / (2 * 2 * 2);
    for (std::size_t n = 3; n <= 6; ++n) {
        CHECK(sizes[n - 2] > sizes[n - 3]); // monotone
        CHECK(static_cast<double>(sizes[n - 2]) <= 4.0 * c0 * n * n * n);
    }
}

TEST_CASE("structural invariants: binary products, no dead gates") {
    std::vector<RelationSig> schema = {{"R", 2, 1}, {"S", 2, 1}};
    LkPtr f5 = parse_lk("E x . Nabla[R(x,y)] y . (R(x,y) & Nabla[S(y,z)] z . S(y,z))");
    Circuit c = Circuit::compile(*f5, 3, schema, semiring("trop"));
    std::vector<bool> reachable(c.gates().size(), false);
    std::vector<std::uint32_t> stack = {c.output()};
    while (!stack.empty()) {
        std::uint32_t g = stack.back();
        stack.pop_back();
        if (reachable[g]) continue;
        reachable[g] = true;
        for (std::uint32_t in : c.gates()[g].inputs) stack.push_back(in);
    }
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        CHECK(reachable[i]);
        if (c.gates()[i].kind == GateKind::Mul2) CHECK(c.gates()[i].inputs.size() == 2);
        if (c.gates()[i].kind == GateKind::NotSupp) CHECK(c.gates()[i].inputs.size() == 1);
        for (std::uint32_t in : c.gates()[i].inputs) CHECK(in < i); // topological ids
    }
}

TEST_CASE("all-zero encodings of guarded formulas evaluate to zero") {
    const Semiring& sr = semiring("nat");
    std::vector<RelationSig> schema = {{"R", 2, 1}, {"S", 2, 1}};
    LkPtr f5 = parse_lk("E x . Nabla[R(x,y)] y . (R(x,y) & Nabla[S(y,z)] z . S(y,z))");
    Circuit c = Circuit::compile(*f5, 3, schema, sr);
    std::vector<Value> zeros(c.layout().total, sr.zero());
    CHECK(sr.is_zero(c.evaluate(zeros)));
    CHECK_THROWS_AS(c.evaluate(std::vector<Value>(3, sr.zero())), DomainOverflowError);
}

TEST_CASE("serialization carries gates and layout") {
    const Semiring& sr = semiring("nat");
    Circuit c = Circuit::compile(*parse_lk("E x . R(x)"), 2, {{"R", 1, 1}}, sr);
    std::string json = c.to_json_string();
    CHECK(json.find("\"type\": \"add\"") != std::string::npos);
    CHECK(json.find("\"type\": \"input\"") != std::string::npos);
    CHECK(json.find("\"domain_size\": 2") != std::string::npos);
    std::string dot = c.to_dot();
    CHECK(dot.find("R[0]") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
