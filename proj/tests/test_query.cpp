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

#include <random>

#include "cqa/attack.hpp"
#include "cqa/error.hpp"
#include "cqa/lk.hpp"
#include "cqa/query.hpp"
#include "testutil.hpp"

using namespace cqa;

TEST_CASE("query parsing") {
    ConjunctiveQuery q = parse_query("q() :- R(x;y), S(y;z).");
    CHECK(q.free_vars().empty());
    CHECK(q.atoms().size() == 2);
    CHECK(q.atoms()[0].key_vars == std::vector<std::string>{"x"});
    CHECK(q.atoms()[0].nonkey_vars == std::vector<std::string>{"y"});
    CHECK(q.bound_vars() == std::set<std::string>{"x", "y", "z"});

    ConjunctiveQuery open = parse_query("q(x) :- R(x;y).");
    CHECK(open.free_vars() == std::vector<std::string>{"x"});
    CHECK(open.bound_vars() == std::set<std::string>{"y"});

    // whitespace-insensitive, all-key atoms, multi-char identifiers
    CHECK_NOTHROW(parse_query("  q ( ) :-  Edge ( src ; dst ) ,Node(dst;) . "));

    CHECK_THROWS_AS(parse_query("q() :- R(x;y), R(y;x)."), SelfJoinError);
    CHECK_THROWS_AS(parse_query("q(w) :- R(x;y)."), ParseError);
    CHECK_THROWS_AS(parse_query("q() :- R(x;y)"), ParseError);
    CHECK_THROWS_AS(parse_query("q() R(x;y)."), ParseError);
}

TEST_CASE("query parsing against a schema") {
    std::vector<RelationSig> schema = {{"R", 2, 1}};
    CHECK_NOTHROW(parse_query("q() :- R(x;y).", schema));
    CHECK_THROWS_AS(parse_query("q() :- R(x,y;z).", schema), SchemaError);
    CHECK_THROWS_AS(parse_query("q() :- S(x;y).", schema), SchemaError);
}

TEST_CASE("atom removal drops orphaned quantifiers") {
    ConjunctiveQuery qpath = parse_query("q() :- R(x;y), S(y;z).");
    ConjunctiveQuery no_r = qpath.remove_atom("R");
    CHECK(no_r.atoms().size() == 1);
    CHECK(no_r.bound_vars() == std::set<std::string>{"y", "z"}); // x is gone
    ConjunctiveQuery no_s = qpath.remove_atom("S");
    CHECK(no_s.bound_vars() == std::set<std::string>{"x", "y"});

    ConjunctiveQuery single = parse_query("q() :- R(x;y).");
    CHECK(single.remove_atom("R").atoms().empty());
    CHECK_THROWS_AS(qpath.remove_atom("T"), SchemaError);
}

TEST_CASE("unbinding a quantifier") {
    ConjunctiveQuery qpath = parse_query("q() :- R(x;y), S(y;z).");
    ConjunctiveQuery qx = qpath.unbind("x");
    CHECK(qx.free_vars() == std::vector<std::string>{"x"});
    CHECK(qx.bound_vars() == std::set<std::string>{"y", "z"});
    CHECK(qx.atoms() == qpath.atoms());

    // composes over distinct variables
    ConjunctiveQuery qxy = qpath.unbind("x").unbind("y");
    CHECK(qxy.bound_vars() == std::set<std::string>{"z"});

    CHECK_THROWS_AS(qx.unbind("x"), ParseError);
    CHECK_THROWS_AS(qpath.unbind("nope"), ParseError);
}

TEST_CASE("unbinding an unattacked variable keeps the atoms") {
    for (const std::string& text : cqatest::acyclic_corpus()) {
        ConjunctiveQuery q = parse_query(text);
        for (const std::string& v : unattacked_vars(q)) {
            ConjunctiveQuery qv = q.unbind(v);
            CHECK(qv.atoms() == q.atoms());
        }
    }
}

TEST_CASE("formula parsing hits the reference shape") {
    LkPtr f = parse_lk("E x . Nabla[R(x,y)] y . (R(x,y) & Nabla[S(y,z)] z . S(y,z))");
    REQUIRE(f->kind == LkFormula::Kind::Exists);
    CHECK(f->vars == std::vector<std::string>{"x"});
    const LkFormula& g = *f->left;
    REQUIRE(g.kind == LkFormula::Kind::GuardedNabla);
    CHECK(g.guard.relation == "R");
    CHECK(g.guard.vars == std::vector<std::string>{"x", "y"});
    CHECK(g.vars == std::vector<std::string>{"y"});
    REQUIRE(g.left->kind == LkFormula::Kind::And);
    CHECK(g.left->left->kind == LkFormula::Kind::Atom);
    CHECK(g.left->right->kind == LkFormula::Kind::GuardedNabla);

    LkPtr ns = parse_lk("NSupp(R(x,y))");
    REQUIRE(ns->kind == LkFormula::Kind::NotSupp);
    CHECK(ns->left->kind == LkFormula::Kind::Atom);

    // Supp is sugar for a double support negation
    LkPtr sp = parse_lk("Supp(R(x,y))");
    REQUIRE(sp->kind == LkFormula::Kind::NotSupp);
    CHECK(sp->left->kind == LkFormula::Kind::NotSupp);

    CHECK_NOTHROW(parse_lk("x = y"));
    CHECK_NOTHROW(parse_lk("R(x,y) * S(y,z)")); // product spelling of &
    CHECK_THROWS_AS(parse_lk("E . R(x)"), ParseError);
    CHECK_THROWS_AS(parse_lk("Nabla[R(x)] y . R(y)"), ParseError); // binder not in guard
    CHECK_THROWS_AS(parse_lk("R(x,y) &"), ParseError);
}

namespace {

// printable random formulas covering every constructor
LkPtr random_lk(std::mt19937_64& rng, int depth) {
    static const std::vector<std::string> pool = {"x", "y", "z", "w"};
    auto var = [&]() { return pool[rng() % pool.size()]; };
    if (depth <= 0 || rng() % 4 == 0) {
        switch (rng() % 3) {
        case 0: return lk::atom("R", {var(), var()});
        case 1: return lk::atom("S", {var(), var()});
        default: return lk::eq(var(), var());
        }
    }
    switch (rng() % 7) {
    case 0: return lk::conj(random_lk(rng, depth - 1), random_lk(rng, depth - 1));
    case 1: return lk::disj(random_lk(rng, depth - 1), random_lk(rng, depth - 1));
    case 2: return lk::exists({var()}, random_lk(rng, depth - 1));
    case 3: return lk::nabla({var(), var() + "2"}, random_lk(rng, depth - 1));
    case 4: {
        std::string z = var();
        return lk::guarded_nabla({"R", {var(), z}}, {z}, random_lk(rng, depth - 1));
    }
    case 5: return lk::not_supp(random_lk(rng, depth - 1));
    default: return lk::supp(random_lk(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("print-parse round-trip on a formula corpus") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        LkPtr f = random_lk(rng, 4);
        std::string text = print_lk(*f);
        CAPTURE(text);
        LkPtr back = parse_lk(text);
        CHECK(lk_equal(*f, *back));
    }
}

TEST_CASE("free and bound variables of formulas") {
    LkPtr f = parse_lk("E x . (R(x,y) & Nabla z . S(z,x))");
    CHECK(lk_free_vars(*f) == std::set<std::string>{"y"});
    CHECK(lk_all_vars(*f) == std::set<std::string>{"x", "y", "z"});

    // guard contributes its non-binder variables as free
    LkPtr g = parse_lk("Nabla[R(u,v)] v . S(v,w)");
    CHECK(lk_free_vars(*g) == std::set<std::string>{"u", "w"});
}

TEST_CASE("substitution respects shadowing") {
    LkPtr f = parse_lk("R(x,y) & E x . S(x,y)");
    LkPtr g = lk_substitute(f, "x", "q");
    CHECK(print_lk(*g) == "R(q,y) & E x . S(x,y)");
    LkPtr h = lk_substitute(f, "y", "w");
    CHECK(print_lk(*h) == "R(x,w) & E x . S(x,w)");
}
