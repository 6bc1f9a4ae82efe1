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

#include "cqa/fo.hpp"

namespace cqa {

namespace fo {

namespace {
FoPtr node(FoFormula f) { return std::make_shared<FoFormula>(std::move(f)); }
} // namespace

FoPtr atom(std::string relation, std::vector<std::string> vars) {
    FoFormula f;
    f.kind = FoFormula::Kind::Atom;
    f.relation = std::move(relation);
    f.vars = std::move(vars);
    return node(std::move(f));
}

FoPtr neg_atom(std::string relation, std::vector<std::string> vars) {
    FoFormula f;
    f.kind = FoFormula::Kind::NegAtom;
    f.relation = std::move(relation);
    f.vars = std::move(vars);
    return node(std::move(f));
}

FoPtr eq(std::string lhs, std::string rhs) {
    FoFormula f;
    f.kind = FoFormula::Kind::Eq;
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    return node(std::move(f));
}

FoPtr neq(std::string lhs, std::string rhs) {
    FoFormula f;
    f.kind = FoFormula::Kind::Neq;
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    return node(std::move(f));
}

FoPtr conj(FoPtr a, FoPtr b) {
    FoFormula f;
    f.kind = FoFormula::Kind::And;
    f.left = std::move(a);
    f.right = std::move(b);
    return node(std::move(f));
}

FoPtr disj(FoPtr a, FoPtr b) {
    FoFormula f;
    f.kind = FoFormula::Kind::Or;
    f.left = std::move(a);
    f.right = std::move(b);
    return node(std::move(f));
}

FoPtr forall(std::string var, FoPtr body) {
    FoFormula f;
    f.kind = FoFormula::Kind::Forall;
    f.var = std::move(var);
    f.left = std::move(body);
    return node(std::move(f));
}

FoPtr exists(std::string var, FoPtr body) {
    FoFormula f;
    f.kind = FoFormula::Kind::Exists;
    f.var = std::move(var);
    f.left = std::move(body);
    return node(std::move(f));
}

FoPtr forall_all(const std::vector<std::string>& vars, FoPtr body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
    return body;
}

FoPtr exists_all(const std::vector<std::string>& vars, FoPtr body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
    return body;
}

} // namespace fo

bool fo_equal(const FoFormula& a, const FoFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case FoFormula::Kind::Atom:
    case FoFormula::Kind::NegAtom:
        return a.relation == b.relation && a.vars == b.vars;
    case FoFormula::Kind::Eq:
    case FoFormula::Kind::Neq:
        return a.lhs == b.lhs && a.rhs == b.rhs;
    case FoFormula::Kind::And:
    case FoFormula::Kind::Or:
        return fo_equal(*a.left, *b.left) && fo_equal(*a.right, *b.right);
    case FoFormula::Kind::Forall:
    case FoFormula::Kind::Exists:
        return a.var == b.var && fo_equal(*a.left, *b.left);
    }
    return false;
}

namespace {

void free_rec(const FoFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    auto see = [&](const std::string& v) {
        if (!bound.count(v)) out.insert(v);
    };
    switch (f.kind) {
    case FoFormula::Kind::Atom:
    case FoFormula::Kind::NegAtom:
        for (const std::string& v : f.vars) see(v);
        return;
    case FoFormula::Kind::Eq:
    case FoFormula::Kind::Neq:
        see(f.lhs);
        see(f.rhs);
        return;
    case FoFormula::Kind::And:
    case FoFormula::Kind::Or:
        free_rec(*f.left, bound, out);
        free_rec(*f.right, bound, out);
        return;
    case FoFormula::Kind::Forall:
    case FoFormula::Kind::Exists: {
        bool fresh = bound.insert(f.var).second;
        free_rec(*f.left, bound, out);
        if (fresh) bound.erase(f.var);
        return;
    }
    }
}

void print_rec(const FoFormula& f, std::string& out) {
    auto args = [&](const std::vector<std::string>& vs) {
        out += "(";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ",";
            out += vs[i];
        }
        out += ")";
    };
    switch (f.kind) {
    case FoFormula::Kind::Atom:
        out += f.relation;
        args(f.vars);
        return;
    case FoFormula::Kind::NegAtom:
        out += "!" + f.relation;
        args(f.vars);
        return;
    case FoFormula::Kind::Eq:
        out += f.lhs + " = " + f.rhs;
        return;
    case FoFormula::Kind::Neq:
        out += f.lhs + " != " + f.rhs;
        return;
    case FoFormula::Kind::And:
        out += "(";
        print_rec(*f.left, out);
        out += " & ";
        print_rec(*f.right, out);
        out += ")";
        return;
    case FoFormula::Kind::Or:
        out += "(";
        print_rec(*f.left, out);
        out += " | ";
        print_rec(*f.right, out);
        out += ")";
        return;
    case FoFormula::Kind::Forall:
        out += "A " + f.var + " . ";
        print_rec(*f.left, out);
        return;
    case FoFormula::Kind::Exists:
        out += "E " + f.var + " . ";
        print_rec(*f.left, out);
        return;
    }
}

} // namespace

std::set<std::string> fo_free_vars(const FoFormula& f) {
    std::set<std::string> bound, out;
    free_rec(f, bound, out);
    return out;
}

std::string print_fo(const FoFormula& f) {
    std::string out;
    print_rec(f, out);
    return out;
}

} // namespace cqa
