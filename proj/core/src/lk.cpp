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

#include "cqa/lk.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "cqa/error.hpp"

namespace cqa {

namespace lk {

namespace {
LkPtr node(LkFormula f) { return std::make_shared<LkFormula>(std::move(f)); }
} // namespace

LkPtr atom(std::string relation, std::vector<std::string> vars) {
    LkFormula f;
    f.kind = LkFormula::Kind::Atom;
    f.relation = std::move(relation);
    f.vars = std::move(vars);
    return node(std::move(f));
}

LkPtr eq(std::string lhs, std::string rhs) {
    LkFormula f;
    f.kind = LkFormula::Kind::Eq;
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    return node(std::move(f));
}

LkPtr conj(LkPtr a, LkPtr b) {
    LkFormula f;
    f.kind = LkFormula::Kind::And;
    f.left = std::move(a);
    f.right = std::move(b);
    return node(std::move(f));
}

LkPtr disj(LkPtr a, LkPtr b) {
    LkFormula f;
    f.kind = LkFormula::Kind::Or;
    f.left = std::move(a);
    f.right = std::move(b);
    return node(std::move(f));
}

LkPtr exists(std::vector<std::string> vars, LkPtr body) {
    if (vars.empty()) return body;
    LkFormula f;
    f.kind = LkFormula::Kind::Exists;
    f.vars = std::move(vars);
    f.left = std::move(body);
    return node(std::move(f));
}

LkPtr nabla(std::vector<std::string> vars, LkPtr body) {
    if (vars.empty()) return body;
    LkFormula f;
    f.kind = LkFormula::Kind::Nabla;
    f.vars = std::move(vars);
    f.left = std::move(body);
    return node(std::move(f));
}

LkPtr guarded_nabla(LkGuard guard, std::vector<std::string> vars, LkPtr body) {
    for (const std::string& v : vars)
        if (std::find(guard.vars.begin(), guard.vars.end(), v) == guard.vars.end())
            throw ParseError("guarded minimization binds " + v + " which does not occur in guard " +
                             guard.relation);
    LkFormula f;
    f.kind = LkFormula::Kind::GuardedNabla;
    f.guard = std::move(guard);
    f.vars = std::move(vars);
    f.left = std::move(body);
    return node(std::move(f));
}

LkPtr not_supp(LkPtr body) {
    LkFormula f;
    f.kind = LkFormula::Kind::NotSupp;
    f.left = std::move(body);
    return node(std::move(f));
}

LkPtr supp(LkPtr body) { return not_supp(not_supp(std::move(body))); }

} // namespace lk

bool lk_equal(const LkFormula& a, const LkFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case LkFormula::Kind::Atom:
        return a.relation == b.relation && a.vars == b.vars;
    case LkFormula::Kind::Eq:
        return a.lhs == b.lhs && a.rhs == b.rhs;
    case LkFormula::Kind::And:
    case LkFormula::Kind::Or:
        return lk_equal(*a.left, *b.left) && lk_equal(*a.right, *b.right);
    case LkFormula::Kind::Exists:
    case LkFormula::Kind::Nabla:
        return a.vars == b.vars && lk_equal(*a.left, *b.left);
    case LkFormula::Kind::GuardedNabla:
        return a.guard == b.guard && a.vars == b.vars && lk_equal(*a.left, *b.left);
    case LkFormula::Kind::NotSupp:
        return lk_equal(*a.left, *b.left);
    }
    return false;
}

namespace {

void collect_vars(const LkFormula& f, std::set<std::string>& bound, std::set<std::string>& free,
                  std::set<std::string>* all) {
    auto see = [&](const std::string& v) {
        if (all) all->insert(v);
        if (!bound.count(v)) free.insert(v);
    };
    switch (f.kind) {
    case LkFormula::Kind::Atom:
        for (const std::string& v : f.vars) see(v);
        return;
    case LkFormula::Kind::Eq:
        see(f.lhs);
        see(f.rhs);
        return;
    case LkFormula::Kind::And:
    case LkFormula::Kind::Or:
        collect_vars(*f.left, bound, free, all);
        collect_vars(*f.right, bound, free, all);
        return;
    case LkFormula::Kind::NotSupp:
        collect_vars(*f.left, bound, free, all);
        return;
    case LkFormula::Kind::GuardedNabla:
        for (const std::string& v : f.guard.vars)
            if (std::find(f.vars.begin(), f.vars.end(), v) == f.vars.end()) see(v);
        [[fallthrough]];
    case LkFormula::Kind::Exists:
    case LkFormula::Kind::Nabla: {
        std::vector<std::string> fresh;
        for (const std::string& v : f.vars) {
            if (all) all->insert(v);
            if (bound.insert(v).second) fresh.push_back(v);
        }
        collect_vars(*f.left, bound, free, all);
        for (const std::string& v : fresh) bound.erase(v);
        return;
    }
    }
}

} // namespace

std::set<std::string> lk_free_vars(const LkFormula& f) {
    std::set<std::string> bound, free;
    collect_vars(f, bound, free, nullptr);
    return free;
}

std::set<std::string> lk_all_vars(const LkFormula& f) {
    std::set<std::string> bound, free, all;
    collect_vars(f, bound, free, &all);
    return all;
}

LkPtr lk_substitute(const LkPtr& f, const std::string& from, const std::string& to) {
    auto ren = [&](const std::string& v) { return v == from ? to : v; };
    switch (f->kind) {
    case LkFormula::Kind::Atom: {
        std::vector<std::string> vars;
        for (const std::string& v : f->vars) vars.push_back(ren(v));
        return lk::atom(f->relation, std::move(vars));
    }
    case LkFormula::Kind::Eq:
        return lk::eq(ren(f->lhs), ren(f->rhs));
    case LkFormula::Kind::And:
        return lk::conj(lk_substitute(f->left, from, to), lk_substitute(f->right, from, to));
    case LkFormula::Kind::Or:
        return lk::disj(lk_substitute(f->left, from, to), lk_substitute(f->right, from, to));
    case LkFormula::Kind::NotSupp:
        return lk::not_supp(lk_substitute(f->left, from, to));
    case LkFormula::Kind::Exists:
    case LkFormula::Kind::Nabla:
    case LkFormula::Kind::GuardedNabla: {
        bool shadowed =
            std::find(f->vars.begin(), f->vars.end(), from) != f->vars.end();
        LkPtr body = shadowed ? f->left : lk_substitute(f->left, from, to);
        if (f->kind == LkFormula::Kind::Exists) return lk::exists(f->vars, std::move(body));
        if (f->kind == LkFormula::Kind::Nabla) return lk::nabla(f->vars, std::move(body));
        LkGuard g = f->guard;
        // Guard positions for the binder variables stay; other positions are
        // free occurrences and get renamed.
        for (std::string& v : g.vars) {
            bool is_binder = std::find(f->vars.begin(), f->vars.end(), v) != f->vars.end();
            if (!is_binder) v = ren(v);
        }
        return lk::guarded_nabla(std::move(g), f->vars, std::move(body));
    }
    }
    throw ParseError("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

bool is_supp_sugar(const LkFormula& f) {
    return f.kind == LkFormula::Kind::NotSupp && f.left->kind == LkFormula::Kind::NotSupp;
}

void print_rec(const LkFormula& f, std::string& out);

// Quantifier bodies print parenthesized when they are conjunctions or
// disjunctions, mirroring the usual way such formulas are written.
void print_body(const LkFormula& f, std::string& out) {
    bool paren = f.kind == LkFormula::Kind::And || f.kind == LkFormula::Kind::Or;
    if (paren) out += "(";
    print_rec(f, out);
    if (paren) out += ")";
}

// Left-associative chains print flat; a right child of its own operator or
// a disjunction under a conjunction needs parentheses to re-parse to the
// same tree.
void print_operand(const LkFormula& f, LkFormula::Kind parent, bool right_child,
                   std::string& out) {
    bool paren = false;
    if (f.kind == LkFormula::Kind::Or && parent == LkFormula::Kind::And) paren = true;
    if (right_child && f.kind == parent) paren = true;
    if (paren) out += "(";
    print_rec(f, out);
    if (paren) out += ")";
}

void print_rec(const LkFormula& f, std::string& out) {
    switch (f.kind) {
    case LkFormula::Kind::Atom:
        out += f.relation + "(" + join(f.vars, ",") + ")";
        return;
    case LkFormula::Kind::Eq:
        out += f.lhs + " = " + f.rhs;
        return;
    case LkFormula::Kind::And:
        print_operand(*f.left, f.kind, false, out);
        out += " & ";
        print_operand(*f.right, f.kind, true, out);
        return;
    case LkFormula::Kind::Or:
        print_operand(*f.left, f.kind, false, out);
        out += " | ";
        print_operand(*f.right, f.kind, true, out);
        return;
    case LkFormula::Kind::Exists:
        out += "E " + join(f.vars, " ") + " . ";
        print_body(*f.left, out);
        return;
    case LkFormula::Kind::Nabla:
        out += "Nabla " + join(f.vars, " ") + " . ";
        print_body(*f.left, out);
        return;
    case LkFormula::Kind::GuardedNabla:
        out += "Nabla[" + f.guard.relation + "(" + join(f.guard.vars, ",") + ")] " +
               join(f.vars, " ") + " . ";
        print_body(*f.left, out);
        return;
    case LkFormula::Kind::NotSupp:
        if (is_supp_sugar(f)) {
            out += "Supp(";
            print_rec(*f.left->left, out);
        } else {
            out += "NSupp(";
            print_rec(*f.left, out);
        }
        out += ")";
        return;
    }
}

} // namespace

std::string print_lk(const LkFormula& f) {
    std::string out;
    print_rec(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// parsing
//
//   formula  := or
//   or       := and ( '|' and )*
//   and      := unary ( ('&' | '*') unary )*
//   unary    := 'E' binders '.' unary
//             | 'Nabla' [ '[' guard ']' ] binders '.' unary
//             | 'NSupp' '(' formula ')' | 'Supp' '(' formula ')'
//             | '(' formula ')'
//             | ident '(' args ')' | ident '=' ident
//
// A quantifier body extends as a single unary item; use parentheses for
// conjunctions under a binder.

namespace {

struct LkScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                             " in formula text");
    }
    std::optional<std::string> ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_' || text[pos] == '\''))
                ++pos;
            return std::string(text.substr(start, pos - start));
        }
        return std::nullopt;
    }
    std::string require_ident(const char* what) {
        auto v = ident();
        if (!v)
            throw ParseError(std::string("expected ") + what + " at offset " + std::to_string(pos));
        return *v;
    }
};

class LkParser {
public:
    explicit LkParser(std::string_view text) : s_{text} {}

    LkPtr parse() {
        LkPtr f = formula();
        s_.skip_ws();
        if (s_.pos != s_.text.size())
            throw ParseError("trailing characters at offset " + std::to_string(s_.pos));
        return f;
    }

private:
    LkScanner s_;

    LkPtr formula() {
        LkPtr f = conjunction();
        while (s_.eat('|')) f = lk::disj(f, conjunction());
        return f;
    }

    LkPtr conjunction() {
        LkPtr f = unary();
        while (true) {
            if (s_.eat('&') || s_.eat('*')) {
                f = lk::conj(f, unary());
            } else {
                return f;
            }
        }
    }

    std::vector<std::string> binders() {
        std::vector<std::string> vars;
        while (true) {
            s_.skip_ws();
            if (s_.peek() == '.') break;
            vars.push_back(s_.require_ident("a binder variable"));
        }
        s_.expect('.');
        if (vars.empty()) throw ParseError("binder with no variables at offset " +
                                           std::to_string(s_.pos));
        return vars;
    }

    std::vector<std::string> arg_list() {
        std::vector<std::string> args;
        s_.expect('(');
        if (!s_.eat(')')) {
            while (true) {
                args.push_back(s_.require_ident("an argument variable"));
                if (!s_.eat(',')) break;
            }
            s_.expect(')');
        }
        return args;
    }

    LkPtr unary() {
        s_.skip_ws();
        std::size_t mark = s_.pos;
        if (s_.eat('(')) {
            LkPtr f = formula();
            s_.expect(')');
            return f;
        }
        auto word = s_.ident();
        if (!word) throw ParseError("expected a formula at offset " + std::to_string(s_.pos));
        if (*word == "E") {
            std::vector<std::string> vars = binders();
            LkPtr body = unary();
            return lk::exists(std::move(vars), std::move(body));
        }
        if (*word == "Nabla") {
            if (s_.eat('[')) {
                LkGuard g;
                g.relation = s_.require_ident("a guard relation");
                g.vars = arg_list();
                s_.expect(']');
                std::vector<std::string> vars = binders();
                LkPtr body = unary();
                return lk::guarded_nabla(std::move(g), std::move(vars), std::move(body));
            }
            std::vector<std::string> vars = binders();
            LkPtr body = unary();
            return lk::nabla(std::move(vars), std::move(body));
        }
        if (*word == "NSupp") {
            s_.expect('(');
            LkPtr f = formula();
            s_.expect(')');
            return lk::not_supp(f);
        }
        if (*word == "Supp") {
            s_.expect('(');
            LkPtr f = formula();
            s_.expect(')');
            return lk::supp(f);
        }
        // atom or equality
        if (s_.peek() == '(') {
            return lk::atom(*word, arg_list());
        }
        if (s_.eat('=')) {
            return lk::eq(*word, s_.require_ident("a variable"));
        }
        throw ParseError("cannot parse formula at offset " + std::to_string(mark));
    }
};

} // namespace

LkPtr parse_lk(std::string_view text) { return LkParser(text).parse(); }

} // namespace cqa
