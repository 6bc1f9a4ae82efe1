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

#include "cqa/query.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "cqa/error.hpp"

namespace cqa {

std::vector<std::string> QueryAtom::all_vars() const {
    std::vector<std::string> out = key_vars;
    out.insert(out.end(), nonkey_vars.begin(), nonkey_vars.end());
    return out;
}

std::set<std::string> QueryAtom::var_set() const {
    std::set<std::string> out(key_vars.begin(), key_vars.end());
    out.insert(nonkey_vars.begin(), nonkey_vars.end());
    return out;
}

ConjunctiveQuery::ConjunctiveQuery(std::string head, std::vector<std::string> free_vars,
                                   std::vector<QueryAtom> atoms)
    : head_(std::move(head)), free_vars_(std::move(free_vars)), atoms_(std::move(atoms)) {
    std::set<std::string> rels;
    for (const QueryAtom& a : atoms_)
        if (!rels.insert(a.relation).second)
            throw SelfJoinError("relation " + a.relation + " occurs more than once");
    std::set<std::string> frees(free_vars_.begin(), free_vars_.end());
    if (frees.size() != free_vars_.size())
        throw ParseError("duplicate variable in the head of " + head_);
}

std::set<std::string> ConjunctiveQuery::body_vars() const {
    std::set<std::string> out;
    for (const QueryAtom& a : atoms_) {
        out.insert(a.key_vars.begin(), a.key_vars.end());
        out.insert(a.nonkey_vars.begin(), a.nonkey_vars.end());
    }
    return out;
}

std::set<std::string> ConjunctiveQuery::bound_vars() const {
    std::set<std::string> out = body_vars();
    for (const std::string& v : free_vars_) out.erase(v);
    return out;
}

bool ConjunctiveQuery::is_free(std::string_view v) const {
    return std::find(free_vars_.begin(), free_vars_.end(), v) != free_vars_.end();
}

bool ConjunctiveQuery::is_bound(std::string_view v) const {
    if (is_free(v)) return false;
    return body_vars().count(std::string(v)) != 0;
}

bool ConjunctiveQuery::has_atom(std::string_view rel) const {
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [&](const QueryAtom& a) { return a.relation == rel; });
}

const QueryAtom& ConjunctiveQuery::atom(std::string_view rel) const {
    for (const QueryAtom& a : atoms_)
        if (a.relation == rel) return a;
    throw SchemaError("query " + head_ + " has no atom over relation '" + std::string(rel) + "'");
}

ConjunctiveQuery ConjunctiveQuery::remove_atom(std::string_view rel) const {
    atom(rel); // existence check
    std::vector<QueryAtom> rest;
    for (const QueryAtom& a : atoms_)
        if (a.relation != rel) rest.push_back(a);
    return ConjunctiveQuery(head_, free_vars_, std::move(rest));
}

ConjunctiveQuery ConjunctiveQuery::unbind(const std::string& var) const {
    if (!is_bound(var))
        throw ParseError("variable " + var + " is not bound in query " + head_);
    std::vector<std::string> frees = free_vars_;
    frees.push_back(var);
    return ConjunctiveQuery(head_, std::move(frees), atoms_);
}

ConjunctiveQuery ConjunctiveQuery::unbind_all(std::span<const std::string> vars) const {
    ConjunctiveQuery q = *this;
    for (const std::string& v : vars) q = q.unbind(v);
    return q;
}

std::vector<RelationSig> ConjunctiveQuery::induced_schema() const {
    std::vector<RelationSig> out;
    for (const QueryAtom& a : atoms_) out.push_back({a.relation, a.arity(), a.key_len()});
    return out;
}

std::string ConjunctiveQuery::to_string() const {
    std::string out = head_ + "(";
    for (std::size_t i = 0; i < free_vars_.size(); ++i) {
        if (i) out += ",";
        out += free_vars_[i];
    }
    out += ") :- ";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out += ", ";
        const QueryAtom& a = atoms_[i];
        out += a.relation + "(";
        for (std::size_t k = 0; k < a.key_vars.size(); ++k) {
            if (k) out += ",";
            out += a.key_vars[k];
        }
        out += ";";
        for (std::size_t k = 0; k < a.nonkey_vars.size(); ++k) {
            if (k) out += ",";
            out += a.nonkey_vars[k];
        }
        out += ")";
    }
    out += ".";
    return out;
}

namespace {

// Hand-rolled scanner for the tiny query grammar.
struct QueryScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
                             " in query text");
    }
    bool eat_literal(std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
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
    std::vector<std::string> varlist(char terminator) {
        std::vector<std::string> out;
        skip_ws();
        if (pos < text.size() && text[pos] == terminator) return out;
        while (true) {
            auto v = ident();
            if (!v) throw ParseError("expected a variable at offset " + std::to_string(pos));
            out.push_back(*v);
            if (!eat(',')) break;
        }
        return out;
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
};

} // namespace

ConjunctiveQuery parse_query(std::string_view text) {
    QueryScanner s{text};
    auto head = s.ident();
    if (!head) throw ParseError("query must start with a head predicate name");
    s.expect('(');
    std::vector<std::string> frees = s.varlist(')');
    s.expect(')');
    if (!s.eat_literal(":-")) throw ParseError("expected ':-' after the query head");
    std::vector<QueryAtom> atoms;
    if (!s.eat('.')) {
        while (true) {
            auto rel = s.ident();
            if (!rel) throw ParseError("expected a relation name at offset " + std::to_string(s.pos));
            s.expect('(');
            QueryAtom a;
            a.relation = *rel;
            a.key_vars = s.varlist(';');
            s.expect(';');
            a.nonkey_vars = s.varlist(')');
            s.expect(')');
            if (a.arity() == 0)
                throw ParseError("atom " + a.relation + " has no variables");
            atoms.push_back(std::move(a));
            if (!s.eat(',')) break;
        }
        s.expect('.');
    }
    if (!s.at_end()) throw ParseError("trailing characters after the final '.'");

    ConjunctiveQuery q(*head, std::move(frees), std::move(atoms));
    std::set<std::string> body = q.body_vars();
    for (const std::string& v : q.free_vars())
        if (!body.count(v))
            throw ParseError("head variable " + v + " does not occur in the body");
    return q;
}

ConjunctiveQuery parse_query(std::string_view text, const std::vector<RelationSig>& schema) {
    ConjunctiveQuery q = parse_query(text);
    for (const QueryAtom& a : q.atoms()) {
        const RelationSig* sig = nullptr;
        for (const RelationSig& s : schema)
            if (s.name == a.relation) sig = &s;
        if (!sig) throw SchemaError("query uses relation " + a.relation + " absent from the schema");
        if (a.arity() != sig->arity || a.key_len() != sig->key_len)
            throw SchemaError("atom " + a.relation + " has shape (" + std::to_string(a.key_len()) +
                              ";" + std::to_string(a.arity() - a.key_len()) +
                              ") but the schema declares (" + std::to_string(sig->key_len) + ";" +
                              std::to_string(sig->arity - sig->key_len) + ")");
    }
    return q;
}

} // namespace cqa
