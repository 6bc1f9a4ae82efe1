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

#ifndef CQA_QUERY_HPP
#define CQA_QUERY_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqa/kdb.hpp"

namespace cqa {

/// One body atom R(x...;y...) with the key / non-key variable split.
/// Atoms carry variables only; constants are encoded via unary relations.
struct QueryAtom {
    std::string relation;
    std::vector<std::string> key_vars;
    std::vector<std::string> nonkey_vars;

    std::size_t arity() const { return key_vars.size() + nonkey_vars.size(); }
    std::size_t key_len() const { return key_vars.size(); }
    std::vector<std::string> all_vars() const;
    std::set<std::string> var_set() const;

    friend bool operator==(const QueryAtom&, const QueryAtom&) = default;
};

/// A self-join-free conjunctive query. Variables not listed as free are
/// existentially quantified. Immutable; the q-minus-atom and unbind
/// operations return transformed copies.
class ConjunctiveQuery {
public:
    ConjunctiveQuery(std::string head, std::vector<std::string> free_vars,
                     std::vector<QueryAtom> atoms);

    const std::string& head() const { return head_; }
    const std::vector<std::string>& free_vars() const { return free_vars_; }
    const std::vector<QueryAtom>& atoms() const { return atoms_; }

    std::set<std::string> body_vars() const;
    /// Body variables that are not free, i.e. the quantified ones.
    std::set<std::string> bound_vars() const;
    bool is_free(std::string_view v) const;
    bool is_bound(std::string_view v) const;

    bool has_atom(std::string_view rel) const;
    const QueryAtom& atom(std::string_view rel) const; // throws SchemaError

    /// Removes the atom with the given relation; quantifiers over variables
    /// occurring only in that atom disappear with it.
    ConjunctiveQuery remove_atom(std::string_view rel) const;

    /// Drops the quantifier on a bound variable, making it free.
    ConjunctiveQuery unbind(const std::string& var) const;
    ConjunctiveQuery unbind_all(std::span<const std::string> vars) const;

    /// Key constraints induced by the atoms, as relation signatures.
    std::vector<RelationSig> induced_schema() const;

    /// Renders the query back in the input grammar.
    std::string to_string() const;

    friend bool operator==(const ConjunctiveQuery&, const ConjunctiveQuery&) = default;

private:
    std::string head_;
    std::vector<std::string> free_vars_;
    std::vector<QueryAtom> atoms_;
};

/// Parses "q(x) :- R(x;y), S(y;z)." Errors: syntax, SelfJoin, head
/// variables missing from the body; with a schema also arity / key-width
/// mismatches.
ConjunctiveQuery parse_query(std::string_view text);
ConjunctiveQuery parse_query(std::string_view text, const std::vector<RelationSig>& schema);

} // namespace cqa

#endif
