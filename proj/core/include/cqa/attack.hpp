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

#ifndef CQA_ATTACK_HPP
#define CQA_ATTACK_HPP

#include <optional>

#include "cqa/query.hpp"

namespace cqa {

struct Fd {
    std::set<std::string> lhs;
    std::set<std::string> rhs;
};
using FdSet = std::vector<Fd>;

/// Least superset of xs closed under the dependencies (naive fixpoint; the
/// variable sets involved are tiny).
std::set<std::string> closure(const std::set<std::string>& xs, const FdSet& fds);

/// Dependencies induced by the query's atoms: key(R) determines var(R).
FdSet induced_fds(const ConjunctiveQuery& q);
/// Same with the atom over `rel` removed.
FdSet induced_fds_without(const ConjunctiveQuery& q, std::string_view rel);

/// Witness that `attacker` attacks the bound variable `var`: a nonempty
/// sequence of bound variables starting at a non-key variable of the
/// attacker and ending at `var`, consecutive ones sharing an atom, all of
/// them outside the closure of the attacker's key under the dependencies of
/// the other atoms. Found by breadth-first search, so witnesses are
/// shortest. Returns nothing when there is no attack.
std::optional<std::vector<std::string>> attack_witness(const ConjunctiveQuery& q,
                                                       const QueryAtom& attacker,
                                                       const std::string& var);
bool attacks(const ConjunctiveQuery& q, const QueryAtom& attacker, const std::string& var);

struct AttackEdge {
    std::string from;
    std::string to;
    std::vector<std::string> witness;
};

/// Directed graph on the query's atoms with an edge R -> R' whenever R
/// attacks a bound key variable of R'.
class AttackGraph {
public:
    static AttackGraph of(const ConjunctiveQuery& q);

    const std::vector<QueryAtom>& nodes() const { return nodes_; }
    const std::vector<AttackEdge>& edges() const { return edges_; }
    bool has_edge(std::string_view from, std::string_view to) const;

    bool is_acyclic() const;
    /// Kahn's algorithm with lexicographic tie-breaks; throws
    /// CyclicAttackGraphError on a cycle.
    std::vector<std::string> topo_order() const;
    /// Relation names with in-degree zero, sorted.
    std::vector<std::string> unattacked_atoms() const;
    /// One cycle, for diagnostics; empty when acyclic.
    std::vector<std::string> find_cycle() const;

    std::string to_dot() const;

private:
    std::vector<QueryAtom> nodes_;
    std::vector<AttackEdge> edges_;
};

/// Bound variables of q that no atom attacks.
std::set<std::string> unattacked_vars(const ConjunctiveQuery& q);

} // namespace cqa

#endif
