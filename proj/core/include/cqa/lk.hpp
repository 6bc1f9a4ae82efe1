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

#ifndef CQA_LK_HPP
#define CQA_LK_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cqa {

/// Guard of a restricted minimization: one relational atom. Only the
/// relation and the full argument tuple matter for evaluation; the key /
/// non-key split of the originating query atom is not part of the formula.
struct LkGuard {
    std::string relation;
    std::vector<std::string> vars;

    friend bool operator==(const LkGuard&, const LkGuard&) = default;
};

struct LkFormula;
using LkPtr = std::shared_ptr<const LkFormula>;

/// Formula of the rewriting logic:
///
///   phi := R(x...) | x = y | phi & phi | phi | phi
///        | E x... . phi                  (sum over the active domain)
///        | Nabla x... . phi              (minimum over the active domain)
///        | Nabla[R(...)] x... . phi      (minimum over the guard's support)
///        | NSupp(phi)                    (1 if phi is 0, else 0)
///
/// Supp(phi) abbreviates NSupp(NSupp(phi)). Quantifiers and minimization
/// operators bind vectors of variables. Nodes are immutable and shared.
struct LkFormula {
    enum class Kind { Atom, Eq, And, Or, Exists, Nabla, GuardedNabla, NotSupp };

    Kind kind;
    std::string relation;           // Atom
    std::vector<std::string> vars;  // Atom arguments, or binder variables
    std::string lhs, rhs;           // Eq
    LkPtr left, right;              // And/Or children; left is the body elsewhere
    LkGuard guard;                  // GuardedNabla
};

namespace lk {
LkPtr atom(std::string relation, std::vector<std::string> vars);
LkPtr eq(std::string lhs, std::string rhs);
LkPtr conj(LkPtr a, LkPtr b);
LkPtr disj(LkPtr a, LkPtr b);
LkPtr exists(std::vector<std::string> vars, LkPtr body);
LkPtr nabla(std::vector<std::string> vars, LkPtr body);
/// Throws ParseError unless every bound variable occurs in the guard.
LkPtr guarded_nabla(LkGuard guard, std::vector<std::string> vars, LkPtr body);
LkPtr not_supp(LkPtr body);
LkPtr supp(LkPtr body); // NSupp(NSupp(body))
} // namespace lk

bool lk_equal(const LkFormula& a, const LkFormula& b);

std::set<std::string> lk_free_vars(const LkFormula& f);
std::set<std::string> lk_all_vars(const LkFormula& f);

/// Renames free occurrences of a variable, respecting shadowing binders.
/// `to` must not be captured; callers pick fresh names via lk_all_vars.
LkPtr lk_substitute(const LkPtr& f, const std::string& from, const std::string& to);

/// Canonical surface syntax, e.g.
///   E x . Nabla[R(x,y)] y . (R(x,y) & Nabla[S(y,z)] z . S(y,z))
/// parse_lk(print_lk(f)) reproduces f exactly.
std::string print_lk(const LkFormula& f);
LkPtr parse_lk(std::string_view text);

} // namespace cqa

#endif
