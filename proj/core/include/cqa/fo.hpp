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

#ifndef CQA_FO_HPP
#define CQA_FO_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cqa {

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

/// First-order formula in negation normal form: negation occurs only on
/// relational atoms (and as the dis-equality literal). Quantifiers bind one
/// variable each.
struct FoFormula {
    enum class Kind { Atom, NegAtom, Eq, Neq, And, Or, Forall, Exists };

    Kind kind;
    std::string relation;           // Atom/NegAtom
    std::vector<std::string> vars;  // Atom/NegAtom arguments
    std::string lhs, rhs;           // Eq/Neq
    FoPtr left, right;              // And/Or children; left is the body of a quantifier
    std::string var;                // Forall/Exists
};

namespace fo {
FoPtr atom(std::string relation, std::vector<std::string> vars);
FoPtr neg_atom(std::string relation, std::vector<std::string> vars);
FoPtr eq(std::string lhs, std::string rhs);
FoPtr neq(std::string lhs, std::string rhs);
FoPtr conj(FoPtr a, FoPtr b);
FoPtr disj(FoPtr a, FoPtr b);
FoPtr forall(std::string var, FoPtr body);
FoPtr exists(std::string var, FoPtr body);
FoPtr forall_all(const std::vector<std::string>& vars, FoPtr body);
FoPtr exists_all(const std::vector<std::string>& vars, FoPtr body);
} // namespace fo

bool fo_equal(const FoFormula& a, const FoFormula& b);
std::set<std::string> fo_free_vars(const FoFormula& f);

/// Rendering for diagnostics: "A z . (!R(x,z) | E y . S(z,y))".
std::string print_fo(const FoFormula& f);

} // namespace cqa

#endif
