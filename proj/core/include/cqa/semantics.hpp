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

#ifndef CQA_SEMANTICS_HPP
#define CQA_SEMANTICS_HPP

#include <span>

#include "cqa/fo.hpp"
#include "cqa/kdb.hpp"
#include "cqa/lk.hpp"
#include "cqa/query.hpp"

namespace cqa {

// Semiring value of an NNF first-order formula: conjunction multiplies,
// disjunction adds, quantifiers iterate over the active domain (product for
// the universal one, sum for the existential one), negated atoms and
// (dis-)equalities flatten to 0/1. Quantifier nesting costs |D|^depth; this
// evaluator is meant for small databases and for serving as a reference.
Value eval_fo(const FoFormula& f, const KDatabase& db, const Assignment& alpha);
Value eval_fo(const FoFormula& f, const KDatabase& db, const Assignment& alpha,
              std::span<const std::string> domain);

// Conjunctive-query value: sum over instantiations of the bound variables
// of the product of atom annotations. Computed as a backtracking join over
// stored facts, which agrees with the definition because absent tuples
// annihilate their product.
Value eval_cq(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha = {});

// Value of a rewriting-logic formula. Nabla minimizes over the domain,
// guarded Nabla minimizes over instantiations supported by its guard (zero
// when there are none), NSupp flattens nonzero to 0 and zero to 1.
Value eval_lk(const LkFormula& f, const KDatabase& db, const Assignment& alpha = {});
Value eval_lk(const LkFormula& f, const KDatabase& db, const Assignment& alpha,
              std::span<const std::string> domain);

/// Satisfaction on annotated databases: the value is nonzero. Equivalent to
/// classical satisfaction on the support.
bool satisfies(const KDatabase& db, const Assignment& alpha, const FoFormula& f);

/// Support-preserving translations: a formula and its image are nonzero on
/// exactly the same (db, assignment) pairs. Universal quantification and
/// minimization correspond, as do atom negation and support negation.
LkPtr fo_to_lk(const FoFormula& f);
FoPtr lk_to_fo(const LkFormula& f);

/// NNF key-constraint sentence for a relation ("two facts agreeing on the
/// key agree everywhere"), or null when every position is a key.
FoPtr key_constraint_sentence(const RelationSig& sig);

/// The conjunctive query as an NNF formula (atoms conjoined under the
/// existential closure of the bound variables).
FoPtr cq_to_fo(const ConjunctiveQuery& q);

} // namespace cqa

#endif
