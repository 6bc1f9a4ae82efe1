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

#ifndef CQA_REWRITE_HPP
#define CQA_REWRITE_HPP

#include "cqa/lk.hpp"
#include "cqa/query.hpp"

namespace cqa {

/// One peeling step of the rewriting: the unattacked atom chosen, the bound
/// key / non-key variables it released, and the residual query handed to
/// the next step.
struct RewriteStep {
    QueryAtom atom;
    std::vector<std::string> peeled_key_vars;
    std::vector<std::string> peeled_nonkey_vars;
    ConjunctiveQuery residual;
};

struct Rewriting {
    LkPtr formula;
    std::vector<RewriteStep> trace;
};

/// Compiles an acyclic self-join-free conjunctive query into a formula that
/// evaluates, on every database and assignment, to the least query value
/// over all repairs. The compiler repeatedly picks the lexicographically
/// least unattacked atom R(y...;z...), emits
///
///   E <bound keys> . Nabla[R] <bound non-keys> . (R & <residual formula>)
///
/// and recurses on the query without R and with the peeled variables free.
/// Empty binder vectors collapse into their bodies. Throws
/// CyclicAttackGraphError when the attack graph has a cycle.
Rewriting rewrite(const ConjunctiveQuery& q);

/// Eliminates guarded minimizations that bind a single variable, replacing
///   Nabla[G] z . phi
/// by an unguarded minimization over a case split: where the guard is
/// supported the body's value passes through; elsewhere a sum dominates it;
/// and a global support factor zeroes everything when the guard holds
/// nowhere. Value-equivalent to the guarded form on every database. Throws
/// VectorGuardError on multi-variable guards.
LkPtr desugar_guarded(const LkPtr& f);

/// Reference evaluation of the consistent answers of the two-step path
/// query (binary R and S, first position the key) directly on the database:
/// sum over key values a of min over supported R(a,b) of
/// R(a,b) x min over supported S(b,c) of S(b,c), with empty minima zero.
Value mca_path_direct(const KDatabase& db);

} // namespace cqa

#endif
