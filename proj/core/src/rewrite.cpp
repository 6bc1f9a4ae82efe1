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

#include "cqa/rewrite.hpp"

#include <algorithm>

#include "cqa/attack.hpp"
#include "cqa/error.hpp"

namespace cqa {

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
    std::string name = base + "'";
    while (used.count(name)) name += "'";
    return name;
}

// Deduplicated (first occurrence) list of the atom's variables from `part`
// that are bound in q and not already taken.
std::vector<std::string> peelable(const ConjunctiveQuery& q, const std::vector<std::string>& part,
                                  const std::vector<std::string>& taken) {
    std::vector<std::string> out;
    for (const std::string& v : part) {
        if (!q.is_bound(v)) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        if (std::find(taken.begin(), taken.end(), v) != taken.end()) continue;
        out.push_back(v);
    }
    return out;
}

LkPtr rewrite_rec(const ConjunctiveQuery& q, std::vector<RewriteStep>& trace,
                  std::set<std::string>& used) {
    // The attack graph is recomputed per residual query; peeling an
    // unattacked atom keeps it acyclic, and the graphs are tiny.
    AttackGraph g = AttackGraph::of(q);
    const std::vector<std::string> unattacked = g.unattacked_atoms();
    if (unattacked.empty())
        throw CyclicAttackGraphError("residual query " + q.to_string() + " has no unattacked atom");
    const std::string rel = unattacked.front();
    const QueryAtom atom = q.atom(rel);

    std::vector<std::string> keys = peelable(q, atom.key_vars, {});
    std::vector<std::string> nonkeys = peelable(q, atom.nonkey_vars, keys);

    std::vector<std::string> peeled = keys;
    peeled.insert(peeled.end(), nonkeys.begin(), nonkeys.end());
    ConjunctiveQuery residual = q.unbind_all(peeled).remove_atom(rel);
    trace.push_back({atom, keys, nonkeys, residual});

    // The minimization must range over every fact that shares the key, so
    // each non-key position gets its own binder variable. A position keeps
    // its query variable when that variable is bound here and nowhere else
    // in the atom; a position holding a free variable, a key variable, or a
    // repeat binds a fresh variable pinned by an equality, which zeroes the
    // branch on facts that do not realize the pattern.
    std::set<std::string> keyset(atom.key_vars.begin(), atom.key_vars.end());
    std::set<std::string> taken;
    std::vector<std::string> binder;
    std::vector<std::string> guard_vars = atom.key_vars;
    std::vector<std::pair<std::string, std::string>> pins; // fresh = original
    for (const std::string& v : atom.nonkey_vars) {
        bool plain = q.is_bound(v) && !keyset.count(v) && !taken.count(v);
        if (plain) {
            taken.insert(v);
            binder.push_back(v);
            guard_vars.push_back(v);
        } else {
            std::string w = fresh_name(v, used);
            used.insert(w);
            binder.push_back(w);
            guard_vars.push_back(w);
            pins.emplace_back(w, v);
        }
    }

    LkPtr body = lk::atom(atom.relation, guard_vars);
    for (const auto& [w, v] : pins) body = lk::conj(std::move(body), lk::eq(w, v));
    if (!residual.atoms().empty())
        body = lk::conj(std::move(body), rewrite_rec(residual, trace, used));

    // the binder factories collapse empty vectors into the body
    LkPtr guarded = binder.empty()
                        ? std::move(body)
                        : lk::guarded_nabla({atom.relation, guard_vars}, binder, std::move(body));
    return lk::exists(std::move(keys), std::move(guarded));
}

} // namespace

Rewriting rewrite(const ConjunctiveQuery& q) {
    if (q.atoms().empty())
        throw ParseError("query " + q.head() + " has no atoms; nothing to rewrite");
    AttackGraph g = AttackGraph::of(q);
    if (!g.is_acyclic()) {
        std::string cyc;
        for (const std::string& r : g.find_cycle()) cyc += (cyc.empty() ? "" : " -> ") + r;
        throw CyclicAttackGraphError("query " + q.head() +
                                     " is not rewritable; attack cycle: " + cyc);
    }
    Rewriting out;
    std::set<std::string> used = q.body_vars();
    used.insert(q.free_vars().begin(), q.free_vars().end());
    out.formula = rewrite_rec(q, out.trace, used);
    return out;
}

namespace {

LkPtr desugar_rec(const LkPtr& f, const std::set<std::string>& used) {
    switch (f->kind) {
    case LkFormula::Kind::Atom:
    case LkFormula::Kind::Eq:
        return f;
    case LkFormula::Kind::And:
        return lk::conj(desugar_rec(f->left, used), desugar_rec(f->right, used));
    case LkFormula::Kind::Or:
        return lk::disj(desugar_rec(f->left, used), desugar_rec(f->right, used));
    case LkFormula::Kind::NotSupp:
        return lk::not_supp(desugar_rec(f->left, used));
    case LkFormula::Kind::Exists:
        return lk::exists(f->vars, desugar_rec(f->left, used));
    case LkFormula::Kind::Nabla:
        return lk::nabla(f->vars, desugar_rec(f->left, used));
    case LkFormula::Kind::GuardedNabla: {
        if (f->vars.size() != 1)
            throw VectorGuardError("guarded minimization over " +
                                   std::to_string(f->vars.size()) +
                                   " variables has no single-variable elimination");
        const std::string& z = f->vars.front();
        const std::string zp = fresh_name(z, used);
        LkPtr body = desugar_rec(f->left, used);

        LkGuard guard_zp = f->guard;
        for (std::string& v : guard_zp.vars)
            if (v == z) v = zp;

        LkPtr guard_here = lk::atom(f->guard.relation, f->guard.vars);
        LkPtr body_zp = lk_substitute(body, z, zp);
        LkPtr chi = lk::supp(lk::exists({zp}, lk::atom(guard_zp.relation, guard_zp.vars)));

        LkPtr unsupported_branch = lk::conj(
            lk::conj(lk::not_supp(std::move(guard_here)), lk::exists({zp}, std::move(body_zp))),
            chi);
        LkPtr supported_branch = lk::conj(std::move(body), chi);
        return lk::nabla({z}, lk::disj(std::move(unsupported_branch), std::move(supported_branch)));
    }
    }
    throw ParseError("unreachable formula kind");
}

} // namespace

LkPtr desugar_guarded(const LkPtr& f) { return desugar_rec(f, lk_all_vars(*f)); }

Value mca_path_direct(const KDatabase& db) {
    const Semiring& sr = db.semiring();
    for (const char* rel : {"R", "S"}) {
        if (!db.has_relation(rel))
            throw SchemaError(std::string("the path query needs a relation ") + rel);
        const RelationSig& sig = db.sig(rel);
        if (sig.arity != 2 || sig.key_len != 1)
            throw SchemaError(std::string(rel) + " must be binary with its first position the key");
    }
    if (db.empty()) return sr.zero();

    Value total = sr.zero();
    for (const std::string& a : db.active_domain()) {
        std::vector<Value> choices;
        for (const auto& [rt, rann] : db.relation("R")) {
            if (rt[0] != a) continue;
            const std::string& b = rt[1];
            std::vector<Value> svals;
            for (const auto& [st, sann] : db.relation("S"))
                if (st[0] == b) svals.push_back(sann);
            choices.push_back(sr.mul(rann, min_all(sr, svals)));
        }
        total = sr.add(total, min_all(sr, choices));
    }
    return total;
}

} // namespace cqa
