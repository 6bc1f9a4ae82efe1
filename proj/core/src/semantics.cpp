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

#include "cqa/semantics.hpp"

#include <algorithm>

#include "cqa/error.hpp"

namespace cqa {

namespace {

const std::string& resolve(const Assignment& alpha, const std::string& var) {
    auto it = alpha.find(var);
    if (it == alpha.end())
        throw UnboundVariableError("variable " + var + " has no value in the assignment");
    return it->second;
}

Tuple resolve_tuple(const Assignment& alpha, const std::vector<std::string>& vars) {
    Tuple t;
    t.reserve(vars.size());
    for (const std::string& v : vars) t.push_back(resolve(alpha, v));
    return t;
}

std::span<const std::string> require_domain(std::span<const std::string> domain) {
    if (domain.empty())
        throw EmptyActiveDomainError("a quantifier has nothing to range over");
    return domain;
}

// ---------------------------------------------------------------------------
// first-order evaluation

struct FoEval {
    const KDatabase& db;
    const Semiring& sr;
    std::span<const std::string> domain;
    Assignment alpha;

    Value flatten(const Value& v, bool negated) {
        bool zero = sr.is_zero(v);
        return (zero == negated) ? sr.one() : sr.zero();
    }

    Value run(const FoFormula& f) {
        switch (f.kind) {
        case FoFormula::Kind::Atom:
            return db.lookup(f.relation, resolve_tuple(alpha, f.vars));
        case FoFormula::Kind::NegAtom:
            return flatten(db.lookup(f.relation, resolve_tuple(alpha, f.vars)), true);
        case FoFormula::Kind::Eq:
            return resolve(alpha, f.lhs) == resolve(alpha, f.rhs) ? sr.one() : sr.zero();
        case FoFormula::Kind::Neq:
            return resolve(alpha, f.lhs) != resolve(alpha, f.rhs) ? sr.one() : sr.zero();
        case FoFormula::Kind::And:
            return sr.mul(run(*f.left), run(*f.right));
        case FoFormula::Kind::Or:
            return sr.add(run(*f.left), run(*f.right));
        case FoFormula::Kind::Forall: {
            Value acc = sr.one();
            for (const std::string& a : require_domain(domain)) {
                auto saved = alpha.find(f.var) == alpha.end()
                                 ? std::optional<std::string>{}
                                 : std::optional<std::string>{alpha[f.var]};
                alpha[f.var] = a;
                acc = sr.mul(acc, run(*f.left));
                if (saved)
                    alpha[f.var] = *saved;
                else
                    alpha.erase(f.var);
            }
            return acc;
        }
        case FoFormula::Kind::Exists: {
            Value acc = sr.zero();
            for (const std::string& a : require_domain(domain)) {
                auto saved = alpha.find(f.var) == alpha.end()
                                 ? std::optional<std::string>{}
                                 : std::optional<std::string>{alpha[f.var]};
                alpha[f.var] = a;
                acc = sr.add(acc, run(*f.left));
                if (saved)
                    alpha[f.var] = *saved;
                else
                    alpha.erase(f.var);
            }
            return acc;
        }
        }
        throw ParseError("unreachable formula kind");
    }
};

} // namespace

Value eval_fo(const FoFormula& f, const KDatabase& db, const Assignment& alpha,
              std::span<const std::string> domain) {
    FoEval ev{db, db.semiring(), domain, alpha};
    return ev.run(f);
}

Value eval_fo(const FoFormula& f, const KDatabase& db, const Assignment& alpha) {
    std::vector<std::string> domain = db.empty() ? std::vector<std::string>{} : db.active_domain();
    return eval_fo(f, db, alpha, domain);
}

// ---------------------------------------------------------------------------
// conjunctive-query evaluation (backtracking join)

namespace {

struct CqJoin {
    const KDatabase& db;
    const Semiring& sr;
    const std::vector<QueryAtom>& atoms;
    Assignment alpha;
    Value total;

    void rec(std::size_t idx, const Value& acc) {
        if (idx == atoms.size()) {
            total = sr.add(total, acc);
            return;
        }
        const QueryAtom& atom = atoms[idx];
        const std::vector<std::string> vars = atom.all_vars();
        for (const auto& [tuple, ann] : db.relation(atom.relation)) {
            std::vector<std::string> newly;
            bool ok = true;
            for (std::size_t i = 0; i < vars.size() && ok; ++i) {
                auto it = alpha.find(vars[i]);
                if (it == alpha.end()) {
                    alpha[vars[i]] = tuple[i];
                    newly.push_back(vars[i]);
                } else if (it->second != tuple[i]) {
                    ok = false;
                }
            }
            if (ok) rec(idx + 1, sr.mul(acc, ann));
            for (const std::string& v : newly) alpha.erase(v);
        }
    }
};

} // namespace

Value eval_cq(const ConjunctiveQuery& q, const KDatabase& db, const Assignment& alpha) {
    for (const QueryAtom& a : q.atoms()) {
        const RelationSig& sig = db.sig(a.relation);
        if (a.arity() != sig.arity || a.key_len() != sig.key_len)
            throw SchemaError("atom " + a.relation + " does not match the database schema");
    }
    Assignment restricted;
    for (const std::string& v : q.free_vars()) restricted[v] = resolve(alpha, v);
    CqJoin join{db, db.semiring(), q.atoms(), std::move(restricted), db.semiring().zero()};
    join.rec(0, db.semiring().one());
    return join.total;
}

// ---------------------------------------------------------------------------
// rewriting-logic evaluation

namespace {

struct LkEval {
    const KDatabase& db;
    const Semiring& sr;
    std::span<const std::string> domain;
    Assignment alpha;

    // Iterates over all instantiations of vars from the domain.
    template <typename F>
    void sweep(const std::vector<std::string>& vars, std::size_t i, F&& each) {
        if (i == vars.size()) {
            each();
            return;
        }
        for (const std::string& a : require_domain(domain)) {
            auto saved = alpha.find(vars[i]) == alpha.end()
                             ? std::optional<std::string>{}
                             : std::optional<std::string>{alpha[vars[i]]};
            alpha[vars[i]] = a;
            sweep(vars, i + 1, each);
            if (saved)
                alpha[vars[i]] = *saved;
            else
                alpha.erase(vars[i]);
        }
    }

    Value run(const LkFormula& f) {
        switch (f.kind) {
        case LkFormula::Kind::Atom:
            return db.lookup(f.relation, resolve_tuple(alpha, f.vars));
        case LkFormula::Kind::Eq:
            return resolve(alpha, f.lhs) == resolve(alpha, f.rhs) ? sr.one() : sr.zero();
        case LkFormula::Kind::And:
            return sr.mul(run(*f.left), run(*f.right));
        case LkFormula::Kind::Or:
            return sr.add(run(*f.left), run(*f.right));
        case LkFormula::Kind::NotSupp:
            return sr.is_zero(run(*f.left)) ? sr.one() : sr.zero();
        case LkFormula::Kind::Exists: {
            Value acc = sr.zero();
            sweep(f.vars, 0, [&] { acc = sr.add(acc, run(*f.left)); });
            return acc;
        }
        case LkFormula::Kind::Nabla: {
            std::vector<Value> vals;
            sweep(f.vars, 0, [&] { vals.push_back(run(*f.left)); });
            return min_all(sr, vals);
        }
        case LkFormula::Kind::GuardedNabla:
            return guarded(f);
        }
        throw ParseError("unreachable formula kind");
    }

    // Minimum of the body over instantiations of the bound vector for which
    // the guard atom is supported; zero when no instantiation is. Matching
    // guard facts enumerate the supported instantiations directly (every
    // bound variable occurs in the guard, and stored facts only mention
    // active-domain values).
    Value guarded(const LkFormula& f) {
        // binder variables shadow any outer binding of the same name
        Assignment shadowed;
        for (const std::string& v : f.vars) {
            auto it = alpha.find(v);
            if (it != alpha.end()) {
                shadowed[v] = it->second;
                alpha.erase(it);
            }
        }
        std::vector<Value> vals;
        for (const auto& [tuple, ann] : db.relation(f.guard.relation)) {
            (void)ann; // stored facts are nonzero by the storage invariant
            std::vector<std::string> newly;
            bool ok = true;
            for (std::size_t i = 0; i < f.guard.vars.size() && ok; ++i) {
                const std::string& v = f.guard.vars[i];
                auto it = alpha.find(v);
                if (it == alpha.end()) {
                    bool binder = std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end();
                    if (!binder)
                        throw UnboundVariableError("guard variable " + v +
                                                   " is neither assigned nor bound");
                    alpha[v] = tuple[i];
                    newly.push_back(v);
                } else if (it->second != tuple[i]) {
                    ok = false;
                }
            }
            if (ok) vals.push_back(run(*f.left));
            for (const std::string& v : newly) alpha.erase(v);
        }
        for (const auto& [k, v] : shadowed) alpha[k] = v;
        return min_all(sr, vals);
    }
};

} // namespace

Value eval_lk(const LkFormula& f, const KDatabase& db, const Assignment& alpha,
              std::span<const std::string> domain) {
    LkEval ev{db, db.semiring(), domain, alpha};
    return ev.run(f);
}

Value eval_lk(const LkFormula& f, const KDatabase& db, const Assignment& alpha) {
    std::vector<std::string> domain = db.empty() ? std::vector<std::string>{} : db.active_domain();
    return eval_lk(f, db, alpha, domain);
}

bool satisfies(const KDatabase& db, const Assignment& alpha, const FoFormula& f) {
    return !db.semiring().is_zero(eval_fo(f, db, alpha));
}

// ---------------------------------------------------------------------------
// translations

LkPtr fo_to_lk(const FoFormula& f) {
    switch (f.kind) {
    case FoFormula::Kind::Atom:
        return lk::atom(f.relation, f.vars);
    case FoFormula::Kind::NegAtom:
        return lk::not_supp(lk::atom(f.relation, f.vars));
    case FoFormula::Kind::Eq:
        return lk::eq(f.lhs, f.rhs);
    case FoFormula::Kind::Neq:
        return lk::not_supp(lk::eq(f.lhs, f.rhs));
    case FoFormula::Kind::And:
        return lk::conj(fo_to_lk(*f.left), fo_to_lk(*f.right));
    case FoFormula::Kind::Or:
        return lk::disj(fo_to_lk(*f.left), fo_to_lk(*f.right));
    case FoFormula::Kind::Forall:
        return lk::nabla({f.var}, fo_to_lk(*f.left));
    case FoFormula::Kind::Exists:
        return lk::exists({f.var}, fo_to_lk(*f.left));
    }
    throw ParseError("unreachable formula kind");
}

namespace {

FoPtr lk_to_fo_rec(const LkFormula& f, bool negated);

// A guarded minimization is nonzero exactly when the guard is supported
// somewhere and the body is nonzero on every supported instantiation.
FoPtr guarded_to_fo(const LkFormula& f, bool negated) {
    FoPtr guard_atom = fo::atom(f.guard.relation, f.guard.vars);
    FoPtr some = fo::exists_all(f.vars, guard_atom);
    FoPtr all = fo::forall_all(
        f.vars, fo::disj(fo::neg_atom(f.guard.relation, f.guard.vars), lk_to_fo_rec(*f.left, false)));
    FoPtr positive = fo::conj(std::move(some), std::move(all));
    if (!negated) return positive;
    // negation: either no supported instantiation, or some supported one
    // falsifies the body
    FoPtr none = fo::forall_all(f.vars, fo::neg_atom(f.guard.relation, f.guard.vars));
    FoPtr bad = fo::exists_all(f.vars, fo::conj(fo::atom(f.guard.relation, f.guard.vars),
                                                lk_to_fo_rec(*f.left, true)));
    return fo::disj(std::move(none), std::move(bad));
}

FoPtr lk_to_fo_rec(const LkFormula& f, bool negated) {
    switch (f.kind) {
    case LkFormula::Kind::Atom:
        return negated ? fo::neg_atom(f.relation, f.vars) : fo::atom(f.relation, f.vars);
    case LkFormula::Kind::Eq:
        return negated ? fo::neq(f.lhs, f.rhs) : fo::eq(f.lhs, f.rhs);
    case LkFormula::Kind::And: {
        FoPtr l = lk_to_fo_rec(*f.left, negated), r = lk_to_fo_rec(*f.right, negated);
        return negated ? fo::disj(std::move(l), std::move(r)) : fo::conj(std::move(l), std::move(r));
    }
    case LkFormula::Kind::Or: {
        FoPtr l = lk_to_fo_rec(*f.left, negated), r = lk_to_fo_rec(*f.right, negated);
        return negated ? fo::conj(std::move(l), std::move(r)) : fo::disj(std::move(l), std::move(r));
    }
    case LkFormula::Kind::Exists: {
        FoPtr body = lk_to_fo_rec(*f.left, negated);
        return negated ? fo::forall_all(f.vars, std::move(body))
                       : fo::exists_all(f.vars, std::move(body));
    }
    case LkFormula::Kind::Nabla: {
        FoPtr body = lk_to_fo_rec(*f.left, negated);
        return negated ? fo::exists_all(f.vars, std::move(body))
                       : fo::forall_all(f.vars, std::move(body));
    }
    case LkFormula::Kind::GuardedNabla:
        return guarded_to_fo(f, negated);
    case LkFormula::Kind::NotSupp:
        return lk_to_fo_rec(*f.left, !negated);
    }
    throw ParseError("unreachable formula kind");
}

} // namespace

FoPtr lk_to_fo(const LkFormula& f) { return lk_to_fo_rec(f, false); }

FoPtr key_constraint_sentence(const RelationSig& sig) {
    if (sig.key_len == sig.arity) return nullptr;
    std::vector<std::string> keys, ys, zs;
    for (std::size_t i = 0; i < sig.key_len; ++i) keys.push_back("k" + std::to_string(i + 1));
    for (std::size_t i = sig.key_len; i < sig.arity; ++i) {
        ys.push_back("y" + std::to_string(i + 1));
        zs.push_back("z" + std::to_string(i + 1));
    }
    std::vector<std::string> first = keys, second = keys;
    first.insert(first.end(), ys.begin(), ys.end());
    second.insert(second.end(), zs.begin(), zs.end());
    FoPtr agree = fo::eq(ys[0], zs[0]);
    for (std::size_t i = 1; i < ys.size(); ++i)
        agree = fo::conj(agree, fo::eq(ys[i], zs[i]));
    FoPtr body = fo::disj(fo::neg_atom(sig.name, first),
                          fo::disj(fo::neg_atom(sig.name, second), std::move(agree)));
    std::vector<std::string> all = keys;
    all.insert(all.end(), ys.begin(), ys.end());
    all.insert(all.end(), zs.begin(), zs.end());
    return fo::forall_all(all, std::move(body));
}

FoPtr cq_to_fo(const ConjunctiveQuery& q) {
    if (q.atoms().empty())
        // no atoms: the empty product, value one everywhere
        return fo::forall("x", fo::eq("x", "x"));
    FoPtr body = fo::atom(q.atoms().front().relation, q.atoms().front().all_vars());
    for (std::size_t i = 1; i < q.atoms().size(); ++i)
        body = fo::conj(std::move(body), fo::atom(q.atoms()[i].relation, q.atoms()[i].all_vars()));
    std::set<std::string> bound = q.bound_vars();
    return fo::exists_all({bound.begin(), bound.end()}, std::move(body));
}

} // namespace cqa
