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

#include "cqa/circuit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include <json.hpp>

#include "cqa/error.hpp"

namespace cqa {

InputLayout InputLayout::of(const std::vector<RelationSig>& schema, std::size_t n,
                            std::vector<std::string> slot_vars) {
    if (n < 1) throw CompileError("domain size must be at least 1");
    InputLayout layout;
    layout.domain_size = n;
    layout.slot_vars = std::move(slot_vars);
    std::size_t offset = 0;
    const std::size_t base = layout.components();
    for (const RelationSig& sig : schema) {
        std::size_t length = 1;
        for (std::size_t i = 0; i < sig.arity; ++i) length *= base;
        layout.relations.push_back({sig.name, sig.arity, offset, length});
        offset += length;
    }
    layout.total = offset;
    return layout;
}

const InputLayout::RelBlock& InputLayout::block(std::string_view relation) const {
    for (const RelBlock& b : relations)
        if (b.relation == relation) return b;
    throw SchemaError("no relation '" + std::string(relation) + "' in the circuit layout");
}

std::size_t InputLayout::flat_index(const RelBlock& b, std::span<const std::size_t> comps) const {
    std::size_t idx = 0;
    for (std::size_t c : comps) idx = idx * components() + c;
    return b.offset + idx;
}

namespace {

class Builder {
public:
    Builder(const LkFormula& root, std::size_t n, const std::vector<RelationSig>& schema,
            const Semiring& sr, std::vector<std::string> slots)
        : sr_(sr), layout_(InputLayout::of(schema, n, std::move(slots))), n_(n) {
        for (std::size_t i = 0; i < layout_.slot_vars.size(); ++i)
            env_[layout_.slot_vars[i]] = n_ + i;
        output_ = compile(root);
    }

    std::vector<Gate> take_gates() { return std::move(gates_); }
    std::uint32_t output() const { return output_; }
    InputLayout take_layout() { return std::move(layout_); }

private:
    const Semiring& sr_;
    InputLayout layout_;
    std::size_t n_;
    std::vector<Gate> gates_;
    std::map<std::string, std::size_t> env_; // variable -> component index
    std::map<std::size_t, std::uint32_t> input_cache_;
    std::uint32_t output_ = 0;

    std::uint32_t emit(Gate g) {
        gates_.push_back(std::move(g));
        return static_cast<std::uint32_t>(gates_.size() - 1);
    }

    std::uint32_t input_gate(const std::string& relation, const std::vector<std::string>& vars) {
        const InputLayout::RelBlock& b = layout_.block(relation);
        if (vars.size() != b.arity)
            throw SchemaError("atom " + relation + " has " + std::to_string(vars.size()) +
                              " arguments, the schema says " + std::to_string(b.arity));
        std::vector<std::size_t> comps;
        for (const std::string& v : vars) comps.push_back(component(v));
        std::size_t idx = layout_.flat_index(b, comps);
        auto it = input_cache_.find(idx);
        if (it != input_cache_.end()) return it->second;
        Gate g;
        g.kind = GateKind::Input;
        g.input_index = idx;
        std::uint32_t id = emit(std::move(g));
        input_cache_.emplace(idx, id);
        return id;
    }

    std::size_t component(const std::string& var) const {
        auto it = env_.find(var);
        if (it == env_.end())
            throw UnboundVariableError("variable " + var +
                                       " is neither quantified nor an assignment slot");
        return it->second;
    }

    std::uint32_t constant(const Value& v) {
        Gate g;
        g.kind = GateKind::Constant;
        g.constant = v;
        return emit(std::move(g));
    }

    std::uint32_t nary(GateKind kind, std::vector<std::uint32_t> inputs) {
        Gate g;
        g.kind = kind;
        g.inputs = std::move(inputs);
        return emit(std::move(g));
    }

    std::uint32_t mul2(std::uint32_t a, std::uint32_t b) { return nary(GateKind::Mul2, {a, b}); }

    // Runs `each` once per instantiation of vars over the n domain slots,
    // with env_ extended accordingly.
    void sweep(const std::vector<std::string>& vars, std::size_t i,
               const std::function<void()>& each) {
        if (i == vars.size()) {
            each();
            return;
        }
        auto saved = env_.find(vars[i]) == env_.end() ? std::optional<std::size_t>{}
                                                      : std::optional<std::size_t>{env_[vars[i]]};
        for (std::size_t c = 0; c < n_; ++c) {
            env_[vars[i]] = c;
            sweep(vars, i + 1, each);
        }
        if (saved)
            env_[vars[i]] = *saved;
        else
            env_.erase(vars[i]);
    }

    std::uint32_t compile(const LkFormula& f) {
        switch (f.kind) {
        case LkFormula::Kind::Atom:
            return input_gate(f.relation, f.vars);
        case LkFormula::Kind::Eq: {
            if (f.lhs == f.rhs) return constant(sr_.one());
            std::size_t a = component(f.lhs), b = component(f.rhs);
            if (a == b) return constant(sr_.one());
            if (a < n_ && b < n_) return constant(sr_.zero());
            throw CompileError("equality over assignment slots is not decidable at compile time");
        }
        case LkFormula::Kind::And:
            return mul2(compile(*f.left), compile(*f.right));
        case LkFormula::Kind::Or:
            return nary(GateKind::Add, {compile(*f.left), compile(*f.right)});
        case LkFormula::Kind::NotSupp:
            return nary(GateKind::NotSupp, {compile(*f.left)});
        case LkFormula::Kind::Exists: {
            std::vector<std::uint32_t> parts;
            sweep(f.vars, 0, [&] { parts.push_back(compile(*f.left)); });
            return nary(GateKind::Add, std::move(parts));
        }
        case LkFormula::Kind::Nabla: {
            std::vector<std::uint32_t> parts;
            sweep(f.vars, 0, [&] { parts.push_back(compile(*f.left)); });
            return nary(GateKind::Min, std::move(parts));
        }
        case LkFormula::Kind::GuardedNabla:
            return guarded(f);
        }
        throw CompileError("unreachable formula kind");
    }

    // Guarded minimization, by the same case split that eliminates guards
    // in the logic: per instantiation b the branch value is
    //   NSupp(guard_b) x (sum of all bodies) x chi + body_b x chi
    // with chi = Supp(sum of all guards); the min gate over the branches
    // yields the least body value among supported instantiations, and zero
    // when the guard holds nowhere.
    std::uint32_t guarded(const LkFormula& f) {
        std::vector<std::uint32_t> guards, bodies;
        sweep(f.vars, 0, [&] {
            guards.push_back(input_gate(f.guard.relation, f.guard.vars));
            bodies.push_back(compile(*f.left));
        });
        std::uint32_t body_sum = nary(GateKind::Add, bodies);
        std::uint32_t chi = nary(GateKind::NotSupp,
                                 {nary(GateKind::NotSupp, {nary(GateKind::Add, guards)})});
        std::vector<std::uint32_t> branches;
        for (std::size_t i = 0; i < guards.size(); ++i) {
            std::uint32_t miss = mul2(mul2(nary(GateKind::NotSupp, {guards[i]}), body_sum), chi);
            std::uint32_t hit = mul2(bodies[i], chi);
            branches.push_back(nary(GateKind::Add, {miss, hit}));
        }
        return nary(GateKind::Min, std::move(branches));
    }
};

} // namespace

Circuit Circuit::compile(const LkFormula& f, std::size_t n,
                         const std::vector<RelationSig>& schema, const Semiring& sr,
                         std::vector<std::string> assignment_slots) {
    for (const std::string& v : lk_free_vars(f)) {
        if (std::find(assignment_slots.begin(), assignment_slots.end(), v) ==
            assignment_slots.end())
            throw CompileError("free variable " + v + " needs an assignment slot");
    }
    Builder b(f, n, schema, sr, std::move(assignment_slots));
    Circuit c;
    c.gates_ = b.take_gates();
    c.output_ = b.output();
    c.layout_ = b.take_layout();
    c.sr_ = &sr;
    return c;
}

Circuit::Stats Circuit::stats() const {
    std::vector<std::size_t> depth(gates_.size(), 0);
    std::size_t max_depth = 0;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        for (std::uint32_t in : gates_[i].inputs)
            depth[i] = std::max(depth[i], depth[in] + 1);
        max_depth = std::max(max_depth, depth[i]);
    }
    return {max_depth, gates_.size()};
}

Value Circuit::evaluate(std::span<const Value> encoding) const {
    if (encoding.size() != layout_.total)
        throw DomainOverflowError("encoding has " + std::to_string(encoding.size()) +
                                  " values, the layout needs " + std::to_string(layout_.total));
    std::vector<Value> val(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
        case GateKind::Input:
            val[i] = encoding[g.input_index];
            break;
        case GateKind::Constant:
            val[i] = g.constant;
            break;
        case GateKind::Add: {
            Value acc = sr_->zero();
            for (std::uint32_t in : g.inputs) acc = sr_->add(acc, val[in]);
            val[i] = acc;
            break;
        }
        case GateKind::Mul2:
            val[i] = sr_->mul(val[g.inputs[0]], val[g.inputs[1]]);
            break;
        case GateKind::Min: {
            std::vector<Value> xs;
            xs.reserve(g.inputs.size());
            for (std::uint32_t in : g.inputs) xs.push_back(val[in]);
            val[i] = min_all(*sr_, xs);
            break;
        }
        case GateKind::NotSupp:
            val[i] = sr_->is_zero(val[g.inputs[0]]) ? sr_->one() : sr_->zero();
            break;
        }
    }
    return val[output_];
}

namespace {
const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::Input: return "input";
    case GateKind::Constant: return "constant";
    case GateKind::Add: return "add";
    case GateKind::Mul2: return "mul2";
    case GateKind::Min: return "min";
    case GateKind::NotSupp: return "notsupp";
    }
    return "?";
}
} // namespace

std::string Circuit::to_dot() const {
    std::string out = "digraph circuit {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        std::string label = kind_name(g.kind);
        if (g.kind == GateKind::Input) {
            // recover relation/slot from the layout for readability
            for (const auto& b : layout_.relations)
                if (g.input_index >= b.offset && g.input_index < b.offset + b.length)
                    label = b.relation + "[" + std::to_string(g.input_index - b.offset) + "]";
        }
        if (g.kind == GateKind::Constant) label = "const " + sr_->print(g.constant);
        out += "  g" + std::to_string(i) + " [label=\"" + label + "\"];\n";
        for (std::uint32_t in : g.inputs)
            out += "  g" + std::to_string(in) + " -> g" + std::to_string(i) + ";\n";
    }
    out += "  g" + std::to_string(output_) + " [shape=doublecircle];\n}\n";
    return out;
}

std::string Circuit::to_json_string() const {
    nlohmann::json j;
    j["domain_size"] = layout_.domain_size;
    j["assignment_slots"] = layout_.slot_vars;
    j["inputs"] = layout_.total;
    j["output"] = output_;
    j["relations"] = nlohmann::json::array();
    for (const auto& b : layout_.relations)
        j["relations"].push_back({{"name", b.relation},
                                  {"arity", b.arity},
                                  {"offset", b.offset},
                                  {"length", b.length}});
    j["gates"] = nlohmann::json::array();
    for (const Gate& g : gates_) {
        nlohmann::json gj;
        gj["type"] = kind_name(g.kind);
        if (g.kind == GateKind::Input)
            gj["input"] = g.input_index;
        else if (g.kind == GateKind::Constant)
            gj["value"] = sr_->print(g.constant);
        else
            gj["inputs"] = g.inputs;
        j["gates"].push_back(std::move(gj));
    }
    return j.dump(2);
}

std::vector<Value> encode(const KDatabase& db, const Assignment& alpha, std::size_t n,
                          const std::vector<std::string>& slot_vars) {
    InputLayout layout = InputLayout::of(db.schema(), n, slot_vars);
    std::vector<std::string> actual = db.empty() ? std::vector<std::string>{} : db.active_domain();
    if (actual.size() > n)
        throw DomainOverflowError("active domain has " + std::to_string(actual.size()) +
                                  " values, the circuit allows " + std::to_string(n));
    std::vector<Value> out(layout.total, db.semiring().zero());
    const std::size_t base = layout.components();
    for (const auto& block : layout.relations) {
        Tuple tuple(block.arity);
        for (std::size_t flat = 0; flat < block.length; ++flat) {
            std::size_t rest = flat;
            bool padded = false;
            for (std::size_t pos = block.arity; pos-- > 0;) {
                std::size_t comp = rest % base;
                rest /= base;
                if (comp < actual.size()) {
                    tuple[pos] = actual[comp];
                } else if (comp < n) {
                    padded = true; // padding slot: no fact mentions it
                    break;
                } else {
                    const std::string& var = layout.slot_vars[comp - n];
                    auto it = alpha.find(var);
                    if (it == alpha.end())
                        throw UnboundVariableError("assignment slot " + var + " has no value");
                    tuple[pos] = it->second;
                }
            }
            if (padded) continue;
            Value v = db.lookup(block.relation, tuple);
            if (!db.semiring().is_zero(v)) out[block.offset + flat] = v;
        }
    }
    return out;
}

std::vector<std::string> padded_domain(const KDatabase& db, std::size_t n) {
    std::vector<std::string> dom = db.empty() ? std::vector<std::string>{} : db.active_domain();
    if (dom.size() > n)
        throw DomainOverflowError("active domain has " + std::to_string(dom.size()) +
                                  " values, requested size " + std::to_string(n));
    std::set<std::string> seen(dom.begin(), dom.end());
    std::size_t k = 1;
    while (dom.size() < n) {
        std::string pad = "_pad" + std::to_string(k++);
        if (seen.count(pad)) continue;
        dom.push_back(pad);
    }
    return dom;
}

} // namespace cqa
