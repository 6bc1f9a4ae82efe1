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

#include "cqa/attack.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "cqa/error.hpp"

namespace cqa {

std::set<std::string> closure(const std::set<std::string>& xs, const FdSet& fds) {
    std::set<std::string> out = xs;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Fd& fd : fds) {
            if (!std::includes(out.begin(), out.end(), fd.lhs.begin(), fd.lhs.end())) continue;
            for (const std::string& v : fd.rhs)
                if (out.insert(v).second) changed = true;
        }
    }
    return out;
}

FdSet induced_fds(const ConjunctiveQuery& q) {
    FdSet out;
    for (const QueryAtom& a : q.atoms())
        out.push_back({{a.key_vars.begin(), a.key_vars.end()}, a.var_set()});
    return out;
}

FdSet induced_fds_without(const ConjunctiveQuery& q, std::string_view rel) {
    FdSet out;
    for (const QueryAtom& a : q.atoms())
        if (a.relation != rel)
            out.push_back({{a.key_vars.begin(), a.key_vars.end()}, a.var_set()});
    return out;
}

std::optional<std::vector<std::string>> attack_witness(const ConjunctiveQuery& q,
                                                       const QueryAtom& attacker,
                                                       const std::string& var) {
    if (!q.is_bound(var))
        throw ParseError("attack target " + var + " is not bound in query " + q.head());

    const std::set<std::string> keyclo =
        closure({attacker.key_vars.begin(), attacker.key_vars.end()},
                induced_fds_without(q, attacker.relation));
    const std::set<std::string> bound = q.bound_vars();
    auto allowed = [&](const std::string& v) { return bound.count(v) && !keyclo.count(v); };

    // co-occurrence adjacency over the allowed variables
    std::map<std::string, std::set<std::string>> adj;
    for (const QueryAtom& a : q.atoms()) {
        std::set<std::string> vs = a.var_set();
        for (const std::string& u : vs)
            for (const std::string& v : vs)
                if (u != v && allowed(u) && allowed(v)) adj[u].insert(v);
    }

    std::map<std::string, std::string> parent;
    std::deque<std::string> queue;
    for (const std::string& z : attacker.nonkey_vars) {
        if (allowed(z) && !parent.count(z)) {
            parent[z] = "";
            queue.push_back(z);
        }
    }
    while (!queue.empty()) {
        std::string u = queue.front();
        queue.pop_front();
        if (u == var) {
            std::vector<std::string> path;
            for (std::string w = u; !w.empty(); w = parent[w]) path.push_back(w);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const std::string& v : adj[u]) {
            if (!parent.count(v)) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    return std::nullopt;
}

bool attacks(const ConjunctiveQuery& q, const QueryAtom& attacker, const std::string& var) {
    return attack_witness(q, attacker, var).has_value();
}

AttackGraph AttackGraph::of(const ConjunctiveQuery& q) {
    AttackGraph g;
    g.nodes_ = q.atoms();
    for (const QueryAtom& from : g.nodes_) {
        for (const QueryAtom& to : g.nodes_) {
            if (from.relation == to.relation) continue;
            for (const std::string& k : to.key_vars) {
                if (!q.is_bound(k)) continue;
                if (auto w = attack_witness(q, from, k)) {
                    g.edges_.push_back({from.relation, to.relation, std::move(*w)});
                    break;
                }
            }
        }
    }
    return g;
}

bool AttackGraph::has_edge(std::string_view from, std::string_view to) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const AttackEdge& e) {
        return e.from == from && e.to == to;
    });
}

std::vector<std::string> AttackGraph::topo_order() const {
    std::map<std::string, std::size_t> indeg;
    for (const QueryAtom& n : nodes_) indeg[n.relation] = 0;
    for (const AttackEdge& e : edges_) ++indeg[e.to];
    std::set<std::string> ready;
    for (const auto& [rel, d] : indeg)
        if (d == 0) ready.insert(rel);
    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string rel = *ready.begin(); // lexicographically least
        ready.erase(ready.begin());
        order.push_back(rel);
        for (const AttackEdge& e : edges_)
            if (e.from == rel && --indeg[e.to] == 0) ready.insert(e.to);
    }
    if (order.size() != nodes_.size()) {
        std::string cyc;
        for (const std::string& r : find_cycle()) cyc += (cyc.empty() ? "" : " -> ") + r;
        throw CyclicAttackGraphError("the attack graph has a cycle: " + cyc);
    }
    return order;
}

bool AttackGraph::is_acyclic() const {
    try {
        topo_order();
        return true;
    } catch (const CyclicAttackGraphError&) {
        return false;
    }
}

std::vector<std::string> AttackGraph::unattacked_atoms() const {
    std::set<std::string> attacked;
    for (const AttackEdge& e : edges_) attacked.insert(e.to);
    std::vector<std::string> out;
    for (const QueryAtom& n : nodes_)
        if (!attacked.count(n.relation)) out.push_back(n.relation);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> AttackGraph::find_cycle() const {
    // DFS with colors; small graphs, clarity over speed
    std::map<std::string, int> color;
    std::map<std::string, std::string> parent;
    std::vector<std::string> cycle;
    std::function<bool(const std::string&)> dfs = [&](const std::string& u) {
        color[u] = 1;
        for (const AttackEdge& e : edges_) {
            if (e.from != u) continue;
            if (color[e.to] == 1) {
                cycle.push_back(e.to);
                for (std::string w = u; w != e.to; w = parent[w]) cycle.push_back(w);
                cycle.push_back(e.to);
                std::reverse(cycle.begin(), cycle.end());
                return true;
            }
            if (color[e.to] == 0) {
                parent[e.to] = u;
                if (dfs(e.to)) return true;
            }
        }
        color[u] = 2;
        return false;
    };
    for (const QueryAtom& n : nodes_)
        if (color[n.relation] == 0 && dfs(n.relation)) return cycle;
    return {};
}

std::string AttackGraph::to_dot() const {
    std::string out = "digraph attack {\n";
    for (const QueryAtom& n : nodes_) {
        std::string label = n.relation + "(";
        for (std::size_t i = 0; i < n.key_vars.size(); ++i)
            label += (i ? "," : "") + n.key_vars[i];
        label += ";";
        for (std::size_t i = 0; i < n.nonkey_vars.size(); ++i)
            label += (i ? "," : "") + n.nonkey_vars[i];
        label += ")";
        out += "  " + n.relation + " [label=\"" + label + "\"];\n";
    }
    for (const AttackEdge& e : edges_) {
        std::string w;
        for (std::size_t i = 0; i < e.witness.size(); ++i) w += (i ? "," : "") + e.witness[i];
        out += "  " + e.from + " -> " + e.to + " [label=\"" + w + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::set<std::string> unattacked_vars(const ConjunctiveQuery& q) {
    std::set<std::string> out;
    for (const std::string& v : q.bound_vars()) {
        bool hit = false;
        for (const QueryAtom& a : q.atoms())
            if (attacks(q, a, v)) {
                hit = true;
                break;
            }
        if (!hit) out.insert(v);
    }
    return out;
}

} // namespace cqa
