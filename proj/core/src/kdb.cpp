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

#include "cqa/kdb.hpp"

#include <set>

#include "cqa/error.hpp"

namespace cqa {

KDatabase::KDatabase(std::vector<RelationSig> schema, const Semiring& sr)
    : schema_(std::move(schema)), sr_(&sr) {
    std::set<std::string> seen;
    for (const RelationSig& s : schema_) {
        if (s.arity == 0) throw SchemaError("relation " + s.name + " has arity 0");
        if (s.key_len > s.arity)
            throw SchemaError("relation " + s.name + " declares more key positions than its arity");
        if (!seen.insert(s.name).second)
            throw SchemaError("duplicate relation " + s.name + " in schema");
        rels_[s.name];
    }
}

bool KDatabase::has_relation(std::string_view name) const {
    return rels_.find(name) != rels_.end();
}

const RelationSig& KDatabase::sig(std::string_view name) const {
    for (const RelationSig& s : schema_)
        if (s.name == name) return s;
    throw SchemaError("unknown relation '" + std::string(name) + "'");
}

void KDatabase::insert(std::string_view rel, Tuple tuple, Value annotation) {
    const RelationSig& s = sig(rel);
    if (tuple.size() != s.arity)
        throw SchemaError("relation " + s.name + " has arity " + std::to_string(s.arity) +
                          ", got a tuple of width " + std::to_string(tuple.size()));
    sr_->validate(annotation);
    if (sr_->is_zero(annotation))
        throw SemiringDomainError("zero-annotated facts are not storable (relation " + s.name + ")");
    rels_.find(rel)->second.insert_or_assign(std::move(tuple), std::move(annotation));
}

Value KDatabase::lookup(std::string_view rel, const Tuple& tuple) const {
    const RelationSig& s = sig(rel);
    if (tuple.size() != s.arity)
        throw SchemaError("relation " + s.name + " has arity " + std::to_string(s.arity) +
                          ", got a tuple of width " + std::to_string(tuple.size()));
    const auto& m = rels_.find(rel)->second;
    auto it = m.find(tuple);
    return it == m.end() ? sr_->zero() : it->second;
}

const std::map<Tuple, Value>& KDatabase::relation(std::string_view name) const {
    auto it = rels_.find(name);
    if (it == rels_.end()) throw SchemaError("unknown relation '" + std::string(name) + "'");
    return it->second;
}

std::size_t KDatabase::fact_count() const {
    std::size_t n = 0;
    for (const auto& [_, m] : rels_) n += m.size();
    return n;
}

std::vector<Fact> KDatabase::facts() const {
    std::vector<Fact> out;
    out.reserve(fact_count());
    for (const RelationSig& s : schema_)
        for (const auto& [tuple, ann] : rels_.find(s.name)->second)
            out.push_back({s.name, tuple, ann});
    return out;
}

KDatabase KDatabase::support() const {
    KDatabase out(schema_, cqa::semiring("bool"));
    for (const auto& [rel, m] : rels_)
        for (const auto& [tuple, _] : m) out.insert(rel, tuple, Value::of_bool(true));
    return out;
}

std::vector<std::string> KDatabase::active_domain() const {
    std::set<std::string> dom;
    for (const auto& [_, m] : rels_)
        for (const auto& [tuple, ann] : m) dom.insert(tuple.begin(), tuple.end());
    if (dom.empty())
        throw EmptyActiveDomainError("database stores no facts");
    return {dom.begin(), dom.end()};
}

namespace {
void require_same_shape(const KDatabase& a, const KDatabase& b) {
    if (a.schema() != b.schema())
        throw SchemaError("databases have different schemas");
    if (a.semiring().name() != b.semiring().name())
        throw SchemaError("databases use different semirings (" + a.semiring().name() + " vs " +
                          b.semiring().name() + ")");
}
} // namespace

bool contains_subset(const KDatabase& a, const KDatabase& b) {
    require_same_shape(a, b);
    const Semiring& sr = a.semiring();
    for (const Fact& f : a.facts()) {
        Value other = b.lookup(f.relation, f.tuple);
        if (sr.is_zero(other) || !sr.equals(f.annotation, other)) return false;
    }
    return true;
}

bool leq_database(const KDatabase& a, const KDatabase& b) {
    require_same_shape(a, b);
    const Semiring& sr = a.semiring();
    for (const Fact& f : a.facts())
        if (!sr.nat_leq(f.annotation, b.lookup(f.relation, f.tuple))) return false;
    return true;
}

} // namespace cqa
