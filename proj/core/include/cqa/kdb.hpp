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

#ifndef CQA_KDB_HPP
#define CQA_KDB_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cqa/semiring.hpp"

namespace cqa {

/// Relation signature. The first key_len positions form the key.
struct RelationSig {
    std::string name;
    std::size_t arity = 0;
    std::size_t key_len = 0;

    friend bool operator==(const RelationSig&, const RelationSig&) = default;
};

/// Data values are opaque strings; a tuple is a row of them.
using Tuple = std::vector<std::string>;

/// Finite map from variables to data values.
using Assignment = std::map<std::string, std::string, std::less<>>;

struct Fact {
    std::string relation;
    Tuple tuple;
    Value annotation;
};

/// An annotated database over a fixed schema and semiring. Tuples with
/// annotation zero are never stored: absence encodes zero. Relations
/// iterate in lexicographic tuple order, which pins down repair enumeration
/// and circuit encodings.
class KDatabase {
public:
    KDatabase(std::vector<RelationSig> schema, const Semiring& sr);

    const Semiring& semiring() const { return *sr_; }
    const std::vector<RelationSig>& schema() const { return schema_; }
    bool has_relation(std::string_view name) const;
    const RelationSig& sig(std::string_view name) const; // throws SchemaError

    /// Inserts a fact. Zero annotations and arity mismatches are rejected.
    /// Re-inserting a stored tuple replaces its annotation.
    void insert(std::string_view rel, Tuple tuple, Value annotation);

    /// Stored annotation, or the semiring zero for absent tuples.
    Value lookup(std::string_view rel, const Tuple& tuple) const;

    const std::map<Tuple, Value>& relation(std::string_view name) const;

    std::size_t fact_count() const;
    bool empty() const { return fact_count() == 0; }

    /// All facts in canonical (relation, tuple) order.
    std::vector<Fact> facts() const;

    /// Boolean-annotated copy: same tuples, all annotations 1 over "bool".
    KDatabase support() const;

    /// Sorted list of data values occurring in stored tuples. Throws
    /// EmptyActiveDomainError when there are no facts.
    std::vector<std::string> active_domain() const;

private:
    std::vector<RelationSig> schema_;
    std::map<std::string, std::map<Tuple, Value>, std::less<>> rels_;
    const Semiring* sr_;
};

/// a is a sub-database of b: support inclusion and annotation agreement on
/// a's support. Throws SchemaError when schemas or semirings differ.
bool contains_subset(const KDatabase& a, const KDatabase& b);

/// Pointwise natural-order comparison on a's support (diagnostic companion
/// of contains_subset; repairs are defined via the latter).
bool leq_database(const KDatabase& a, const KDatabase& b);

} // namespace cqa

#endif
