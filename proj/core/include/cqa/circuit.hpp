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

#ifndef CQA_CIRCUIT_HPP
#define CQA_CIRCUIT_HPP

#include <cstdint>

#include "cqa/kdb.hpp"
#include "cqa/lk.hpp"

namespace cqa {

enum class GateKind { Input, Constant, Add, Mul2, Min, NotSupp };

struct Gate {
    GateKind kind;
    std::vector<std::uint32_t> inputs; // predecessor gate ids
    Value constant;                    // Constant gates
    std::size_t input_index = 0;       // Input gates: position in the encoding
};

/// Fixed ordering of the circuit inputs. For each relation (in schema
/// order) there is one input per tuple over the n ordered domain slots
/// followed by the declared assignment slots, enumerated row-major. The
/// encoding of a database is the flat vector of annotations under this
/// ordering, zero for absent tuples.
struct InputLayout {
    struct RelBlock {
        std::string relation;
        std::size_t arity;
        std::size_t offset;
        std::size_t length;
    };

    std::size_t domain_size = 0;
    std::vector<std::string> slot_vars;
    std::vector<RelBlock> relations;
    std::size_t total = 0;

    std::size_t components() const { return domain_size + slot_vars.size(); }
    static InputLayout of(const std::vector<RelationSig>& schema, std::size_t n,
                          std::vector<std::string> slot_vars);
    const RelBlock& block(std::string_view relation) const; // throws SchemaError
    /// Row-major position of a tuple of component indices within the block.
    std::size_t flat_index(const RelBlock& b, std::span<const std::size_t> comps) const;
};

/// A semiring circuit: a DAG of input / constant / addition / binary
/// multiplication / min / support-negation gates with one output. For a
/// fixed formula the construction has a depth independent of the domain
/// size; widths (gate fan-ins and counts) grow polynomially with it.
class Circuit {
public:
    /// Compiles a formula against domain size n. Free variables of the
    /// formula must be listed as assignment slots. Equality atoms are
    /// resolvable only when decidable at compile time (both sides
    /// quantifier-bound, or syntactically identical).
    static Circuit compile(const LkFormula& f, std::size_t n,
                           const std::vector<RelationSig>& schema, const Semiring& sr,
                           std::vector<std::string> assignment_slots = {});

    const Semiring& semiring() const { return *sr_; }
    const InputLayout& layout() const { return layout_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::uint32_t output() const { return output_; }

    struct Stats {
        std::size_t depth;
        std::size_t size;
    };
    Stats stats() const;

    /// Evaluates the circuit on an encoded database; the encoding length
    /// must match the layout.
    Value evaluate(std::span<const Value> encoding) const;

    std::string to_dot() const;
    std::string to_json_string() const;

private:
    std::vector<Gate> gates_;
    std::uint32_t output_ = 0;
    InputLayout layout_;
    const Semiring* sr_ = nullptr;
};

/// Flat encoding of a database (plus an assignment for the slot variables)
/// under the layout of its schema at domain size n. The active domain is
/// mapped to the first slots in lexicographic order; remaining slots act as
/// padding elements that no fact mentions. Throws DomainOverflowError when
/// the active domain exceeds n.
std::vector<Value> encode(const KDatabase& db, const Assignment& alpha, std::size_t n,
                          const std::vector<std::string>& slot_vars = {});

/// The database's active domain padded with fresh inert values up to size
/// n: the domain a circuit of size n quantifies over.
std::vector<std::string> padded_domain(const KDatabase& db, std::size_t n);

} // namespace cqa

#endif
