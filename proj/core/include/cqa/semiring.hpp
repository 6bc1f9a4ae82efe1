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

#ifndef CQA_SEMIRING_HPP
#define CQA_SEMIRING_HPP

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cqa/bignat.hpp"

namespace cqa {

/// Tagged annotation value. Which alternative is legal depends on the
/// semiring: Boolean uses the bit, the counting semiring uses BigNat, the
/// real-valued semirings (tropical, Viterbi, fuzzy) use double, with +inf a
/// first-class tropical value.
class Value {
public:
    Value() : v_(false) {}

    static Value of_bool(bool b) { return Value(b); }
    static Value of_nat(BigNat n) { return Value(std::move(n)); }
    static Value of_nat(std::uint64_t n) { return Value(BigNat(n)); }
    static Value of_real(double d) { return Value(d); }

    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_nat() const { return std::holds_alternative<BigNat>(v_); }
    bool is_real() const { return std::holds_alternative<double>(v_); }

    bool as_bool() const;          // throws SemiringDomainError on tag mismatch
    const BigNat& as_nat() const;
    double as_real() const;

    /// Debug rendering, independent of any semiring's canonical format.
    std::string repr() const;

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

private:
    explicit Value(bool b) : v_(b) {}
    explicit Value(BigNat n) : v_(std::move(n)) {}
    explicit Value(double d) : v_(d) {}
    std::variant<bool, BigNat, double> v_;
};

/// A naturally ordered positive semiring (K, +, x, 0, 1) together with its
/// natural total order and a canonical text format for annotations.
///
/// Built-ins are registered by name: "bool", "nat", "trop", "viterbi",
/// "fuzzy". Additional semirings can be implemented behind this interface;
/// they are expected to pass check_axioms() on a representative sample.
class Semiring {
public:
    virtual ~Semiring() = default;

    const std::string& name() const { return name_; }

    virtual Value zero() const = 0;
    virtual Value one() const = 0;
    virtual Value add(const Value& a, const Value& b) const = 0;
    virtual Value mul(const Value& a, const Value& b) const = 0;

    /// The natural order a <= b iff some c satisfies a + c = b. Total for
    /// all built-ins; for the tropical semiring it is the reverse of the
    /// numeric order.
    virtual bool nat_leq(const Value& a, const Value& b) const = 0;

    /// Equality comparison tolerance: 0 for discrete semirings, an absolute
    /// epsilon for the real-valued ones.
    virtual double tolerance() const { return 0.0; }

    virtual bool equals(const Value& a, const Value& b) const;
    bool is_zero(const Value& a) const { return equals(a, zero()); }

    /// Checks the value lies in the semiring's domain; throws
    /// SemiringDomainError otherwise.
    virtual void validate(const Value& a) const = 0;

    /// Canonical text format. Round-trips exactly for discrete semirings.
    virtual Value parse(std::string_view text) const = 0;
    virtual std::string print(const Value& a) const = 0;

protected:
    explicit Semiring(std::string name) : name_(std::move(name)) {}

private:
    std::string name_;
};

/// Lookup by registered name; throws UnknownSemiringError.
const Semiring& semiring(std::string_view name);
std::vector<std::string> semiring_names();

/// Least element of a finite multiset under the natural order, with
/// min_all({}) = 0 by convention.
Value min_all(const Semiring& sr, std::span<const Value> values);
/// Greatest element under the natural order; max_all({}) = 0.
Value max_all(const Semiring& sr, std::span<const Value> values);

/// One detected axiom violation, rendered for diagnostics.
struct AxiomViolation {
    std::string law;
    std::string detail;
};

/// Empirically checks the semiring laws (monoid laws, distributivity,
/// annihilation, positivity, absence of zero-divisors, the order axioms and
/// monotonicity of multiplication) on every pair/triple drawn from `sample`.
std::vector<AxiomViolation> check_axioms(const Semiring& sr, std::span<const Value> sample);

} // namespace cqa

#endif
