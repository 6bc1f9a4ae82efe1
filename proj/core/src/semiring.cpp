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

#include "cqa/semiring.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "cqa/error.hpp"

namespace cqa {

bool Value::as_bool() const {
    if (const bool* b = std::get_if<bool>(&v_)) return *b;
    throw SemiringDomainError("expected a Boolean value, got " + repr());
}

const BigNat& Value::as_nat() const {
    if (const BigNat* n = std::get_if<BigNat>(&v_)) return *n;
    throw SemiringDomainError("expected a natural number value, got " + repr());
}

double Value::as_real() const {
    if (const double* d = std::get_if<double>(&v_)) return *d;
    throw SemiringDomainError("expected a real value, got " + repr());
}

std::string Value::repr() const {
    if (is_bool()) return as_bool() ? "1b" : "0b";
    if (is_nat()) return as_nat().to_decimal() + "n";
    double d = as_real();
    if (std::isinf(d)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9gr", d);
    return buf;
}

bool Semiring::equals(const Value& a, const Value& b) const {
    validate(a);
    validate(b);
    if (tolerance() == 0.0) return a == b;
    double x = a.as_real(), y = b.as_real();
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::fabs(x - y) <= tolerance();
}

namespace {

constexpr double kRealTolerance = 1e-9;

std::string print_real(double d) {
    if (std::isinf(d)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", d);
    return buf;
}

double parse_real(std::string_view text) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double d = std::stod(std::string(text), &pos);
        if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'");
        return d;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad numeric literal '" + std::string(text) + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("numeric literal out of range '" + std::string(text) + "'");
    }
}

class BoolSemiring final : public Semiring {
public:
    BoolSemiring() : Semiring("bool") {}
    Value zero() const override { return Value::of_bool(false); }
    Value one() const override { return Value::of_bool(true); }
    Value add(const Value& a, const Value& b) const override {
        return Value::of_bool(a.as_bool() || b.as_bool());
    }
    Value mul(const Value& a, const Value& b) const override {
        return Value::of_bool(a.as_bool() && b.as_bool());
    }
    bool nat_leq(const Value& a, const Value& b) const override {
        return !a.as_bool() || b.as_bool();
    }
    void validate(const Value& a) const override { a.as_bool(); }
    Value parse(std::string_view text) const override {
        if (text == "0") return zero();
        if (text == "1") return one();
        throw ParseError("Boolean annotation must be 0 or 1, got '" + std::string(text) + "'");
    }
    std::string print(const Value& a) const override { return a.as_bool() ? "1" : "0"; }
};

class BagSemiring final : public Semiring {
public:
    BagSemiring() : Semiring("nat") {}
    Value zero() const override { return Value::of_nat(BigNat()); }
    Value one() const override { return Value::of_nat(BigNat(1)); }
    Value add(const Value& a, const Value& b) const override {
        return Value::of_nat(a.as_nat() + b.as_nat());
    }
    Value mul(const Value& a, const Value& b) const override {
        return Value::of_nat(a.as_nat() * b.as_nat());
    }
    bool nat_leq(const Value& a, const Value& b) const override {
        return a.as_nat() <= b.as_nat();
    }
    void validate(const Value& a) const override { a.as_nat(); }
    Value parse(std::string_view text) const override {
        return Value::of_nat(BigNat::from_decimal(text));
    }
    std::string print(const Value& a) const override { return a.as_nat().to_decimal(); }
};

// Shared base for the real-valued semirings; only the interval and the two
// operations differ.
class RealSemiring : public Semiring {
public:
    using Semiring::Semiring;
    double tolerance() const override { return kRealTolerance; }
    Value parse(std::string_view text) const override {
        Value v = Value::of_real(parse_real(text));
        validate(v);
        return v;
    }
    std::string print(const Value& a) const override { return print_real(a.as_real()); }
};

class TropicalSemiring final : public RealSemiring {
public:
    TropicalSemiring() : RealSemiring("trop") {}
    Value zero() const override { return Value::of_real(std::numeric_limits<double>::infinity()); }
    Value one() const override { return Value::of_real(0.0); }
    Value add(const Value& a, const Value& b) const override {
        return Value::of_real(std::min(a.as_real(), b.as_real()));
    }
    Value mul(const Value& a, const Value& b) const override {
        return Value::of_real(a.as_real() + b.as_real());
    }
    // Natural order is the reverse of the numeric one: inf (the zero) is
    // least, 0 (the one) is greatest among [0, inf].
    bool nat_leq(const Value& a, const Value& b) const override {
        double x = a.as_real(), y = b.as_real();
        if (std::isinf(x)) return true;
        if (std::isinf(y)) return false;
        return y <= x + kRealTolerance;
    }
    void validate(const Value& a) const override {
        double d = a.as_real();
        if (std::isnan(d) || d < 0.0)
            throw SemiringDomainError("tropical value must be in [0, inf], got " + print_real(d));
    }
};

class ViterbiSemiring final : public RealSemiring {
public:
    ViterbiSemiring() : RealSemiring("viterbi") {}
    Value zero() const override { return Value::of_real(0.0); }
    Value one() const override { return Value::of_real(1.0); }
    Value add(const Value& a, const Value& b) const override {
        return Value::of_real(std::max(a.as_real(), b.as_real()));
    }
    Value mul(const Value& a, const Value& b) const override {
        return Value::of_real(a.as_real() * b.as_real());
    }
    bool nat_leq(const Value& a, const Value& b) const override {
        return a.as_real() <= b.as_real() + kRealTolerance;
    }
    void validate(const Value& a) const override {
        double d = a.as_real();
        if (std::isnan(d) || d < 0.0 || d > 1.0)
            throw SemiringDomainError("Viterbi value must be in [0,1], got " + print_real(d));
    }
};

class FuzzySemiring final : public RealSemiring {
public:
    FuzzySemiring() : RealSemiring("fuzzy") {}
    Value zero() const override { return Value::of_real(0.0); }
    Value one() const override { return Value::of_real(1.0); }
    Value add(const Value& a, const Value& b) const override {
        return Value::of_real(std::max(a.as_real(), b.as_real()));
    }
    Value mul(const Value& a, const Value& b) const override {
        return Value::of_real(std::min(a.as_real(), b.as_real()));
    }
    bool nat_leq(const Value& a, const Value& b) const override {
        return a.as_real() <= b.as_real() + kRealTolerance;
    }
    void validate(const Value& a) const override {
        double d = a.as_real();
        if (std::isnan(d) || d < 0.0 || d > 1.0)
            throw SemiringDomainError("fuzzy value must be in [0,1], got " + print_real(d));
    }
};

} // namespace

const Semiring& semiring(std::string_view name) {
    static const BoolSemiring boolean;
    static const BagSemiring bag;
    static const TropicalSemiring tropical;
    static const ViterbiSemiring viterbi;
    static const FuzzySemiring fuzzy;
    if (name == "bool") return boolean;
    if (name == "nat") return bag;
    if (name == "trop") return tropical;
    if (name == "viterbi") return viterbi;
    if (name == "fuzzy") return fuzzy;
    throw UnknownSemiringError("no semiring named '" + std::string(name) + "'");
}

std::vector<std::string> semiring_names() {
    return {"bool", "nat", "trop", "viterbi", "fuzzy"};
}

Value min_all(const Semiring& sr, std::span<const Value> values) {
    if (values.empty()) return sr.zero();
    Value best = values.front();
    for (std::size_t i = 1; i < values.size(); ++i)
        if (sr.nat_leq(values[i], best) && !sr.nat_leq(best, values[i])) best = values[i];
    return best;
}

Value max_all(const Semiring& sr, std::span<const Value> values) {
    if (values.empty()) return sr.zero();
    Value best = values.front();
    for (std::size_t i = 1; i < values.size(); ++i)
        if (sr.nat_leq(best, values[i]) && !sr.nat_leq(values[i], best)) best = values[i];
    return best;
}

std::vector<AxiomViolation> check_axioms(const Semiring& sr, std::span<const Value> sample) {
    std::vector<AxiomViolation> out;
    auto report = [&](const std::string& law, const std::string& detail) {
        out.push_back({law, detail});
    };
    const Value z = sr.zero(), e = sr.one();
    auto eq = [&](const Value& a, const Value& b) { return sr.equals(a, b); };

    for (const Value& a : sample) {
        if (!eq(sr.add(a, z), a)) report("additive identity", sr.print(a));
        if (!eq(sr.mul(a, e), a)) report("multiplicative identity", sr.print(a));
        if (!eq(sr.mul(a, z), z)) report("annihilation", sr.print(a));
        if (!sr.nat_leq(a, a)) report("reflexivity", sr.print(a));
        if (!sr.nat_leq(z, a)) report("zero is least", sr.print(a));
    }
    for (const Value& a : sample) {
        for (const Value& b : sample) {
            if (!eq(sr.add(a, b), sr.add(b, a)))
                report("commutative +", sr.print(a) + "," + sr.print(b));
            if (!eq(sr.mul(a, b), sr.mul(b, a)))
                report("commutative x", sr.print(a) + "," + sr.print(b));
            if (sr.is_zero(sr.add(a, b)) && !(sr.is_zero(a) && sr.is_zero(b)))
                report("positivity", sr.print(a) + "," + sr.print(b));
            if (sr.is_zero(sr.mul(a, b)) && !sr.is_zero(a) && !sr.is_zero(b))
                report("no zero-divisors", sr.print(a) + "," + sr.print(b));
            if (!sr.nat_leq(a, b) && !sr.nat_leq(b, a))
                report("totality", sr.print(a) + "," + sr.print(b));
            if (sr.nat_leq(a, b) && sr.nat_leq(b, a) && !eq(a, b))
                report("antisymmetry", sr.print(a) + "," + sr.print(b));
        }
    }
    // Triples are cubic in the sample size; callers keep samples modest.
    for (const Value& a : sample) {
        for (const Value& b : sample) {
            for (const Value& c : sample) {
                if (!eq(sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c))))
                    report("associative +", sr.print(a) + "," + sr.print(b) + "," + sr.print(c));
                if (!eq(sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c))))
                    report("associative x", sr.print(a) + "," + sr.print(b) + "," + sr.print(c));
                if (!eq(sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c))))
                    report("distributivity", sr.print(a) + "," + sr.print(b) + "," + sr.print(c));
                if (sr.nat_leq(a, b) && sr.nat_leq(b, c) && !sr.nat_leq(a, c))
                    report("transitivity", sr.print(a) + "," + sr.print(b) + "," + sr.print(c));
                if (sr.nat_leq(b, c) && !sr.nat_leq(sr.mul(a, b), sr.mul(a, c)))
                    report("monotone x", sr.print(a) + "," + sr.print(b) + "," + sr.print(c));
            }
        }
    }
    return out;
}

} // namespace cqa
