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

#include "cqa/bignat.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cqa/error.hpp"

namespace cqa {

namespace {
constexpr std::uint32_t kBase = 1'000'000'000u;
constexpr int kBaseDigits = 9;
} // namespace

BigNat::BigNat(std::uint64_t v) {
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad integer literal '" + std::string(text) + "'");
    BigNat out;
    for (std::size_t end = text.size(); end > 0;) {
        std::size_t begin = end >= kBaseDigits ? end - kBaseDigits : 0;
        out.limbs_.push_back(
            static_cast<std::uint32_t>(std::stoul(std::string(text.substr(begin, end - begin)))));
        end = begin;
    }
    out.trim();
    return out;
}

std::string BigNat::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(kBaseDigits - part.size(), '0') + part;
    }
    return out;
}

std::uint64_t BigNat::saturating_u64() const {
    std::uint64_t acc = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
        if (acc > (std::numeric_limits<std::uint64_t>::max() - *it) / kBase)
            return std::numeric_limits<std::uint64_t>::max();
        acc = acc * kBase + *it;
    }
    return acc;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat out;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    out.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(s % kBase);
        carry = s / kBase;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size() || carry; ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry;
            if (j < b.limbs_.size())
                cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    out.trim();
    return out;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i > 0; --i)
        if (a.limbs_[i - 1] != b.limbs_[i - 1])
            return a.limbs_[i - 1] <=> b.limbs_[i - 1];
    return std::strong_ordering::equal;
}

} // namespace cqa
