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

#ifndef CQA_BIGNAT_HPP
#define CQA_BIGNAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cqa {

/// Arbitrary-precision natural number. Counting annotations are multiplied
/// across atoms and summed across embeddings, so fixed-width integers are
/// not an option. Limbs are base 10^9, little-endian, no trailing zero limbs
/// (zero is the empty limb vector).
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v);

    static BigNat from_decimal(std::string_view text); // throws ParseError

    std::string to_decimal() const;
    bool is_zero() const { return limbs_.empty(); }

    /// Value as uint64 if it fits, otherwise UINT64_MAX.
    std::uint64_t saturating_u64() const;

    friend BigNat operator+(const BigNat& a, const BigNat& b);
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

} // namespace cqa

#endif
