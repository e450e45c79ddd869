// Copyright 2026 The ternhash Authors.
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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "ternhash/error.hpp"

namespace ternhash {

// A trit takes one of three states. The numeric values are part of the
// contract: equivalence and negation are defined through them.
enum class Trit : int8_t {
    False = -1,
    Unknown = 0,
    True = 1,
};

// Three-valued logic families. They differ only in how Unknown interacts
// with equivalence; Bochvar and Kleene coincide for that connective.
enum class LogicKind {
    Lukasiewicz,
    Kleene,
    Bochvar,
};

Trit trit_from_int(int v);
int trit_to_int(Trit t) noexcept;

inline Trit negate(Trit t) noexcept {
    return static_cast<Trit>(-static_cast<int8_t>(t));
}

// Equivalence truth tables, indexed [a + 1][b + 1] with a, b in {-1, 0, +1}.
// Rows/columns are ordered False, Unknown, True.
inline constexpr int8_t kLukasiewiczEquiv[3][3] = {
    {+1, 0, -1},
    {0, +1, 0},
    {-1, 0, +1},
};

inline constexpr int8_t kKleeneEquiv[3][3] = {
    {+1, 0, -1},
    {0, 0, 0},
    {-1, 0, +1},
};

// Bochvar's internal equivalence agrees with Kleene's on every input pair.
inline constexpr const auto& kBochvarEquiv = kKleeneEquiv;

Trit equivalence(Trit a, Trit b, LogicKind logic) noexcept;

// Distances over trits fall on a half-integer grid {0, 0.5, 1, ...}. Storing
// twice the value keeps accumulation exact and comparisons free of float
// rounding.
class TernaryDistance {
public:
    constexpr TernaryDistance() = default;

    static constexpr TernaryDistance from_twice(int64_t twice) noexcept {
        TernaryDistance d;
        d.twice_ = twice;
        return d;
    }

    constexpr int64_t twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return 0.5 * static_cast<double>(twice_); }

    constexpr TernaryDistance& operator+=(TernaryDistance o) noexcept {
        twice_ += o.twice_;
        return *this;
    }

    friend constexpr TernaryDistance operator+(TernaryDistance a, TernaryDistance b) noexcept {
        return from_twice(a.twice_ + b.twice_);
    }

    friend constexpr auto operator<=>(TernaryDistance, TernaryDistance) noexcept = default;

private:
    int64_t twice_ = 0;
};

// Per-trit distance: 0 when the pair is definitely equal, 1 when definitely
// different, 0.5 when the logic leaves the comparison unresolved.
TernaryDistance thd_scalar(Trit a, Trit b, LogicKind logic) noexcept;

// Sum of per-trit distances over two equal-length codes.
TernaryDistance thd_vector(std::span<const Trit> a, std::span<const Trit> b, LogicKind logic);

std::string to_string(Trit t);
std::string to_string(LogicKind logic);
LogicKind logic_from_string(const std::string& name);

}  // namespace ternhash
