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

#include "ternhash/trit_logic.hpp"

namespace ternhash {

Trit trit_from_int(int v) {
    if (v < -1 || v > 1) {
        throw ParameterError("trit value must be -1, 0, or +1; got " + std::to_string(v));
    }
    return static_cast<Trit>(v);
}

int trit_to_int(Trit t) noexcept {
    return static_cast<int>(t);
}

Trit equivalence(Trit a, Trit b, LogicKind logic) noexcept {
    const int ia = static_cast<int>(a) + 1;
    const int ib = static_cast<int>(b) + 1;
    switch (logic) {
        case LogicKind::Lukasiewicz:
            return static_cast<Trit>(kLukasiewiczEquiv[ia][ib]);
        case LogicKind::Kleene:
        case LogicKind::Bochvar:
            return static_cast<Trit>(kKleeneEquiv[ia][ib]);
    }
    return Trit::Unknown;  // unreachable
}

TernaryDistance thd_scalar(Trit a, Trit b, LogicKind logic) noexcept {
    // d = (1 - equiv(a, b)) / 2, kept on the twice grid as 1 - equiv.
    const int eq = static_cast<int>(equivalence(a, b, logic));
    return TernaryDistance::from_twice(1 - eq);
}

TernaryDistance thd_vector(std::span<const Trit> a, std::span<const Trit> b, LogicKind logic) {
    if (a.size() != b.size()) {
        throw DimensionError("trit vectors differ in length: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    }
    TernaryDistance d;
    for (size_t i = 0; i < a.size(); ++i) {
        d += thd_scalar(a[i], b[i], logic);
    }
    return d;
}

std::string to_string(Trit t) {
    switch (t) {
        case Trit::False:
            return "-1";
        case Trit::Unknown:
            return "0";
        case Trit::True:
            return "+1";
    }
    return "?";
}

std::string to_string(LogicKind logic) {
    switch (logic) {
        case LogicKind::Lukasiewicz:
            return "lukasiewicz";
        case LogicKind::Kleene:
            return "kleene";
        case LogicKind::Bochvar:
            return "bochvar";
    }
    return "?";
}

LogicKind logic_from_string(const std::string& name) {
    if (name == "lukasiewicz" || name == "luka") {
        return LogicKind::Lukasiewicz;
    }
    if (name == "kleene") {
        return LogicKind::Kleene;
    }
    if (name == "bochvar") {
        return LogicKind::Bochvar;
    }
    throw ParameterError("unknown logic '" + name + "' (expected lukasiewicz, kleene, or bochvar)");
}

}  // namespace ternhash
