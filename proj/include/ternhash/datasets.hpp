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

#include <cstdint>
#include <span>
#include <vector>

#include "ternhash/error.hpp"
#include "ternhash/packed_codes.hpp"

namespace ternhash {

// Real-valued hash-layer outputs for a labeled sample collection.
// `outputs` is row-major: sample i occupies [i * bits, (i + 1) * bits).
struct FeatureSet {
    uint32_t count = 0;
    uint32_t bits = 0;
    uint32_t classes = 0;
    std::vector<float> outputs;
    std::vector<uint32_t> labels;

    std::span<const float> row(size_t i) const {
        return std::span<const float>(outputs).subspan(static_cast<size_t>(i) * bits, bits);
    }

    // Shape, label range, and finiteness checks; throws on violation.
    void validate() const;

    bool operator==(const FeatureSet&) const = default;
};

// On-disk numeric values are part of the code file format.
enum class CodeKind : uint8_t {
    Binary = 0,
    Ternary = 1,
};

std::string to_string(CodeKind kind);

// Fixed-length packed codes with labels, stored as one flat word array so
// distance kernels can walk rows without per-code indirection.
struct CodeSet {
    CodeKind kind = CodeKind::Ternary;
    uint32_t count = 0;
    uint32_t length = 0;
    std::vector<uint64_t> words;
    std::vector<uint32_t> labels;

    size_t words_per_code() const noexcept {
        return kind == CodeKind::Ternary ? PackedTernaryCode::words_for(length)
                                         : PackedBinaryCode::words_for(length);
    }

    std::span<const uint64_t> code_words(size_t i) const {
        return std::span<const uint64_t>(words).subspan(i * words_per_code(), words_per_code());
    }

    void append_ternary(const PackedTernaryCode& code, uint32_t label);
    void append_binary(const PackedBinaryCode& code, uint32_t label);

    // Validating accessors; prefer code_words() in inner loops.
    PackedTernaryCode ternary_code(size_t i) const;
    PackedBinaryCode binary_code(size_t i) const;

    // Word-count and payload checks mirroring the file-format rules.
    void validate() const;

    bool operator==(const CodeSet&) const = default;
};

}  // namespace ternhash
