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

#include "ternhash/datasets.hpp"

#include <cmath>
#include <string>

namespace ternhash {

void FeatureSet::validate() const {
    if (outputs.size() != static_cast<size_t>(count) * bits) {
        throw DimensionError("feature matrix has " + std::to_string(outputs.size()) +
                             " values, expected " + std::to_string(count) + " x " +
                             std::to_string(bits));
    }
    if (labels.size() != count) {
        throw DimensionError("feature set has " + std::to_string(labels.size()) +
                             " labels for " + std::to_string(count) + " samples");
    }
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= classes) {
            throw DataError("label " + std::to_string(labels[i]) + " at sample " +
                            std::to_string(i) + " outside " + std::to_string(classes) +
                            " classes");
        }
    }
    for (size_t i = 0; i < outputs.size(); ++i) {
        if (!std::isfinite(outputs[i])) {
            throw DataError("non-finite output value at flat index " + std::to_string(i));
        }
    }
}

std::string to_string(CodeKind kind) {
    return kind == CodeKind::Binary ? "binary" : "ternary";
}

void CodeSet::append_ternary(const PackedTernaryCode& code, uint32_t label) {
    if (kind != CodeKind::Ternary) {
        throw ParameterError("cannot append a ternary code to a binary code set");
    }
    if (code.length() != length) {
        throw DimensionError("code length " + std::to_string(code.length()) +
                             " does not match set length " + std::to_string(length));
    }
    words.insert(words.end(), code.words().begin(), code.words().end());
    labels.push_back(label);
    ++count;
}

void CodeSet::append_binary(const PackedBinaryCode& code, uint32_t label) {
    if (kind != CodeKind::Binary) {
        throw ParameterError("cannot append a binary code to a ternary code set");
    }
    if (code.length() != length) {
        throw DimensionError("code length " + std::to_string(code.length()) +
                             " does not match set length " + std::to_string(length));
    }
    words.insert(words.end(), code.words().begin(), code.words().end());
    labels.push_back(label);
    ++count;
}

PackedTernaryCode CodeSet::ternary_code(size_t i) const {
    if (kind != CodeKind::Ternary) {
        throw ParameterError("code set is binary, not ternary");
    }
    const auto w = code_words(i);
    return PackedTernaryCode::from_words(length, std::vector<uint64_t>(w.begin(), w.end()));
}

PackedBinaryCode CodeSet::binary_code(size_t i) const {
    if (kind != CodeKind::Binary) {
        throw ParameterError("code set is ternary, not binary");
    }
    const auto w = code_words(i);
    return PackedBinaryCode::from_words(length, std::vector<uint64_t>(w.begin(), w.end()));
}

void CodeSet::validate() const {
    if (words.size() != static_cast<size_t>(count) * words_per_code()) {
        throw DimensionError("code set has " + std::to_string(words.size()) +
                             " words, expected " + std::to_string(count) + " x " +
                             std::to_string(words_per_code()));
    }
    if (labels.size() != count) {
        throw DimensionError("code set has " + std::to_string(labels.size()) + " labels for " +
                             std::to_string(count) + " codes");
    }
    for (size_t i = 0; i < count; ++i) {
        const auto w = code_words(i);
        if (kind == CodeKind::Ternary) {
            // Round-trips through the validating constructor.
            PackedTernaryCode::from_words(length, std::vector<uint64_t>(w.begin(), w.end()));
        } else {
            PackedBinaryCode::from_words(length, std::vector<uint64_t>(w.begin(), w.end()));
        }
    }
}

}  // namespace ternhash
