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

#include "ternhash/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ternhash/parallel.hpp"

namespace ternhash {
namespace {

void check_finite(std::span<const float> raw) {
    for (size_t i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i])) {
            throw DataError("non-finite output at bit " + std::to_string(i));
        }
    }
}

}  // namespace

PackedBinaryCode encode_binary(std::span<const float> raw) {
    check_finite(raw);
    PackedBinaryCode code(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        code.set(i, raw[i] > 0.0f);
    }
    return code;
}

PackedTernaryCode encode_ternary(std::span<const float> raw, const ThresholdTable& table) {
    if (raw.size() != table.num_bits()) {
        throw DimensionError("output vector has " + std::to_string(raw.size()) +
                             " bits but threshold table has " +
                             std::to_string(table.num_bits()));
    }
    check_finite(raw);
    PackedTernaryCode code(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        const double v = static_cast<double>(raw[i]);
        const BitThresholds& t = table.bits[i];
        if (v < t.t1) {
            code.set(i, Trit::False);
        } else if (v > t.t2) {
            code.set(i, Trit::True);
        } else {
            code.set(i, Trit::Unknown);
        }
    }
    return code;
}

CodeSet encode_set_binary(const FeatureSet& features, int threads) {
    features.validate();
    CodeSet set;
    set.kind = CodeKind::Binary;
    set.count = features.count;
    set.length = features.bits;
    set.labels = features.labels;
    set.words.assign(static_cast<size_t>(features.count) * set.words_per_code(), 0);

    const size_t stride = set.words_per_code();
    parallel_for(features.count, threads, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const PackedBinaryCode code = encode_binary(features.row(i));
            std::copy(code.words().begin(), code.words().end(), set.words.begin() + i * stride);
        }
    });
    return set;
}

CodeSet encode_set_ternary(const FeatureSet& features, const ThresholdTable& table, int threads) {
    features.validate();
    table.validate();
    if (features.bits != table.num_bits()) {
        throw DimensionError("feature set has " + std::to_string(features.bits) +
                             " bits but threshold table has " +
                             std::to_string(table.num_bits()));
    }
    CodeSet set;
    set.kind = CodeKind::Ternary;
    set.count = features.count;
    set.length = features.bits;
    set.labels = features.labels;
    set.words.assign(static_cast<size_t>(features.count) * set.words_per_code(), 0);

    const size_t stride = set.words_per_code();
    parallel_for(features.count, threads, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const PackedTernaryCode code = encode_ternary(features.row(i), table);
            std::copy(code.words().begin(), code.words().end(), set.words.begin() + i * stride);
        }
    });
    return set;
}

}  // namespace ternhash
