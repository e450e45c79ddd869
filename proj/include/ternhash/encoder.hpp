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

#include <span>

#include "ternhash/datasets.hpp"
#include "ternhash/packed_codes.hpp"
#include "ternhash/threshold_search.hpp"

namespace ternhash {

// Sign encoder: bit i is 1 (meaning +1) iff raw[i] > 0. An exact zero maps
// to 0 (meaning -1); arbitrary but fixed so encoding is deterministic.
PackedBinaryCode encode_binary(std::span<const float> raw);

// Double-threshold encoder: trit i is -1 when raw[i] < t1, 0 when
// t1 <= raw[i] <= t2 (closed on both ends), +1 when raw[i] > t2.
PackedTernaryCode encode_ternary(std::span<const float> raw, const ThresholdTable& table);

// Batch encoders over a feature set; labels are carried through. Samples are
// encoded independently, so the result is identical for any thread count.
CodeSet encode_set_binary(const FeatureSet& features, int threads = 0);
CodeSet encode_set_ternary(const FeatureSet& features, const ThresholdTable& table,
                           int threads = 0);

}  // namespace ternhash
