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
#include <string>

#include "ternhash/datasets.hpp"
#include "ternhash/threshold_search.hpp"

namespace ternhash {

// Binary artifact formats, all little-endian:
//
//   TRNH  features    magic "TRNH", u32 version=1, u32 n, u32 K, u32 C,
//                     n*K float32 outputs row-major, n u32 labels.
//   TRNC  codes       magic "TRNC", u32 version=1, u8 kind (0 binary,
//                     1 ternary), u32 n, u32 length, per code the packed
//                     words (padding bits zero), then n u32 labels.
//   TRNT  thresholds  magic "TRNT", u32 version=1, u32 K, K pairs of
//                     float64 (t1, t2) with t1 <= t2.
//
// Wrong magic or version, truncation, trailing bytes, and size overflows
// raise FormatError; unreadable paths raise IoError; invalid payloads raise
// DataError (features, thresholds) or CorruptCodeError (11 trit pairs).

// Sniffs the magic: TRNH files parse as binary, anything else as CSV.
FeatureSet load_features(const std::string& path);
void save_features(const FeatureSet& set, const std::string& path);

// CSV with header "out0,...,out{K-1},label"; floats serialized with %.9g so
// float32 values round-trip. The class count is inferred as max label + 1.
FeatureSet load_features_csv(const std::string& path);
void save_features_csv(const FeatureSet& set, const std::string& path);

CodeSet load_codes(const std::string& path);
void save_codes(const CodeSet& set, const std::string& path);

ThresholdTable load_thresholds(const std::string& path);
void save_thresholds(const ThresholdTable& table, const std::string& path);

// Labeled Gaussian stand-in for network outputs. Per bit, every class is
// randomly assigned mean +separation/2 or -separation/2 (unit variance); a
// `ambiguity` fraction of samples, drawn per bit, have their mean pulled to
// 0. Same arguments always produce the same set; no global RNG state.
FeatureSet synth_gaussian(uint32_t classes, uint32_t bits, uint32_t per_class, double separation,
                          double ambiguity, uint64_t seed);

}  // namespace ternhash
