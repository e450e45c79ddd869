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

#include "ternhash/datasets.hpp"
#include "ternhash/error.hpp"
#include "ternhash/trit_logic.hpp"

namespace ternhash {

// Per-class equal-width histogram of one bit's raw outputs.
//
// The bin edges follow a fixed formula that callers (and reimplementations)
// can reproduce bit-for-bit:
//   edges[m] = lo + (hi - lo) * (m / R)   for m = 1 .. R-1,
//   edges[0] = lo, edges[R] = hi          pinned exactly,
// where lo/hi are the observed min/max over all classes. A value v lands in
// bin(v) = number of interior edges (edges[1..R-1]) that are <= v, so a value
// equal to an interior edge belongs to the bin on its right and the maximum
// belongs to the last bin.
struct ClassHistogram {
    uint32_t num_classes = 0;
    uint32_t num_bins = 0;
    std::vector<double> bin_edges;       // num_bins + 1 ascending values
    std::vector<uint64_t> counts;        // num_classes x num_bins, row-major
    std::vector<uint64_t> class_totals;  // per-class sample counts
    std::vector<double> probs;           // row-normalized counts; empty classes uniform
    std::vector<uint8_t> class_empty;    // 1 where a class had no samples

    uint64_t count_at(size_t c, size_t k) const { return counts[c * num_bins + k]; }
    double prob_at(size_t c, size_t k) const { return probs[c * num_bins + k]; }
};

// Number of interior edges <= v; edges must be the full (R+1)-element array.
size_t histogram_bin(std::span<const double> edges, float v);

ClassHistogram build_histograms(std::span<const float> outputs_bit,
                                std::span<const uint32_t> labels, uint32_t num_classes,
                                uint32_t num_bins);

// Chances of one class's outputs being encoded as each trit state at a fixed
// threshold pair.
struct TritProbabilities {
    double p_true = 0.0;
    double p_unknown = 0.0;
    double p_false = 0.0;
};

// Expected per-trit distance between draws from two trit distributions.
// Kleene/Bochvar add 0.5 * pU_a * pU_b on top of the Lukasiewicz value.
double expected_thd_pair(const TritProbabilities& a, const TritProbabilities& b, LogicKind logic);

// Signed sum of expected distances over the full C x C class grid: diagonal
// terms enter with -1 (same-class pairs should be close), off-diagonal with
// +1. Summation runs A-major, B inner, so the result is reproducible.
double pairwise_objective(std::span<const TritProbabilities> probs, LogicKind logic);

struct BitThresholds {
    double t1 = 0.0;
    double t2 = 0.0;

    bool operator==(const BitThresholds&) const = default;
};

struct BitSearchResult {
    double t1 = 0.0;
    double t2 = 0.0;
    double objective = 0.0;
    uint32_t edge_low = 0;   // winning i: t1 = bin_edges[i]
    uint32_t edge_high = 0;  // winning j: t2 = bin_edges[j]
    bool degenerate = false;
};

// Exhaustive double-threshold search for one bit. Scans every candidate
// (i, j) with 0 <= i < j <= R over bin-edge indices; for each, per-class
// masses are  left = bins k < i,  middle = bins i..j,  right = bins k > j,
// read as (p_true, p_unknown, p_false) in that order. Classes without
// samples are excluded from the objective. Ties break to the smallest i,
// then the smallest j. Constant outputs yield t1 = t2 = that constant,
// objective 0, and the degenerate flag instead of an error.
BitSearchResult search_bit(std::span<const float> outputs_bit, std::span<const uint32_t> labels,
                           uint32_t num_classes, uint32_t num_bins, LogicKind logic);

// Learned encoder thresholds, one (t1, t2) pair per bit with t1 <= t2.
struct ThresholdTable {
    std::vector<BitThresholds> bits;

    size_t num_bits() const noexcept { return bits.size(); }
    void validate() const;

    bool operator==(const ThresholdTable&) const = default;
};

struct FitResult {
    ThresholdTable table;
    std::vector<BitSearchResult> bits;
};

// Runs search_bit independently per bit. The result is identical for any
// thread count; threads <= 0 selects the hardware concurrency.
FitResult fit_thresholds(const FeatureSet& features, uint32_t num_bins, LogicKind logic,
                         int threads = 0);

}  // namespace ternhash
