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

#include "ternhash/threshold_search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ternhash/parallel.hpp"

namespace ternhash {

size_t histogram_bin(std::span<const double> edges, float v) {
    // edges holds R+1 values; only the R-1 interior ones decide the bin.
    const double dv = static_cast<double>(v);
    const auto first = edges.begin() + 1;
    const auto last = edges.end() - 1;
    return static_cast<size_t>(std::upper_bound(first, last, dv) - first);
}

ClassHistogram build_histograms(std::span<const float> outputs_bit,
                                std::span<const uint32_t> labels, uint32_t num_classes,
                                uint32_t num_bins) {
    if (num_bins < 2) {
        throw ParameterError("histogram needs at least 2 bins, got " + std::to_string(num_bins));
    }
    if (num_classes == 0) {
        throw ParameterError("histogram needs at least 1 class");
    }
    if (outputs_bit.empty()) {
        throw ParameterError("histogram needs at least 1 sample");
    }
    if (outputs_bit.size() != labels.size()) {
        throw DimensionError("outputs and labels differ in length: " +
                             std::to_string(outputs_bit.size()) + " vs " +
                             std::to_string(labels.size()));
    }
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= num_classes) {
            throw DataError("label " + std::to_string(labels[i]) + " at sample " +
                            std::to_string(i) + " outside " + std::to_string(num_classes) +
                            " classes");
        }
        if (!std::isfinite(outputs_bit[i])) {
            throw DataError("non-finite output at sample " + std::to_string(i));
        }
    }

    float lo = outputs_bit[0];
    float hi = outputs_bit[0];
    for (const float v : outputs_bit) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        throw DegenerateRangeError("all outputs equal " + std::to_string(lo));
    }

    ClassHistogram h;
    h.num_classes = num_classes;
    h.num_bins = num_bins;
    h.bin_edges.resize(num_bins + 1);
    const double dlo = static_cast<double>(lo);
    const double dhi = static_cast<double>(hi);
    h.bin_edges[0] = dlo;
    h.bin_edges[num_bins] = dhi;
    for (uint32_t m = 1; m < num_bins; ++m) {
        h.bin_edges[m] =
            dlo + (dhi - dlo) * (static_cast<double>(m) / static_cast<double>(num_bins));
    }

    h.counts.assign(static_cast<size_t>(num_classes) * num_bins, 0);
    h.class_totals.assign(num_classes, 0);
    for (size_t i = 0; i < outputs_bit.size(); ++i) {
        const size_t bin = histogram_bin(h.bin_edges, outputs_bit[i]);
        ++h.counts[static_cast<size_t>(labels[i]) * num_bins + bin];
        ++h.class_totals[labels[i]];
    }

    h.probs.assign(h.counts.size(), 0.0);
    h.class_empty.assign(num_classes, 0);
    for (uint32_t c = 0; c < num_classes; ++c) {
        const uint64_t total = h.class_totals[c];
        if (total == 0) {
            h.class_empty[c] = 1;
            const double uniform = 1.0 / static_cast<double>(num_bins);
            for (uint32_t k = 0; k < num_bins; ++k) {
                h.probs[static_cast<size_t>(c) * num_bins + k] = uniform;
            }
            continue;
        }
        for (uint32_t k = 0; k < num_bins; ++k) {
            const size_t idx = static_cast<size_t>(c) * num_bins + k;
            h.probs[idx] = static_cast<double>(h.counts[idx]) / static_cast<double>(total);
        }
    }
    return h;
}

double expected_thd_pair(const TritProbabilities& a, const TritProbabilities& b,
                         LogicKind logic) {
    double e = a.p_true * b.p_false + a.p_false * b.p_true;
    e += 0.5 * (a.p_unknown * (b.p_true + b.p_false) + b.p_unknown * (a.p_true + a.p_false));
    if (logic != LogicKind::Lukasiewicz) {
        e += 0.5 * (a.p_unknown * b.p_unknown);
    }
    return e;
}

double pairwise_objective(std::span<const TritProbabilities> probs, LogicKind logic) {
    double sum = 0.0;
    for (size_t a = 0; a < probs.size(); ++a) {
        for (size_t b = 0; b < probs.size(); ++b) {
            const double e = expected_thd_pair(probs[a], probs[b], logic);
            sum += (a == b) ? -e : e;
        }
    }
    return sum;
}

BitSearchResult search_bit(std::span<const float> outputs_bit, std::span<const uint32_t> labels,
                           uint32_t num_classes, uint32_t num_bins, LogicKind logic) {
    ClassHistogram hist;
    try {
        hist = build_histograms(outputs_bit, labels, num_classes, num_bins);
    } catch (const DegenerateRangeError&) {
        // Range checks run after data validation, so outputs_bit[0] is the
        // shared constant. Every value then encodes to Unknown under
        // t1 = t2 = constant.
        BitSearchResult r;
        r.t1 = static_cast<double>(outputs_bit[0]);
        r.t2 = r.t1;
        r.objective = 0.0;
        r.degenerate = true;
        return r;
    }

    const uint32_t num_edges = num_bins + 1;  // candidate indices 0..R

    // Per-class prefix sums: cum[c][k] = samples of class c in bins < k.
    std::vector<uint64_t> cum(static_cast<size_t>(num_classes) * num_edges, 0);
    for (uint32_t c = 0; c < num_classes; ++c) {
        uint64_t running = 0;
        cum[static_cast<size_t>(c) * num_edges] = 0;
        for (uint32_t k = 0; k < num_bins; ++k) {
            running += hist.count_at(c, k);
            cum[static_cast<size_t>(c) * num_edges + k + 1] = running;
        }
    }

    std::vector<uint32_t> present;
    present.reserve(num_classes);
    for (uint32_t c = 0; c < num_classes; ++c) {
        if (hist.class_totals[c] > 0) {
            present.push_back(c);
        }
    }

    std::vector<TritProbabilities> probs(present.size());
    BitSearchResult best;
    bool have_best = false;

    for (uint32_t i = 0; i < num_bins; ++i) {
        for (uint32_t j = i + 1; j <= num_bins; ++j) {
            // Middle mass covers bins i..j; bin indices stop at R-1, so the
            // inclusive upper bin is min(j, R-1), i.e. prefix index
            // min(j+1, R).
            const uint32_t mid_end = std::min(j + 1, num_bins);
            for (size_t p = 0; p < present.size(); ++p) {
                const uint32_t c = present[p];
                const uint64_t total = hist.class_totals[c];
                const uint64_t left = cum[static_cast<size_t>(c) * num_edges + i];
                const uint64_t mid = cum[static_cast<size_t>(c) * num_edges + mid_end] - left;
                const uint64_t right = total - left - mid;
                probs[p].p_true = static_cast<double>(left) / static_cast<double>(total);
                probs[p].p_unknown = static_cast<double>(mid) / static_cast<double>(total);
                probs[p].p_false = static_cast<double>(right) / static_cast<double>(total);
            }
            const double objective = pairwise_objective(probs, logic);
            // Strict improvement only: the first candidate in (i, j) scan
            // order wins ties, giving the smallest i then smallest j.
            if (!have_best || objective > best.objective) {
                best.objective = objective;
                best.edge_low = i;
                best.edge_high = j;
                have_best = true;
            }
        }
    }

    best.t1 = hist.bin_edges[best.edge_low];
    best.t2 = hist.bin_edges[best.edge_high];
    best.degenerate = false;
    return best;
}

void ThresholdTable::validate() const {
    for (size_t k = 0; k < bits.size(); ++k) {
        if (!std::isfinite(bits[k].t1) || !std::isfinite(bits[k].t2)) {
            throw DataError("non-finite threshold at bit " + std::to_string(k));
        }
        if (bits[k].t1 > bits[k].t2) {
            throw DataError("threshold pair out of order at bit " + std::to_string(k) + ": " +
                            std::to_string(bits[k].t1) + " > " + std::to_string(bits[k].t2));
        }
    }
}

FitResult fit_thresholds(const FeatureSet& features, uint32_t num_bins, LogicKind logic,
                         int threads) {
    features.validate();
    if (features.count == 0 || features.bits == 0) {
        throw ParameterError("cannot fit thresholds on an empty feature set");
    }

    FitResult result;
    result.bits.resize(features.bits);
    result.table.bits.resize(features.bits);

    parallel_for(features.bits, threads, [&](size_t begin, size_t end) {
        std::vector<float> column(features.count);
        for (size_t bit = begin; bit < end; ++bit) {
            for (size_t i = 0; i < features.count; ++i) {
                column[i] = features.outputs[i * features.bits + bit];
            }
            const BitSearchResult r =
                search_bit(column, features.labels, features.classes, num_bins, logic);
            result.bits[bit] = r;
            result.table.bits[bit] = BitThresholds{r.t1, r.t2};
        }
    });
    return result;
}

}  // namespace ternhash
