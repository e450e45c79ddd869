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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ternhash/data_io.hpp"
#include "ternhash/threshold_search.hpp"

using namespace ternhash;

namespace {

// Random search instance within the small-parameter regime.
struct Instance {
    std::vector<float> values;
    std::vector<uint32_t> labels;
    uint32_t classes;
    uint32_t bins;
};

Instance random_instance(std::mt19937_64& rng) {
    Instance inst;
    inst.classes = 1 + rng() % 4;
    inst.bins = 2 + rng() % 19;
    const size_t n = 1 + rng() % 200;
    inst.values.resize(n);
    inst.labels.resize(n);
    for (size_t i = 0; i < n; ++i) {
        inst.labels[i] = static_cast<uint32_t>(rng() % inst.classes);
        const double base = static_cast<double>(inst.labels[i]) - 1.5;
        inst.values[i] =
            static_cast<float>(base + 4.0 * oracles::uniform01(rng) - 2.0);
    }
    // Collapse some instances onto a tiny value grid so ties on bin edges
    // and in the objective actually occur.
    if (rng() % 3 == 0) {
        for (float& v : inst.values) {
            v = std::round(v * 2.0f) / 2.0f;
        }
    }
    return inst;
}

}  // namespace

TEST_CASE("bin assignment sends edge values right and the maximum last") {
    const std::vector<double> edges = {0.0, 1.0, 2.0, 3.0, 4.0};
    CHECK(histogram_bin(edges, 0.0f) == 0);
    CHECK(histogram_bin(edges, 0.5f) == 0);
    CHECK(histogram_bin(edges, 1.0f) == 1);  // equal to an interior edge
    CHECK(histogram_bin(edges, 3.999f) == 3);
    CHECK(histogram_bin(edges, 4.0f) == 3);  // maximum belongs to the last bin
}

TEST_CASE("histogram splits a perfectly separated toy set") {
    const std::vector<float> values = {0, 1, 2, 3};
    const std::vector<uint32_t> labels = {0, 0, 1, 1};
    const ClassHistogram h = build_histograms(values, labels, 2, 2);
    CHECK(h.bin_edges == std::vector<double>{0.0, 1.5, 3.0});
    CHECK(h.prob_at(0, 0) == 1.0);
    CHECK(h.prob_at(0, 1) == 0.0);
    CHECK(h.prob_at(1, 0) == 0.0);
    CHECK(h.prob_at(1, 1) == 1.0);
    CHECK(h.class_totals == std::vector<uint64_t>{2, 2});
}

TEST_CASE("single sample per class gives one-hot rows") {
    const std::vector<float> values = {-1.0f, 1.0f};
    const std::vector<uint32_t> labels = {0, 1};
    const ClassHistogram h = build_histograms(values, labels, 2, 4);
    for (uint32_t c = 0; c < 2; ++c) {
        double row_sum = 0.0;
        int ones = 0;
        for (uint32_t k = 0; k < 4; ++k) {
            row_sum += h.prob_at(c, k);
            ones += h.prob_at(c, k) == 1.0 ? 1 : 0;
        }
        CHECK(row_sum == doctest::Approx(1.0));
        CHECK(ones == 1);
    }
}

TEST_CASE("histogram rows are normalized on a gaussian mixture") {
    std::mt19937_64 rng(61);
    std::vector<float> values(1000);
    std::vector<uint32_t> labels(1000);
    for (size_t i = 0; i < values.size(); ++i) {
        labels[i] = static_cast<uint32_t>(rng() % 3);
        values[i] = static_cast<float>(oracles::uniform01(rng) + 0.5 * labels[i]);
    }
    const ClassHistogram h = build_histograms(values, labels, 3, 100);
    for (uint32_t c = 0; c < 3; ++c) {
        double row_sum = 0.0;
        for (uint32_t k = 0; k < 100; ++k) {
            CHECK(h.prob_at(c, k) >= 0.0);
            row_sum += h.prob_at(c, k);
        }
        CHECK(std::abs(row_sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("classes with no samples get a flagged uniform row") {
    const std::vector<float> values = {0.0f, 1.0f};
    const std::vector<uint32_t> labels = {0, 0};
    const ClassHistogram h = build_histograms(values, labels, 2, 4);
    CHECK(h.class_empty == std::vector<uint8_t>{0, 1});
    for (uint32_t k = 0; k < 4; ++k) {
        CHECK(h.prob_at(1, k) == doctest::Approx(0.25));
    }
}

TEST_CASE("histogram input validation") {
    const std::vector<float> values = {0.0f, 1.0f};
    const std::vector<uint32_t> labels = {0, 1};
    CHECK_THROWS_AS(build_histograms(values, labels, 2, 1), ParameterError);
    CHECK_THROWS_AS(build_histograms({}, {}, 2, 4), ParameterError);
    CHECK_THROWS_AS(build_histograms(values, labels, 0, 4), ParameterError);
    CHECK_THROWS_AS(build_histograms(values, std::vector<uint32_t>{0}, 2, 4), DimensionError);
    CHECK_THROWS_AS(build_histograms(values, std::vector<uint32_t>{0, 2}, 2, 4), DataError);
    const std::vector<float> with_nan = {0.0f, std::nanf("")};
    CHECK_THROWS_AS(build_histograms(with_nan, labels, 2, 4), DataError);
    const std::vector<float> constant = {2.5f, 2.5f};
    CHECK_THROWS_AS(build_histograms(constant, labels, 2, 4), DegenerateRangeError);
}

TEST_CASE("expected distance formula on pinned inputs") {
    const TritProbabilities all_true{1.0, 0.0, 0.0};
    const TritProbabilities all_false{0.0, 0.0, 1.0};
    const TritProbabilities all_unknown{0.0, 1.0, 0.0};
    const TritProbabilities split{0.5, 0.0, 0.5};

    CHECK(expected_thd_pair(all_true, all_false, LogicKind::Lukasiewicz) == 1.0);
    CHECK(expected_thd_pair(all_true, all_false, LogicKind::Kleene) == 1.0);
    CHECK(expected_thd_pair(all_unknown, all_unknown, LogicKind::Lukasiewicz) == 0.0);
    CHECK(expected_thd_pair(all_unknown, all_unknown, LogicKind::Kleene) == 0.5);
    CHECK(expected_thd_pair(all_unknown, all_unknown, LogicKind::Bochvar) == 0.5);
    CHECK(expected_thd_pair(split, split, LogicKind::Lukasiewicz) == doctest::Approx(0.5));
    CHECK(expected_thd_pair(split, split, LogicKind::Kleene) == doctest::Approx(0.5));
}

TEST_CASE("expected distance is symmetric and matches a sampling estimate") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [pt_a, pu_a, pf_a] = oracles::random_simplex(rng);
        const auto [pt_b, pu_b, pf_b] = oracles::random_simplex(rng);
        const TritProbabilities pa{pt_a, pu_a, pf_a};
        const TritProbabilities pb{pt_b, pu_b, pf_b};
        for (const LogicKind logic : {LogicKind::Lukasiewicz, LogicKind::Kleene}) {
            CHECK(expected_thd_pair(pa, pb, logic) == expected_thd_pair(pb, pa, logic));
        }

        const int draws = 20000;
        int64_t twice_sum_luka = 0;
        int64_t twice_sum_kleene = 0;
        for (int d = 0; d < draws; ++d) {
            const int a = oracles::sample_trit(pt_a, pu_a, rng);
            const int b = oracles::sample_trit(pt_b, pu_b, rng);
            twice_sum_luka += oracles::thd_twice(a, b, true);
            twice_sum_kleene += oracles::thd_twice(a, b, false);
        }
        const double mean_luka = static_cast<double>(twice_sum_luka) / (2.0 * draws);
        const double mean_kleene = static_cast<double>(twice_sum_kleene) / (2.0 * draws);
        // 3.5 sigma with sigma <= 0.5 / sqrt(draws); loose but collision-free.
        CHECK(std::abs(mean_luka - expected_thd_pair(pa, pb, LogicKind::Lukasiewicz)) < 0.0124);
        CHECK(std::abs(mean_kleene - expected_thd_pair(pa, pb, LogicKind::Kleene)) < 0.0124);
    }
}

TEST_CASE("kleene expectation dominates lukasiewicz on random inputs") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [pt_a, pu_a, pf_a] = oracles::random_simplex(rng);
        const auto [pt_b, pu_b, pf_b] = oracles::random_simplex(rng);
        const TritProbabilities pa{pt_a, pu_a, pf_a};
        const TritProbabilities pb{pt_b, pu_b, pf_b};
        CHECK(expected_thd_pair(pa, pb, LogicKind::Kleene) >=
              expected_thd_pair(pa, pb, LogicKind::Lukasiewicz));
    }
}

TEST_CASE("pairwise objective signs: diagonal negative, off-diagonal positive") {
    const TritProbabilities a{1.0, 0.0, 0.0};
    const TritProbabilities b{0.0, 0.0, 1.0};

    const std::vector<TritProbabilities> single = {a};
    CHECK(pairwise_objective(single, LogicKind::Kleene) ==
          -expected_thd_pair(a, a, LogicKind::Kleene));

    const std::vector<TritProbabilities> pair = {a, b};
    CHECK(pairwise_objective(pair, LogicKind::Kleene) == doctest::Approx(2.0));

    // 4 classes: reconstruct the signed sum by hand.
    std::mt19937_64 rng(91);
    std::vector<TritProbabilities> probs;
    for (int c = 0; c < 4; ++c) {
        const auto [pt, pu, pf] = oracles::random_simplex(rng);
        probs.push_back({pt, pu, pf});
    }
    for (const LogicKind logic : {LogicKind::Lukasiewicz, LogicKind::Kleene}) {
        double manual = 0.0;
        for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 4; ++y) {
                const double e = expected_thd_pair(probs[x], probs[y], logic);
                manual += (x == y) ? -e : e;
            }
        }
        CHECK(pairwise_objective(probs, logic) == manual);
    }
}

TEST_CASE("search finds the gap between separated classes") {
    std::mt19937_64 rng(101);
    std::vector<float> values;
    std::vector<uint32_t> labels;
    for (int i = 0; i < 60; ++i) {
        values.push_back(static_cast<float>(-2.0 + oracles::uniform01(rng)));  // [-2, -1]
        labels.push_back(0);
        values.push_back(static_cast<float>(1.0 + oracles::uniform01(rng)));  // [1, 2]
        labels.push_back(1);
    }
    const BitSearchResult r = search_bit(values, labels, 2, 10, LogicKind::Kleene);
    CHECK(!r.degenerate);
    CHECK(r.objective == doctest::Approx(2.0));
    CHECK(r.t1 > -1.0);
    CHECK(r.t2 < 1.0);
    CHECK(r.t1 <= r.t2);
}

TEST_CASE("identical class distributions tie at the first candidate") {
    // Same multiset of values for both classes: every candidate scores 0.
    std::vector<float> values;
    std::vector<uint32_t> labels;
    for (int i = 0; i < 20; ++i) {
        const float v = static_cast<float>(i);
        values.push_back(v);
        labels.push_back(0);
        values.push_back(v);
        labels.push_back(1);
    }
    const BitSearchResult r = search_bit(values, labels, 2, 8, LogicKind::Kleene);
    CHECK(r.objective <= 0.0);
    CHECK(r.edge_low == 0);
    CHECK(r.edge_high == 1);
}

TEST_CASE("constant outputs give a degenerate result instead of an error") {
    const std::vector<float> values = {3.25f, 3.25f, 3.25f};
    const std::vector<uint32_t> labels = {0, 1, 0};
    const BitSearchResult r = search_bit(values, labels, 2, 10, LogicKind::Kleene);
    CHECK(r.degenerate);
    CHECK(r.t1 == 3.25);
    CHECK(r.t2 == 3.25);
    CHECK(r.objective == 0.0);
}

TEST_CASE("search equals the naive brute-force oracle exactly") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_instance(rng);
        for (const bool lukasiewicz : {true, false}) {
            const LogicKind logic = lukasiewicz ? LogicKind::Lukasiewicz : LogicKind::Kleene;
            float lo = inst.values[0];
            float hi = inst.values[0];
            for (const float v : inst.values) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (lo == hi) {
                continue;
            }
            const BitSearchResult got =
                search_bit(inst.values, inst.labels, inst.classes, inst.bins, logic);
            const oracles::SearchOracleResult want = oracles::search_bit_naive(
                inst.values, inst.labels, inst.classes, inst.bins, lukasiewicz);
            CHECK(got.edge_low == want.edge_low);
            CHECK(got.edge_high == want.edge_high);
            CHECK(got.objective == want.objective);
        }
    }
}

TEST_CASE("affine rescaling of the outputs moves thresholds along") {
    std::mt19937_64 rng(121);
    std::vector<float> values(150);
    std::vector<uint32_t> labels(150);
    for (size_t i = 0; i < values.size(); ++i) {
        labels[i] = static_cast<uint32_t>(rng() % 3);
        values[i] = static_cast<float>(oracles::uniform01(rng) * 3.0 + 0.7 * labels[i]);
    }
    const BitSearchResult base = search_bit(values, labels, 3, 16, LogicKind::Kleene);

    const double scale = 2.5;
    const double shift = -1.75;
    std::vector<float> mapped(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        mapped[i] = static_cast<float>(scale * values[i] + shift);
    }
    const BitSearchResult moved = search_bit(mapped, labels, 3, 16, LogicKind::Kleene);
    CHECK(moved.objective == doctest::Approx(base.objective).epsilon(1e-9));
    CHECK(moved.t1 == doctest::Approx(scale * base.t1 + shift).epsilon(1e-6));
    CHECK(moved.t2 == doctest::Approx(scale * base.t2 + shift).epsilon(1e-6));
}

TEST_CASE("swapping the two class labels leaves the search result unchanged") {
    std::mt19937_64 rng(131);
    std::vector<float> values(120);
    std::vector<uint32_t> labels(120);
    for (size_t i = 0; i < values.size(); ++i) {
        labels[i] = static_cast<uint32_t>(rng() % 2);
        values[i] = static_cast<float>(oracles::uniform01(rng) + 0.8 * labels[i]);
    }
    std::vector<uint32_t> swapped(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        swapped[i] = 1 - labels[i];
    }
    const BitSearchResult a = search_bit(values, labels, 2, 12, LogicKind::Kleene);
    const BitSearchResult b = search_bit(values, swapped, 2, 12, LogicKind::Kleene);
    CHECK(a.edge_low == b.edge_low);
    CHECK(a.edge_high == b.edge_high);
    CHECK(a.objective == b.objective);
}

TEST_CASE("threshold fitting runs per bit and matches the single-bit search") {
    const FeatureSet set = synth_gaussian(3, 4, 30, 2.0, 0.1, 17);
    const FitResult fit = fit_thresholds(set, 20, LogicKind::Kleene, 1);
    REQUIRE(fit.table.num_bits() == 4);
    REQUIRE(fit.bits.size() == 4);

    std::vector<float> column(set.count);
    for (uint32_t bit = 0; bit < 4; ++bit) {
        for (uint32_t i = 0; i < set.count; ++i) {
            column[i] = set.outputs[static_cast<size_t>(i) * set.bits + bit];
        }
        const BitSearchResult solo = search_bit(column, set.labels, set.classes, 20,
                                                LogicKind::Kleene);
        CHECK(fit.bits[bit].t1 == solo.t1);
        CHECK(fit.bits[bit].t2 == solo.t2);
        CHECK(fit.bits[bit].objective == solo.objective);
    }
}

TEST_CASE("fitting is invariant to sample order and thread count") {
    const FeatureSet set = synth_gaussian(4, 6, 25, 1.5, 0.2, 19);

    FeatureSet shuffled = set;
    std::mt19937_64 rng(23);
    for (size_t i = set.count; i > 1; --i) {
        const size_t j = rng() % i;
        for (uint32_t k = 0; k < set.bits; ++k) {
            std::swap(shuffled.outputs[(i - 1) * set.bits + k],
                      shuffled.outputs[j * set.bits + k]);
        }
        std::swap(shuffled.labels[i - 1], shuffled.labels[j]);
    }

    const FitResult a = fit_thresholds(set, 25, LogicKind::Kleene, 1);
    const FitResult b = fit_thresholds(shuffled, 25, LogicKind::Kleene, 1);
    const FitResult c = fit_thresholds(set, 25, LogicKind::Kleene, 4);
    CHECK(a.table == b.table);
    CHECK(a.table == c.table);
}

TEST_CASE("a constant bit is flagged without spoiling the rest of the table") {
    FeatureSet set = synth_gaussian(2, 3, 10, 2.0, 0.0, 29);
    for (uint32_t i = 0; i < set.count; ++i) {
        set.outputs[static_cast<size_t>(i) * set.bits + 1] = 42.0f;
    }
    const FitResult fit = fit_thresholds(set, 10, LogicKind::Kleene, 1);
    CHECK(!fit.bits[0].degenerate);
    CHECK(fit.bits[1].degenerate);
    CHECK(fit.bits[1].t1 == 42.0);
    CHECK(fit.bits[1].t2 == 42.0);
    CHECK(!fit.bits[2].degenerate);
    CHECK_NOTHROW(fit.table.validate());
}

TEST_CASE("threshold table validation rejects bad pairs") {
    ThresholdTable table;
    table.bits.push_back({0.0, 1.0});
    CHECK_NOTHROW(table.validate());
    table.bits.push_back({2.0, 1.0});
    CHECK_THROWS_AS(table.validate(), DataError);
    table.bits.back() = {0.0, std::nan("")};
    CHECK_THROWS_AS(table.validate(), DataError);
}
