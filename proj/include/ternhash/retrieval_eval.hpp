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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ternhash/datasets.hpp"
#include "ternhash/error.hpp"

namespace ternhash {

enum class MetricKind {
    Binary,
    Lukasiewicz,
    Kleene,
};

std::string to_string(MetricKind metric);
MetricKind metric_from_string(const std::string& name);

// Distance between code i of set a and code j of set b, on the twice grid
// (binary Hamming distances are doubled so every metric shares the integer
// support {0, 1, ..., 2 * length}).
int64_t code_distance_twice(const CodeSet& a, size_t i, const CodeSet& b, size_t j,
                            MetricKind metric);

// Average precision of one ranked relevance list, cut off at k:
//   AP@k = (sum over relevant ranks r <= k of precision@r) / min(k, total relevant),
// where "total relevant" counts the whole list, and 0 when nothing is
// relevant anywhere.
double average_precision(std::span<const uint8_t> relevance, size_t k);

// Mean AP over queries against the database ranked by ascending distance,
// ties broken by ascending database index. k = 0 ranks the full database.
// Relevance means equal labels. The result is identical for any thread
// count.
double map_at_k(const CodeSet& queries, const CodeSet& database, size_t k, MetricKind metric,
                int threads = 0);

// Normalized distance distributions of same-label (pos) and different-label
// (neg) query/database pairs over the shared twice grid.
struct DistanceHistograms {
    int64_t max_twice = 0;    // support is {0, ..., max_twice}
    std::vector<double> pos;  // max_twice + 1 entries, sums to 1 when nonempty
    std::vector<double> neg;
    uint64_t pos_pairs = 0;
    uint64_t neg_pairs = 0;
};

DistanceHistograms distance_histograms(const CodeSet& queries, const CodeSet& database,
                                       MetricKind metric);

// Shared mass of the two histograms: sum over the support of min(pos, neg).
double overlap_area(const DistanceHistograms& h);

// Fraction of (query, positive, negative) triples violating the retrieval
// margin, i.e. with d(q, n) - d(q, p) <= 0.
struct AmbiguityResult {
    double rate = 0.0;
    uint64_t triples = 0;    // triples actually evaluated
    uint64_t ambiguous = 0;  // of those, with margin <= 0
    uint32_t skipped_queries = 0;
    bool exhaustive = false;
};

// Enumerates every triple when their total is at most max_triples, otherwise
// draws max_triples of them uniformly with the seeded generator. Queries
// lacking a positive or a negative are skipped and counted.
AmbiguityResult ambiguity_rate(const CodeSet& queries, const CodeSet& database, MetricKind metric,
                               uint64_t max_triples, uint64_t seed);

// Exact PMF of a sum of independent Bernoulli(p_i) variables, computed by
// the O(K^2) convolution recurrence. Returns K + 1 entries.
std::vector<double> poisson_binomial_pmf(std::span<const double> p);

struct RetrievalReport {
    MetricKind metric = MetricKind::Kleene;
    CodeKind code_kind = CodeKind::Ternary;
    uint32_t code_length = 0;
    uint32_t num_queries = 0;
    uint32_t num_database = 0;
    size_t k = 0;  // 0 = full database
    double map = 0.0;
    double overlap = 0.0;
    AmbiguityResult ambiguity;
    DistanceHistograms histograms;
};

RetrievalReport evaluate_retrieval(const CodeSet& queries, const CodeSet& database, size_t k,
                                   MetricKind metric, uint64_t max_triples = 100000,
                                   uint64_t seed = 0, int threads = 0);

// key: value lines, fixed formatting so identical reports are byte-identical.
void write_report(std::ostream& os, const RetrievalReport& report);

// Tab-separated distance/pos/neg rows for external plotting.
void write_histograms_tsv(std::ostream& os, const DistanceHistograms& h);

}  // namespace ternhash
