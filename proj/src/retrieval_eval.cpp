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

#include "ternhash/retrieval_eval.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

#include "ternhash/packed_codes.hpp"
#include "ternhash/parallel.hpp"

namespace ternhash {
namespace {

void check_compatible(const CodeSet& a, const CodeSet& b, MetricKind metric) {
    if (a.kind != b.kind) {
        throw ParameterError("code sets have different kinds: " + to_string(a.kind) + " vs " +
                             to_string(b.kind));
    }
    if (a.length != b.length) {
        throw DimensionError("code sets have different lengths: " + std::to_string(a.length) +
                             " vs " + std::to_string(b.length));
    }
    const bool want_binary = metric == MetricKind::Binary;
    const bool is_binary = a.kind == CodeKind::Binary;
    if (want_binary != is_binary) {
        throw ParameterError("metric " + to_string(metric) + " does not apply to " +
                             to_string(a.kind) + " codes");
    }
}

// Distances from one query to every database code, on the twice grid.
void distances_to_all(const CodeSet& queries, size_t qi, const CodeSet& database,
                      MetricKind metric, std::vector<int64_t>& out) {
    out.resize(database.count);
    const auto q = queries.code_words(qi);
    for (size_t j = 0; j < database.count; ++j) {
        const auto d = database.code_words(j);
        switch (metric) {
            case MetricKind::Binary:
                out[j] = 2 * static_cast<int64_t>(kernels::hamming(q, d, database.length));
                break;
            case MetricKind::Lukasiewicz:
                out[j] = kernels::thd_lukasiewicz_twice(q, d, database.length);
                break;
            case MetricKind::Kleene:
                out[j] = kernels::thd_kleene_twice(q, d, database.length);
                break;
        }
    }
}

}  // namespace

std::string to_string(MetricKind metric) {
    switch (metric) {
        case MetricKind::Binary:
            return "binary";
        case MetricKind::Lukasiewicz:
            return "lukasiewicz";
        case MetricKind::Kleene:
            return "kleene";
    }
    return "?";
}

MetricKind metric_from_string(const std::string& name) {
    if (name == "binary") {
        return MetricKind::Binary;
    }
    if (name == "lukasiewicz" || name == "luka") {
        return MetricKind::Lukasiewicz;
    }
    if (name == "kleene") {
        return MetricKind::Kleene;
    }
    throw ParameterError("unknown metric '" + name + "' (expected binary, lukasiewicz, or kleene)");
}

int64_t code_distance_twice(const CodeSet& a, size_t i, const CodeSet& b, size_t j,
                            MetricKind metric) {
    check_compatible(a, b, metric);
    switch (metric) {
        case MetricKind::Binary:
            return 2 * static_cast<int64_t>(
                           kernels::hamming(a.code_words(i), b.code_words(j), a.length));
        case MetricKind::Lukasiewicz:
            return kernels::thd_lukasiewicz_twice(a.code_words(i), b.code_words(j), a.length);
        case MetricKind::Kleene:
            return kernels::thd_kleene_twice(a.code_words(i), b.code_words(j), a.length);
    }
    throw Error(ErrorCode::Internal, "unhandled metric");
}

double average_precision(std::span<const uint8_t> relevance, size_t k) {
    if (k == 0) {
        throw ParameterError("average precision cutoff must be at least 1");
    }
    size_t total_relevant = 0;
    for (const uint8_t r : relevance) {
        total_relevant += r ? 1 : 0;
    }
    if (total_relevant == 0) {
        return 0.0;
    }
    const size_t cutoff = std::min(k, relevance.size());
    double sum = 0.0;
    size_t hits = 0;
    for (size_t i = 0; i < cutoff; ++i) {
        if (relevance[i]) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(std::min(k, total_relevant));
}

double map_at_k(const CodeSet& queries, const CodeSet& database, size_t k, MetricKind metric,
                int threads) {
    check_compatible(queries, database, metric);
    if (database.count == 0) {
        throw ParameterError("cannot evaluate retrieval against an empty database");
    }
    if (queries.count == 0) {
        throw ParameterError("cannot evaluate retrieval with no queries");
    }
    const size_t effective_k = k == 0 ? database.count : k;

    std::vector<double> ap(queries.count, 0.0);
    parallel_for(queries.count, threads, [&](size_t begin, size_t end) {
        std::vector<int64_t> dist;
        std::vector<uint32_t> order(database.count);
        std::vector<uint8_t> relevance(database.count);
        for (size_t qi = begin; qi < end; ++qi) {
            distances_to_all(queries, qi, database, metric, dist);
            for (size_t j = 0; j < database.count; ++j) {
                order[j] = static_cast<uint32_t>(j);
            }
            std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
                return dist[x] != dist[y] ? dist[x] < dist[y] : x < y;
            });
            const uint32_t label = queries.labels[qi];
            for (size_t j = 0; j < database.count; ++j) {
                relevance[j] = database.labels[order[j]] == label ? 1 : 0;
            }
            ap[qi] = average_precision(relevance, effective_k);
        }
    });

    double sum = 0.0;
    for (const double v : ap) {
        sum += v;
    }
    return sum / static_cast<double>(queries.count);
}

DistanceHistograms distance_histograms(const CodeSet& queries, const CodeSet& database,
                                       MetricKind metric) {
    check_compatible(queries, database, metric);
    if (queries.count == 0 || database.count == 0) {
        throw ParameterError("distance histograms need nonempty query and database sets");
    }

    DistanceHistograms h;
    h.max_twice = 2 * static_cast<int64_t>(queries.length);
    std::vector<uint64_t> pos_counts(h.max_twice + 1, 0);
    std::vector<uint64_t> neg_counts(h.max_twice + 1, 0);

    std::vector<int64_t> dist;
    for (size_t qi = 0; qi < queries.count; ++qi) {
        distances_to_all(queries, qi, database, metric, dist);
        const uint32_t label = queries.labels[qi];
        for (size_t j = 0; j < database.count; ++j) {
            if (database.labels[j] == label) {
                ++pos_counts[dist[j]];
            } else {
                ++neg_counts[dist[j]];
            }
        }
    }

    for (const uint64_t c : pos_counts) {
        h.pos_pairs += c;
    }
    for (const uint64_t c : neg_counts) {
        h.neg_pairs += c;
    }
    h.pos.assign(pos_counts.size(), 0.0);
    h.neg.assign(neg_counts.size(), 0.0);
    for (size_t d = 0; d < pos_counts.size(); ++d) {
        if (h.pos_pairs > 0) {
            h.pos[d] = static_cast<double>(pos_counts[d]) / static_cast<double>(h.pos_pairs);
        }
        if (h.neg_pairs > 0) {
            h.neg[d] = static_cast<double>(neg_counts[d]) / static_cast<double>(h.neg_pairs);
        }
    }
    return h;
}

double overlap_area(const DistanceHistograms& h) {
    double overlap = 0.0;
    for (size_t d = 0; d < h.pos.size(); ++d) {
        overlap += std::min(h.pos[d], h.neg[d]);
    }
    return overlap;
}

AmbiguityResult ambiguity_rate(const CodeSet& queries, const CodeSet& database, MetricKind metric,
                               uint64_t max_triples, uint64_t seed) {
    check_compatible(queries, database, metric);
    if (queries.count == 0 || database.count == 0) {
        throw ParameterError("ambiguity rate needs nonempty query and database sets");
    }

    // Per-query positive/negative index lists and the triple-count prefix,
    // so a flat triple id maps to a unique (query, positive, negative).
    std::vector<std::vector<uint32_t>> pos(queries.count);
    std::vector<std::vector<uint32_t>> neg(queries.count);
    std::vector<uint64_t> prefix;  // cumulative triples over usable queries
    std::vector<uint32_t> usable;  // query indices with both sides nonempty

    AmbiguityResult result;
    uint64_t total = 0;
    for (size_t qi = 0; qi < queries.count; ++qi) {
        const uint32_t label = queries.labels[qi];
        for (size_t j = 0; j < database.count; ++j) {
            if (database.labels[j] == label) {
                pos[qi].push_back(static_cast<uint32_t>(j));
            } else {
                neg[qi].push_back(static_cast<uint32_t>(j));
            }
        }
        if (pos[qi].empty() || neg[qi].empty()) {
            ++result.skipped_queries;
            continue;
        }
        usable.push_back(static_cast<uint32_t>(qi));
        prefix.push_back(total);
        total += static_cast<uint64_t>(pos[qi].size()) * neg[qi].size();
    }
    if (total == 0) {
        return result;
    }

    std::vector<int64_t> dist;
    uint64_t ambiguous = 0;

    if (total <= max_triples) {
        result.exhaustive = true;
        result.triples = total;
        for (const uint32_t qi : usable) {
            distances_to_all(queries, qi, database, metric, dist);
            for (const uint32_t p : pos[qi]) {
                for (const uint32_t n : neg[qi]) {
                    if (dist[n] - dist[p] <= 0) {
                        ++ambiguous;
                    }
                }
            }
        }
    } else {
        result.exhaustive = false;
        result.triples = max_triples;
        std::mt19937_64 rng(seed);
        for (uint64_t t = 0; t < max_triples; ++t) {
            // Uniform over the triple space; modulo bias is below 2^-40 for
            // any realistic triple count and keeps the draw sequence simple
            // and reproducible.
            const uint64_t id = rng() % total;
            const size_t u =
                static_cast<size_t>(std::upper_bound(prefix.begin(), prefix.end(), id) -
                                    prefix.begin()) -
                1;
            const uint32_t qi = usable[u];
            const uint64_t r = id - prefix[u];
            const uint32_t p = pos[qi][static_cast<size_t>(r / neg[qi].size())];
            const uint32_t n = neg[qi][static_cast<size_t>(r % neg[qi].size())];
            const int64_t dp = code_distance_twice(queries, qi, database, p, metric);
            const int64_t dn = code_distance_twice(queries, qi, database, n, metric);
            if (dn - dp <= 0) {
                ++ambiguous;
            }
        }
    }

    result.ambiguous = ambiguous;
    result.rate = static_cast<double>(ambiguous) / static_cast<double>(result.triples);
    return result;
}

std::vector<double> poisson_binomial_pmf(std::span<const double> p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
            throw ParameterError("probability " + std::to_string(p[i]) + " at index " +
                                 std::to_string(i) + " outside [0, 1]");
        }
    }
    std::vector<double> pmf{1.0};
    for (const double pi : p) {
        std::vector<double> next(pmf.size() + 1, 0.0);
        for (size_t k = 0; k < pmf.size(); ++k) {
            next[k] += pmf[k] * (1.0 - pi);
            next[k + 1] += pmf[k] * pi;
        }
        pmf = std::move(next);
    }
    return pmf;
}

RetrievalReport evaluate_retrieval(const CodeSet& queries, const CodeSet& database, size_t k,
                                   MetricKind metric, uint64_t max_triples, uint64_t seed,
                                   int threads) {
    RetrievalReport report;
    report.metric = metric;
    report.code_kind = queries.kind;
    report.code_length = queries.length;
    report.num_queries = queries.count;
    report.num_database = database.count;
    report.k = k;
    report.map = map_at_k(queries, database, k, metric, threads);
    report.histograms = distance_histograms(queries, database, metric);
    report.overlap = overlap_area(report.histograms);
    report.ambiguity = ambiguity_rate(queries, database, metric, max_triples, seed);
    return report;
}

void write_report(std::ostream& os, const RetrievalReport& report) {
    char buf[64];
    os << "metric: " << to_string(report.metric) << "\n";
    os << "code_kind: " << to_string(report.code_kind) << "\n";
    os << "code_length: " << report.code_length << "\n";
    os << "queries: " << report.num_queries << "\n";
    os << "database: " << report.num_database << "\n";
    if (report.k == 0) {
        os << "k: all\n";
    } else {
        os << "k: " << report.k << "\n";
    }
    std::snprintf(buf, sizeof(buf), "%.9g", report.map);
    os << "map: " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.9g", report.overlap);
    os << "overlap: " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.9g", report.ambiguity.rate);
    os << "ambiguity_rate: " << buf << "\n";
    os << "ambiguity_triples: " << report.ambiguity.triples << "\n";
    os << "ambiguity_exhaustive: " << (report.ambiguity.exhaustive ? "yes" : "no") << "\n";
    os << "skipped_queries: " << report.ambiguity.skipped_queries << "\n";
}

void write_histograms_tsv(std::ostream& os, const DistanceHistograms& h) {
    char buf[64];
    os << "distance\tpos\tneg\n";
    for (int64_t d = 0; d <= h.max_twice; ++d) {
        std::snprintf(buf, sizeof(buf), "%.1f", 0.5 * static_cast<double>(d));
        os << buf;
        std::snprintf(buf, sizeof(buf), "%.9g", h.pos[d]);
        os << "\t" << buf;
        std::snprintf(buf, sizeof(buf), "%.9g", h.neg[d]);
        os << "\t" << buf << "\n";
    }
}

}  // namespace ternhash
