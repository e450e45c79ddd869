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

#include "ternhash/error.hpp"

namespace ternhash {

// One benchmarked distance kind. Lengths are stated in trits; the binary and
// matmul baselines run at the binary-equivalent width of 2 * length (a
// ternary code of L trits occupies the same 2L bits as a 2L-bit binary
// code, which is the comparison the timing table pairs up).
enum class BenchKind {
    Matmul,
    Binary,
    Lukasiewicz,
    Kleene,
};

std::string to_string(BenchKind kind);
BenchKind bench_kind_from_string(const std::string& name);

// Float inner products of one query against every database row; the
// float32 brute-force baseline. database is row-major, rows x query.size().
std::vector<float> matmul_float_distance(std::span<const float> query,
                                         std::span<const float> database, size_t rows);

// Seeded inputs for one benchmark configuration, exposed so the checksums
// can be recomputed independently of the timing harness.
struct BenchData {
    uint32_t length_trits = 0;
    uint32_t db_size = 0;
    size_t words_per_code = 0;      // code kinds: words per query/database row
    std::vector<uint64_t> query_words;
    std::vector<uint64_t> db_words;  // db_size x words_per_code, row-major
    std::vector<float> query_floats;
    std::vector<float> db_floats;    // db_size x (2 * length_trits), row-major
};

BenchData make_bench_data(BenchKind kind, uint32_t length_trits, uint32_t db_size, uint64_t seed);

// Checksum of one full query-vs-database sweep over the given data: the sum
// of twice-grid distances for code kinds, or the bit pattern of the double
// sum of inner products for matmul.
uint64_t sweep_checksum(BenchKind kind, const BenchData& data);

struct BenchReport {
    BenchKind kind = BenchKind::Kleene;
    uint32_t length_trits = 0;
    uint32_t db_size = 0;
    uint32_t reps = 0;
    uint32_t sweeps_per_rep = 0;
    double min_seconds = 0.0;     // per sweep
    double median_seconds = 0.0;
    double mean_seconds = 0.0;
    uint64_t checksum = 0;
};

// Times 1-query-vs-db_size distance sweeps, single-threaded. One untimed
// warm-up repetition precedes `reps` timed ones; each repetition runs
// max(1, 10^6 / db_size) sweeps and must reproduce the same checksum.
BenchReport run_bench(BenchKind kind, uint32_t length_trits, uint32_t db_size, uint32_t reps,
                      uint64_t seed);

// Tab-separated table of median per-sweep seconds: one row per kind, one
// column per length, in first-appearance order.
void write_bench_table(std::ostream& os, std::span<const BenchReport> reports);

}  // namespace ternhash
