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

#include "ternhash/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "ternhash/packed_codes.hpp"

namespace ternhash {
namespace {

// Opaque data sink; keeps the compiler from hoisting repeated sweeps.
template <typename T>
inline void keep_alive(const T& value) {
    asm volatile("" : : "g"(value) : "memory");
}

void fill_random_ternary(std::span<uint64_t> words, size_t length, std::mt19937_64& rng) {
    PackedTernaryCode code(length);
    for (size_t i = 0; i < length; ++i) {
        const uint64_t r = rng() % 3;
        code.set(i, r == 0 ? Trit::False : (r == 1 ? Trit::Unknown : Trit::True));
    }
    std::copy(code.words().begin(), code.words().end(), words.begin());
}

void fill_random_binary(std::span<uint64_t> words, size_t length_bits, std::mt19937_64& rng) {
    PackedBinaryCode code(length_bits);
    for (size_t i = 0; i < length_bits; ++i) {
        code.set(i, (rng() & 1) != 0);
    }
    std::copy(code.words().begin(), code.words().end(), words.begin());
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string to_string(BenchKind kind) {
    switch (kind) {
        case BenchKind::Matmul:
            return "matmul";
        case BenchKind::Binary:
            return "binary";
        case BenchKind::Lukasiewicz:
            return "lukasiewicz";
        case BenchKind::Kleene:
            return "kleene";
    }
    return "?";
}

BenchKind bench_kind_from_string(const std::string& name) {
    if (name == "matmul") {
        return BenchKind::Matmul;
    }
    if (name == "binary") {
        return BenchKind::Binary;
    }
    if (name == "lukasiewicz" || name == "luka") {
        return BenchKind::Lukasiewicz;
    }
    if (name == "kleene") {
        return BenchKind::Kleene;
    }
    throw ParameterError("unknown benchmark kind '" + name +
                         "' (expected matmul, binary, lukasiewicz, or kleene)");
}

std::vector<float> matmul_float_distance(std::span<const float> query,
                                         std::span<const float> database, size_t rows) {
    if (database.size() != rows * query.size()) {
        throw DimensionError("database has " + std::to_string(database.size()) +
                             " values, expected " + std::to_string(rows) + " x " +
                             std::to_string(query.size()));
    }
    std::vector<float> out(rows, 0.0f);
    const size_t dim = query.size();
    for (size_t j = 0; j < rows; ++j) {
        const float* row = database.data() + j * dim;
        float acc = 0.0f;
        for (size_t k = 0; k < dim; ++k) {
            acc += query[k] * row[k];
        }
        out[j] = acc;
    }
    return out;
}

BenchData make_bench_data(BenchKind kind, uint32_t length_trits, uint32_t db_size, uint64_t seed) {
    if (length_trits == 0) {
        throw ParameterError("benchmark length must be positive");
    }
    if (db_size == 0) {
        throw ParameterError("benchmark database must be nonempty");
    }

    BenchData data;
    data.length_trits = length_trits;
    data.db_size = db_size;
    std::mt19937_64 rng(seed);

    switch (kind) {
        case BenchKind::Matmul: {
            const size_t dim = 2 * static_cast<size_t>(length_trits);
            data.query_floats.resize(dim);
            data.db_floats.resize(dim * db_size);
            const auto uniform = [&rng]() {
                return static_cast<float>(static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0);
            };
            for (float& v : data.query_floats) {
                v = uniform();
            }
            for (float& v : data.db_floats) {
                v = uniform();
            }
            break;
        }
        case BenchKind::Binary: {
            const size_t bits = 2 * static_cast<size_t>(length_trits);
            data.words_per_code = PackedBinaryCode::words_for(bits);
            data.query_words.resize(data.words_per_code);
            data.db_words.resize(data.words_per_code * db_size);
            fill_random_binary(data.query_words, bits, rng);
            for (uint32_t j = 0; j < db_size; ++j) {
                fill_random_binary(
                    std::span<uint64_t>(data.db_words).subspan(j * data.words_per_code,
                                                               data.words_per_code),
                    bits, rng);
            }
            break;
        }
        case BenchKind::Lukasiewicz:
        case BenchKind::Kleene: {
            data.words_per_code = PackedTernaryCode::words_for(length_trits);
            data.query_words.resize(data.words_per_code);
            data.db_words.resize(data.words_per_code * db_size);
            fill_random_ternary(data.query_words, length_trits, rng);
            for (uint32_t j = 0; j < db_size; ++j) {
                fill_random_ternary(
                    std::span<uint64_t>(data.db_words).subspan(j * data.words_per_code,
                                                               data.words_per_code),
                    length_trits, rng);
            }
            break;
        }
    }
    return data;
}

uint64_t sweep_checksum(BenchKind kind, const BenchData& data) {
    switch (kind) {
        case BenchKind::Matmul: {
            const std::vector<float> sims =
                matmul_float_distance(data.query_floats, data.db_floats, data.db_size);
            double sum = 0.0;
            for (const float s : sims) {
                sum += static_cast<double>(s);
            }
            return std::bit_cast<uint64_t>(sum);
        }
        case BenchKind::Binary: {
            const size_t bits = 2 * static_cast<size_t>(data.length_trits);
            uint64_t sum = 0;
            for (uint32_t j = 0; j < data.db_size; ++j) {
                const auto row = std::span<const uint64_t>(data.db_words)
                                     .subspan(j * data.words_per_code, data.words_per_code);
                sum += 2 * kernels::hamming(data.query_words, row, bits);
            }
            return sum;
        }
        case BenchKind::Lukasiewicz: {
            uint64_t sum = 0;
            for (uint32_t j = 0; j < data.db_size; ++j) {
                const auto row = std::span<const uint64_t>(data.db_words)
                                     .subspan(j * data.words_per_code, data.words_per_code);
                sum += static_cast<uint64_t>(
                    kernels::thd_lukasiewicz_twice(data.query_words, row, data.length_trits));
            }
            return sum;
        }
        case BenchKind::Kleene: {
            uint64_t sum = 0;
            for (uint32_t j = 0; j < data.db_size; ++j) {
                const auto row = std::span<const uint64_t>(data.db_words)
                                     .subspan(j * data.words_per_code, data.words_per_code);
                sum += static_cast<uint64_t>(
                    kernels::thd_kleene_twice(data.query_words, row, data.length_trits));
            }
            return sum;
        }
    }
    throw Error(ErrorCode::Internal, "unhandled benchmark kind");
}

BenchReport run_bench(BenchKind kind, uint32_t length_trits, uint32_t db_size, uint32_t reps,
                      uint64_t seed) {
    if (reps == 0) {
        throw ParameterError("benchmark needs at least 1 repetition");
    }
    const BenchData data = make_bench_data(kind, length_trits, db_size, seed);

    const uint32_t sweeps = static_cast<uint32_t>(std::max<uint64_t>(1, 1000000 / db_size));

    BenchReport report;
    report.kind = kind;
    report.length_trits = length_trits;
    report.db_size = db_size;
    report.reps = reps;
    report.sweeps_per_rep = sweeps;

    // Untimed warm-up; also pins the expected checksum.
    const uint64_t expected = sweep_checksum(kind, data);
    keep_alive(expected);

    std::vector<double> per_sweep(reps);
    for (uint32_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        for (uint32_t s = 0; s < sweeps; ++s) {
            const uint64_t c = sweep_checksum(kind, data);
            keep_alive(c);
            if (c != expected) {
                throw Error(ErrorCode::Internal, "benchmark checksum drifted between sweeps");
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        per_sweep[r] = std::chrono::duration<double>(t1 - t0).count() / sweeps;
    }

    report.checksum = expected;
    report.min_seconds = *std::min_element(per_sweep.begin(), per_sweep.end());
    report.median_seconds = median_of(per_sweep);
    double total = 0.0;
    for (const double s : per_sweep) {
        total += s;
    }
    report.mean_seconds = total / reps;
    return report;
}

void write_bench_table(std::ostream& os, std::span<const BenchReport> reports) {
    std::vector<uint32_t> lengths;
    std::vector<BenchKind> kinds;
    for (const BenchReport& r : reports) {
        if (std::find(lengths.begin(), lengths.end(), r.length_trits) == lengths.end()) {
            lengths.push_back(r.length_trits);
        }
        if (std::find(kinds.begin(), kinds.end(), r.kind) == kinds.end()) {
            kinds.push_back(r.kind);
        }
    }

    os << "kind";
    for (const uint32_t len : lengths) {
        os << "\t" << len;
    }
    os << "\n";

    char buf[64];
    for (const BenchKind kind : kinds) {
        os << to_string(kind);
        for (const uint32_t len : lengths) {
            const BenchReport* found = nullptr;
            for (const BenchReport& r : reports) {
                if (r.kind == kind && r.length_trits == len) {
                    found = &r;
                    break;
                }
            }
            if (found == nullptr) {
                os << "\t-";
            } else {
                std::snprintf(buf, sizeof(buf), "%.6e", found->median_seconds);
                os << "\t" << buf;
            }
        }
        os << "\n";
    }
}

}  // namespace ternhash
