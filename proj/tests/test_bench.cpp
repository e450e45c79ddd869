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

#include <cstdint>
#include <cstring>
#include <span>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ternhash/bench.hpp"
#include "ternhash/packed_codes.hpp"

using namespace ternhash;

TEST_CASE("matmul distance on hand-checked inputs") {
    const std::vector<float> zeros_q = {0.0f, 0.0f, 0.0f};
    const std::vector<float> zeros_db = {1.0f, 2.0f, 3.0f, 4.0f, 5.0f, 6.0f};
    const std::vector<float> z = matmul_float_distance(zeros_q, zeros_db, 2);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == 0.0f);
    CHECK(z[1] == 0.0f);

    const std::vector<float> q1 = {2.5f};
    const std::vector<float> db1 = {4.0f, -2.0f, 0.0f};
    const std::vector<float> s = matmul_float_distance(q1, db1, 3);
    CHECK(s[0] == 10.0f);
    CHECK(s[1] == -5.0f);
    CHECK(s[2] == 0.0f);

    // 4 rows x 3 columns against (1, 2, 3).
    const std::vector<float> q = {1.0f, 2.0f, 3.0f};
    const std::vector<float> db = {1.0f, 0.0f, 0.0f,  0.0f, 1.0f, 0.0f,
                                   1.0f, 1.0f, 1.0f,  -1.0f, 2.0f, -3.0f};
    const std::vector<float> r = matmul_float_distance(q, db, 4);
    CHECK(r[0] == 1.0f);
    CHECK(r[1] == 2.0f);
    CHECK(r[2] == 6.0f);
    CHECK(r[3] == -6.0f);

    CHECK_THROWS_AS(matmul_float_distance(q, db, 5), DimensionError);
}

TEST_CASE("bench data generation is deterministic in the seed") {
    for (const BenchKind kind :
         {BenchKind::Matmul, BenchKind::Binary, BenchKind::Lukasiewicz, BenchKind::Kleene}) {
        const BenchData a = make_bench_data(kind, 32, 50, 5);
        const BenchData b = make_bench_data(kind, 32, 50, 5);
        CHECK(a.query_words == b.query_words);
        CHECK(a.db_words == b.db_words);
        CHECK(a.query_floats == b.query_floats);
        CHECK(a.db_floats == b.db_floats);
        CHECK(sweep_checksum(kind, a) == sweep_checksum(kind, b));

        const BenchData c = make_bench_data(kind, 32, 50, 6);
        CHECK(sweep_checksum(kind, c) != sweep_checksum(kind, a));
    }
}

TEST_CASE("binary sweep checksum matches a naive bit loop") {
    const BenchData data = make_bench_data(BenchKind::Binary, 33, 40, 13);
    // 33 trits benchmark at the binary-equivalent width of 66 bits.
    REQUIRE(data.words_per_code == PackedBinaryCode::words_for(66));

    uint64_t expect = 0;
    for (uint32_t row = 0; row < data.db_size; ++row) {
        std::span<const uint64_t> rw(data.db_words.data() + row * data.words_per_code,
                                     data.words_per_code);
        uint64_t bits = 0;
        for (size_t w = 0; w < data.words_per_code; ++w) {
            bits += oracles::popcount_loop(data.query_words[w] ^ rw[w]);
        }
        expect += 2 * bits;  // binary hamming on the shared twice grid
    }
    CHECK(sweep_checksum(BenchKind::Binary, data) == expect);
}

TEST_CASE("ternary sweep checksums match the scalar tables") {
    for (const BenchKind kind : {BenchKind::Lukasiewicz, BenchKind::Kleene}) {
        const BenchData data = make_bench_data(kind, 45, 30, 17);
        const LogicKind logic =
            kind == BenchKind::Lukasiewicz ? LogicKind::Lukasiewicz : LogicKind::Kleene;

        const PackedTernaryCode query = PackedTernaryCode::from_words(
            45, std::vector<uint64_t>(data.query_words.begin(), data.query_words.end()));
        const std::vector<Trit> q = unpack_ternary(query);

        uint64_t expect = 0;
        for (uint32_t row = 0; row < data.db_size; ++row) {
            const std::vector<uint64_t> words(
                data.db_words.begin() + row * data.words_per_code,
                data.db_words.begin() + (row + 1) * data.words_per_code);
            const std::vector<Trit> d = unpack_ternary(PackedTernaryCode::from_words(45, words));
            int64_t twice = 0;
            for (size_t k = 0; k < 45; ++k) {
                twice += oracles::thd_twice(static_cast<int>(q[k]), static_cast<int>(d[k]),
                                            logic == LogicKind::Lukasiewicz);
            }
            expect += static_cast<uint64_t>(twice);
        }
        CHECK(sweep_checksum(kind, data) == expect);
    }
}

TEST_CASE("matmul checksum reflects the summed inner products") {
    const BenchData data = make_bench_data(BenchKind::Matmul, 8, 20, 23);
    const std::vector<float> dists =
        matmul_float_distance(data.query_floats, data.db_floats, data.db_size);
    double sum = 0.0;
    for (const float d : dists) {
        sum += static_cast<double>(d);
    }
    uint64_t bits;
    static_assert(sizeof(bits) == sizeof(sum));
    std::memcpy(&bits, &sum, sizeof(bits));
    CHECK(sweep_checksum(BenchKind::Matmul, data) == bits);
}

TEST_CASE("timed runs produce ordered summary statistics") {
    const BenchReport r = run_bench(BenchKind::Kleene, 16, 50, 3, 1);
    CHECK(r.kind == BenchKind::Kleene);
    CHECK(r.length_trits == 16);
    CHECK(r.db_size == 50);
    CHECK(r.reps == 3);
    CHECK(r.sweeps_per_rep == 1000000 / 50);
    CHECK(r.min_seconds > 0.0);
    CHECK(r.min_seconds <= r.median_seconds);
    CHECK(r.min_seconds <= r.mean_seconds);
    CHECK(r.checksum == sweep_checksum(BenchKind::Kleene, make_bench_data(BenchKind::Kleene, 16, 50, 1)));

    CHECK_THROWS_AS(run_bench(BenchKind::Kleene, 16, 50, 0, 1), ParameterError);
    CHECK_THROWS_AS(run_bench(BenchKind::Kleene, 0, 50, 3, 1), ParameterError);
    CHECK_THROWS_AS(run_bench(BenchKind::Kleene, 16, 0, 3, 1), ParameterError);
}

TEST_CASE("large databases still run at least one sweep per rep") {
    const BenchReport r = run_bench(BenchKind::Lukasiewicz, 4, 2000000, 1, 2);
    CHECK(r.sweeps_per_rep == 1);
}

TEST_CASE("bench table layout") {
    std::vector<BenchReport> reports;
    for (const BenchKind kind : {BenchKind::Matmul, BenchKind::Kleene}) {
        for (const uint32_t length : {16u, 32u}) {
            BenchReport r;
            r.kind = kind;
            r.length_trits = length;
            r.median_seconds = 1e-6 * (length + (kind == BenchKind::Matmul ? 100 : 0));
            reports.push_back(r);
        }
    }
    // Drop one cell to exercise the missing-entry dash.
    reports.erase(reports.begin() + 1);

    std::ostringstream os;
    write_bench_table(os, reports);
    std::istringstream in(os.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "kind\t16\t32");
    std::string row;
    std::getline(in, row);
    CHECK(row.substr(0, 7) == "matmul\t");
    CHECK(row.find("\t-") != std::string::npos);  // the erased length-32 cell
    std::getline(in, row);
    CHECK(row.substr(0, 7) == "kleene\t");
    CHECK(row.find("\t-") == std::string::npos);
    CHECK(row.find("e-") != std::string::npos);  // %.6e formatting
}

TEST_CASE("kind names round-trip") {
    for (const BenchKind kind :
         {BenchKind::Matmul, BenchKind::Binary, BenchKind::Lukasiewicz, BenchKind::Kleene}) {
        CHECK(bench_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(bench_kind_from_string("simd"), ParameterError);
}
