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

#include "ternhash/data_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace ternhash {
namespace {

constexpr char kMagicFeatures[4] = {'T', 'R', 'N', 'H'};
constexpr char kMagicCodes[4] = {'T', 'R', 'N', 'C'};
constexpr char kMagicThresholds[4] = {'T', 'R', 'N', 'T'};
constexpr uint32_t kFormatVersion = 1;

class Reader {
public:
    explicit Reader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
        if (!in_.is_open()) {
            throw IoError("cannot open '" + path + "' for reading");
        }
    }

    void read_exact(void* dst, size_t n) {
        in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in_.gcount()) != n) {
            throw FormatError("'" + path_ + "' is truncated");
        }
    }

    uint8_t u8() {
        uint8_t b;
        read_exact(&b, 1);
        return b;
    }

    uint32_t u32() {
        uint8_t b[4];
        read_exact(b, 4);
        return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
               (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
    }

    uint64_t u64() {
        const uint64_t lo = u32();
        const uint64_t hi = u32();
        return lo | (hi << 32);
    }

    float f32() { return std::bit_cast<float>(u32()); }
    double f64() { return std::bit_cast<double>(u64()); }

    void expect_magic(const char (&magic)[4], const char* what) {
        char b[4];
        read_exact(b, 4);
        if (std::memcmp(b, magic, 4) != 0) {
            throw FormatError("'" + path_ + "' is not a " + what + " file (bad magic)");
        }
    }

    void expect_version() {
        const uint32_t v = u32();
        if (v != kFormatVersion) {
            throw FormatError("'" + path_ + "' has unsupported version " + std::to_string(v));
        }
    }

    void expect_eof() {
        char b;
        in_.read(&b, 1);
        if (in_.gcount() != 0) {
            throw FormatError("'" + path_ + "' has trailing data");
        }
    }

private:
    std::string path_;
    std::ifstream in_;
};

class Writer {
public:
    explicit Writer(const std::string& path) : path_(path), out_(path, std::ios::binary) {
        if (!out_.is_open()) {
            throw IoError("cannot open '" + path + "' for writing");
        }
    }

    void bytes(const void* src, size_t n) {
        out_.write(static_cast<const char*>(src), static_cast<std::streamsize>(n));
    }

    void u8(uint8_t v) { bytes(&v, 1); }

    void u32(uint32_t v) {
        const uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                              static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
        bytes(b, 4);
    }

    void u64(uint64_t v) {
        u32(static_cast<uint32_t>(v));
        u32(static_cast<uint32_t>(v >> 32));
    }

    void f32(float v) { u32(std::bit_cast<uint32_t>(v)); }
    void f64(double v) { u64(std::bit_cast<uint64_t>(v)); }

    void close() {
        out_.flush();
        if (!out_.good()) {
            throw IoError("write to '" + path_ + "' failed");
        }
        out_.close();
    }

private:
    std::string path_;
    std::ofstream out_;
};

// Guards n * per * unit against u64 wraparound before any allocation.
void check_payload_size(uint64_t n, uint64_t per, uint64_t unit, const std::string& path) {
    if (per != 0 && unit != 0 && n > std::numeric_limits<uint64_t>::max() / per / unit) {
        throw FormatError("'" + path + "' declares an impossibly large payload");
    }
}

FeatureSet load_features_trnh(const std::string& path) {
    Reader r(path);
    r.expect_magic(kMagicFeatures, "feature");
    r.expect_version();
    FeatureSet set;
    set.count = r.u32();
    set.bits = r.u32();
    set.classes = r.u32();
    check_payload_size(set.count, set.bits, sizeof(float), path);
    set.outputs.resize(static_cast<size_t>(set.count) * set.bits);
    for (float& v : set.outputs) {
        v = r.f32();
    }
    set.labels.resize(set.count);
    for (uint32_t& l : set.labels) {
        l = r.u32();
    }
    r.expect_eof();
    set.validate();
    return set;
}

}  // namespace

FeatureSet load_features(const std::string& path) {
    {
        std::ifstream probe(path, std::ios::binary);
        if (!probe.is_open()) {
            throw IoError("cannot open '" + path + "' for reading");
        }
        char b[4] = {0, 0, 0, 0};
        probe.read(b, 4);
        if (probe.gcount() == 4 && std::memcmp(b, kMagicFeatures, 4) == 0) {
            probe.close();
            return load_features_trnh(path);
        }
    }
    return load_features_csv(path);
}

void save_features(const FeatureSet& set, const std::string& path) {
    set.validate();
    Writer w(path);
    w.bytes(kMagicFeatures, 4);
    w.u32(kFormatVersion);
    w.u32(set.count);
    w.u32(set.bits);
    w.u32(set.classes);
    for (const float v : set.outputs) {
        w.f32(v);
    }
    for (const uint32_t l : set.labels) {
        w.u32(l);
    }
    w.close();
}

FeatureSet load_features_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw IoError("cannot open '" + path + "' for reading");
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("'" + path + "' is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            header.push_back(field);
        }
    }
    if (header.size() < 2 || header.back() != "label") {
        throw FormatError("'" + path + "' needs a header with output columns and a final label");
    }
    const size_t bits = header.size() - 1;
    for (size_t k = 0; k < bits; ++k) {
        if (header[k] != "out" + std::to_string(k)) {
            throw FormatError("'" + path + "' header column " + std::to_string(k) +
                              " should be out" + std::to_string(k) + ", got '" + header[k] + "'");
        }
    }

    FeatureSet set;
    set.bits = static_cast<uint32_t>(bits);
    uint32_t max_label = 0;
    size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        ++row;
        std::stringstream ss(line);
        std::string field;
        size_t col = 0;
        while (std::getline(ss, field, ',')) {
            const char* s = field.c_str();
            char* end = nullptr;
            if (col < bits) {
                const float v = std::strtof(s, &end);
                if (end == s || *end != '\0') {
                    throw FormatError("'" + path + "' row " + std::to_string(row) +
                                      ": bad float '" + field + "'");
                }
                set.outputs.push_back(v);
            } else {
                const unsigned long l = std::strtoul(s, &end, 10);
                if (end == s || *end != '\0' || l > std::numeric_limits<uint32_t>::max()) {
                    throw FormatError("'" + path + "' row " + std::to_string(row) +
                                      ": bad label '" + field + "'");
                }
                set.labels.push_back(static_cast<uint32_t>(l));
                max_label = std::max(max_label, static_cast<uint32_t>(l));
            }
            ++col;
        }
        if (col != bits + 1) {
            throw FormatError("'" + path + "' row " + std::to_string(row) + " has " +
                              std::to_string(col) + " fields, expected " +
                              std::to_string(bits + 1));
        }
    }
    set.count = static_cast<uint32_t>(set.labels.size());
    set.classes = set.count == 0 ? 0 : max_label + 1;
    set.validate();
    return set;
}

void save_features_csv(const FeatureSet& set, const std::string& path) {
    set.validate();
    std::ofstream out(path);
    if (!out.is_open()) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    for (uint32_t k = 0; k < set.bits; ++k) {
        out << "out" << k << ",";
    }
    out << "label\n";
    char buf[32];
    for (uint32_t i = 0; i < set.count; ++i) {
        const auto row = set.row(i);
        for (uint32_t k = 0; k < set.bits; ++k) {
            std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(row[k]));
            out << buf << ",";
        }
        out << set.labels[i] << "\n";
    }
    out.flush();
    if (!out.good()) {
        throw IoError("write to '" + path + "' failed");
    }
}

CodeSet load_codes(const std::string& path) {
    Reader r(path);
    r.expect_magic(kMagicCodes, "code");
    r.expect_version();
    const uint8_t kind_byte = r.u8();
    if (kind_byte > 1) {
        throw FormatError("'" + path + "' has unknown code kind " + std::to_string(kind_byte));
    }
    CodeSet set;
    set.kind = static_cast<CodeKind>(kind_byte);
    set.count = 0;
    set.length = 0;
    const uint32_t count = r.u32();
    set.length = r.u32();
    const size_t per_code = set.words_per_code();
    check_payload_size(count, per_code, sizeof(uint64_t), path);

    std::vector<uint64_t> words(per_code);
    for (uint32_t i = 0; i < count; ++i) {
        for (uint64_t& w : words) {
            w = r.u64();
        }
        // The validating constructors enforce zero padding and, for ternary
        // codes, the absence of 11 pairs.
        if (set.kind == CodeKind::Ternary) {
            set.append_ternary(PackedTernaryCode::from_words(set.length, words), 0);
        } else {
            set.append_binary(PackedBinaryCode::from_words(set.length, words), 0);
        }
    }
    for (uint32_t i = 0; i < count; ++i) {
        set.labels[i] = r.u32();
    }
    r.expect_eof();
    return set;
}

void save_codes(const CodeSet& set, const std::string& path) {
    set.validate();
    Writer w(path);
    w.bytes(kMagicCodes, 4);
    w.u32(kFormatVersion);
    w.u8(static_cast<uint8_t>(set.kind));
    w.u32(set.count);
    w.u32(set.length);
    for (const uint64_t word : set.words) {
        w.u64(word);
    }
    for (const uint32_t l : set.labels) {
        w.u32(l);
    }
    w.close();
}

ThresholdTable load_thresholds(const std::string& path) {
    Reader r(path);
    r.expect_magic(kMagicThresholds, "threshold");
    r.expect_version();
    const uint32_t bits = r.u32();
    check_payload_size(bits, 2, sizeof(double), path);
    ThresholdTable table;
    table.bits.resize(bits);
    for (uint32_t k = 0; k < bits; ++k) {
        table.bits[k].t1 = r.f64();
        table.bits[k].t2 = r.f64();
        if (table.bits[k].t1 > table.bits[k].t2) {
            throw FormatError("'" + path + "' has out-of-order thresholds at bit " +
                              std::to_string(k));
        }
    }
    r.expect_eof();
    table.validate();
    return table;
}

void save_thresholds(const ThresholdTable& table, const std::string& path) {
    table.validate();
    Writer w(path);
    w.bytes(kMagicThresholds, 4);
    w.u32(kFormatVersion);
    w.u32(static_cast<uint32_t>(table.num_bits()));
    for (const BitThresholds& t : table.bits) {
        w.f64(t.t1);
        w.f64(t.t2);
    }
    w.close();
}

FeatureSet synth_gaussian(uint32_t classes, uint32_t bits, uint32_t per_class, double separation,
                          double ambiguity, uint64_t seed) {
    if (classes < 2) {
        throw ParameterError("synthetic set needs at least 2 classes");
    }
    if (bits < 1) {
        throw ParameterError("synthetic set needs at least 1 bit");
    }
    if (per_class < 1) {
        throw ParameterError("synthetic set needs at least 1 sample per class");
    }
    if (!(ambiguity >= 0.0 && ambiguity <= 1.0)) {
        throw ParameterError("ambiguity must lie in [0, 1]");
    }
    if (!std::isfinite(separation)) {
        throw ParameterError("separation must be finite");
    }

    const uint64_t count64 = static_cast<uint64_t>(classes) * per_class;
    if (count64 > std::numeric_limits<uint32_t>::max()) {
        throw ParameterError("synthetic set dimensions too large");
    }
    const uint32_t count = static_cast<uint32_t>(count64);

    FeatureSet set;
    set.count = count;
    set.bits = bits;
    set.classes = classes;
    set.outputs.resize(static_cast<size_t>(count) * bits);
    set.labels.resize(count);
    for (uint32_t i = 0; i < count; ++i) {
        set.labels[i] = i / per_class;
    }

    std::mt19937_64 rng(seed);
    // Generators below consume a fixed number of draws per event, so the
    // stream layout (and therefore the output) is pinned by the seed alone.
    const auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    const auto normal01 = [&]() {
        // Box-Muller, two draws per variate, nothing cached.
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    };

    const double half = separation / 2.0;
    std::vector<double> class_mean(classes);
    for (uint32_t k = 0; k < bits; ++k) {
        for (uint32_t c = 0; c < classes; ++c) {
            class_mean[c] = (rng() & 1) ? half : -half;
        }
        for (uint32_t i = 0; i < count; ++i) {
            const bool ambiguous = uniform01() < ambiguity;
            const double mean = ambiguous ? 0.0 : class_mean[set.labels[i]];
            set.outputs[static_cast<size_t>(i) * bits + k] =
                static_cast<float>(mean + normal01());
        }
    }
    return set;
}

}  // namespace ternhash
