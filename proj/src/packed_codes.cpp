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

#include "ternhash/packed_codes.hpp"

#include <bit>
#include <string>

namespace ternhash {
namespace {

// Mask covering the 2*count low bits of a word; count in [0, 32].
constexpr uint64_t pair_mask(size_t count) noexcept {
    return count >= 32 ? ~0ULL : ((1ULL << (2 * count)) - 1);
}

// Mask covering the count low bits of a word; count in [0, 64].
constexpr uint64_t bit_mask(size_t count) noexcept {
    return count >= 64 ? ~0ULL : ((1ULL << count) - 1);
}

void check_ternary_words(size_t length, const std::vector<uint64_t>& words) {
    const size_t need = PackedTernaryCode::words_for(length);
    if (words.size() != need) {
        throw FormatError("ternary code of length " + std::to_string(length) + " needs " +
                          std::to_string(need) + " words, got " + std::to_string(words.size()));
    }
    if (need > 0) {
        const size_t rem = length % PackedTernaryCode::kTritsPerWord;
        if (rem != 0 && (words.back() & ~pair_mask(rem)) != 0) {
            throw FormatError("ternary code has nonzero padding bits in last word");
        }
    }
    for (size_t w = 0; w < words.size(); ++w) {
        if (word_has_forbidden_pair(words[w])) {
            throw CorruptCodeError("forbidden 11 trit pair in word " + std::to_string(w));
        }
    }
}

}  // namespace

PackedTernaryCode PackedTernaryCode::from_words(size_t length, std::vector<uint64_t> words) {
    check_ternary_words(length, words);
    PackedTernaryCode code;
    code.length_ = length;
    code.words_ = std::move(words);
    return code;
}

void PackedTernaryCode::set(size_t i, Trit t) {
    if (i >= length_) {
        throw ParameterError("trit index " + std::to_string(i) + " out of range for length " +
                             std::to_string(length_));
    }
    const size_t shift = 2 * (i % kTritsPerWord);
    uint64_t pair = 0;
    switch (t) {
        case Trit::True:
            pair = 0b10;
            break;
        case Trit::Unknown:
            pair = 0b00;
            break;
        case Trit::False:
            pair = 0b01;
            break;
    }
    uint64_t& w = words_[i / kTritsPerWord];
    w = (w & ~(0b11ULL << shift)) | (pair << shift);
}

Trit PackedTernaryCode::get(size_t i) const {
    if (i >= length_) {
        throw ParameterError("trit index " + std::to_string(i) + " out of range for length " +
                             std::to_string(length_));
    }
    const uint64_t pair = (words_[i / kTritsPerWord] >> (2 * (i % kTritsPerWord))) & 0b11;
    switch (pair) {
        case 0b10:
            return Trit::True;
        case 0b00:
            return Trit::Unknown;
        case 0b01:
            return Trit::False;
        default:
            throw CorruptCodeError("forbidden 11 trit pair at index " + std::to_string(i));
    }
}

PackedBinaryCode PackedBinaryCode::from_words(size_t length, std::vector<uint64_t> words) {
    const size_t need = words_for(length);
    if (words.size() != need) {
        throw FormatError("binary code of length " + std::to_string(length) + " needs " +
                          std::to_string(need) + " words, got " + std::to_string(words.size()));
    }
    if (need > 0) {
        const size_t rem = length % kBitsPerWord;
        if (rem != 0 && (words.back() & ~bit_mask(rem)) != 0) {
            throw FormatError("binary code has nonzero padding bits in last word");
        }
    }
    PackedBinaryCode code;
    code.length_ = length;
    code.words_ = std::move(words);
    return code;
}

void PackedBinaryCode::set(size_t i, bool v) {
    if (i >= length_) {
        throw ParameterError("bit index " + std::to_string(i) + " out of range for length " +
                             std::to_string(length_));
    }
    const uint64_t mask = 1ULL << (i % kBitsPerWord);
    uint64_t& w = words_[i / kBitsPerWord];
    w = v ? (w | mask) : (w & ~mask);
}

bool PackedBinaryCode::bit(size_t i) const {
    if (i >= length_) {
        throw ParameterError("bit index " + std::to_string(i) + " out of range for length " +
                             std::to_string(length_));
    }
    return (words_[i / kBitsPerWord] >> (i % kBitsPerWord)) & 1;
}

PackedTernaryCode pack_ternary(std::span<const Trit> trits) {
    PackedTernaryCode code(trits.size());
    for (size_t i = 0; i < trits.size(); ++i) {
        code.set(i, trits[i]);
    }
    return code;
}

std::vector<Trit> unpack_ternary(const PackedTernaryCode& code) {
    std::vector<Trit> trits(code.length());
    for (size_t i = 0; i < trits.size(); ++i) {
        trits[i] = code.get(i);
    }
    return trits;
}

namespace kernels {
namespace {

void check_span_words(std::span<const uint64_t> a, std::span<const uint64_t> b, size_t need) {
    if (a.size() < need || b.size() < need) {
        throw DimensionError("packed spans too short: need " + std::to_string(need) +
                             " words, got " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
}

}  // namespace

int64_t thd_lukasiewicz_twice(std::span<const uint64_t> a, std::span<const uint64_t> b,
                              size_t length_trits) {
    const size_t words = PackedTernaryCode::words_for(length_trits);
    check_span_words(a, b, words);
    if (words == 0) {
        return 0;
    }
    int64_t twice = 0;
    for (size_t w = 0; w + 1 < words; ++w) {
        twice += std::popcount(a[w] ^ b[w]);
    }
    const size_t rem = length_trits - (words - 1) * PackedTernaryCode::kTritsPerWord;
    twice += std::popcount((a[words - 1] ^ b[words - 1]) & pair_mask(rem));
    return twice;
}

int64_t thd_kleene_twice(std::span<const uint64_t> a, std::span<const uint64_t> b,
                         size_t length_trits) {
    const size_t words = PackedTernaryCode::words_for(length_trits);
    check_span_words(a, b, words);
    if (words == 0) {
        return 0;
    }
    int64_t twice = 0;
    for (size_t w = 0; w < words; ++w) {
        // Pairs where all four bits are zero are Unknown on both sides; they
        // add 0.5 each under Kleene and never overlap the xor bits.
        const uint64_t o = a[w] | b[w];
        const uint64_t both_unknown = ~(o | (o >> 1)) & kEvenBits;
        uint64_t diff = (a[w] ^ b[w]) | both_unknown;
        if (w + 1 == words) {
            const size_t rem = length_trits - (words - 1) * PackedTernaryCode::kTritsPerWord;
            diff &= pair_mask(rem);
        }
        twice += std::popcount(diff);
    }
    return twice;
}

uint64_t hamming(std::span<const uint64_t> a, std::span<const uint64_t> b, size_t length_bits) {
    const size_t words = PackedBinaryCode::words_for(length_bits);
    check_span_words(a, b, words);
    if (words == 0) {
        return 0;
    }
    uint64_t d = 0;
    for (size_t w = 0; w + 1 < words; ++w) {
        d += static_cast<uint64_t>(std::popcount(a[w] ^ b[w]));
    }
    const size_t rem = length_bits - (words - 1) * PackedBinaryCode::kBitsPerWord;
    d += static_cast<uint64_t>(std::popcount((a[words - 1] ^ b[words - 1]) & bit_mask(rem)));
    return d;
}

}  // namespace kernels

namespace {

void check_same_length(size_t la, size_t lb) {
    if (la != lb) {
        throw DimensionError("codes differ in length: " + std::to_string(la) + " vs " +
                             std::to_string(lb));
    }
}

}  // namespace

TernaryDistance thd_lukasiewicz_packed(const PackedTernaryCode& a, const PackedTernaryCode& b) {
    check_same_length(a.length(), b.length());
    return TernaryDistance::from_twice(
        kernels::thd_lukasiewicz_twice(a.words(), b.words(), a.length()));
}

TernaryDistance thd_kleene_packed(const PackedTernaryCode& a, const PackedTernaryCode& b) {
    check_same_length(a.length(), b.length());
    return TernaryDistance::from_twice(kernels::thd_kleene_twice(a.words(), b.words(), a.length()));
}

TernaryDistance thd_packed(const PackedTernaryCode& a, const PackedTernaryCode& b,
                           LogicKind logic) {
    return logic == LogicKind::Lukasiewicz ? thd_lukasiewicz_packed(a, b)
                                           : thd_kleene_packed(a, b);
}

uint64_t hamming_binary_packed(const PackedBinaryCode& a, const PackedBinaryCode& b) {
    check_same_length(a.length(), b.length());
    return kernels::hamming(a.words(), b.words(), a.length());
}

}  // namespace ternhash
