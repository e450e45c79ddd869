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

#include "ternhash/error.hpp"
#include "ternhash/trit_logic.hpp"

namespace ternhash {

// Low bit of every 2-bit pair in a word.
inline constexpr uint64_t kEvenBits = 0x5555555555555555ULL;
// High bit of every 2-bit pair in a word.
inline constexpr uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAULL;

// True iff any pair in the word is the forbidden 11 pattern.
inline constexpr bool word_has_forbidden_pair(uint64_t w) noexcept {
    return ((w >> 1) & w & kEvenBits) != 0;
}

// Reference popcount, kept around so the word kernels can be checked against
// a branch-free software implementation independent of <bit>.
inline constexpr int popcount64_fallback(uint64_t x) noexcept {
    x = x - ((x >> 1) & 0x5555555555555555ULL);
    x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
    return static_cast<int>((x * 0x0101010101010101ULL) >> 56);
}

// Ternary code packed two bits per trit. Trit i occupies bits 2i (low) and
// 2i + 1 (high) of the little-endian word stream:
//
//   +1 -> 10   0 -> 00   -1 -> 01   11 -> forbidden
//
// With this layout the Lukasiewicz distance of two codes is
// popcount(xor) / 2 and all padding pairs are the 00 (Unknown) pattern.
class PackedTernaryCode {
public:
    static constexpr size_t kTritsPerWord = 32;

    PackedTernaryCode() = default;
    explicit PackedTernaryCode(size_t length)
        : length_(length), words_(words_for(length), 0) {}

    // Adopts raw words, rejecting wrong word counts, nonzero padding bits
    // (FormatError) and forbidden 11 pairs (CorruptCodeError).
    static PackedTernaryCode from_words(size_t length, std::vector<uint64_t> words);

    static constexpr size_t words_for(size_t length) noexcept {
        return (length + kTritsPerWord - 1) / kTritsPerWord;
    }

    size_t length() const noexcept { return length_; }
    size_t word_count() const noexcept { return words_.size(); }
    std::span<const uint64_t> words() const noexcept { return words_; }

    void set(size_t i, Trit t);
    Trit get(size_t i) const;

    bool operator==(const PackedTernaryCode&) const = default;

private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

// Binary code packed one bit per position, little-endian word stream.
class PackedBinaryCode {
public:
    static constexpr size_t kBitsPerWord = 64;

    PackedBinaryCode() = default;
    explicit PackedBinaryCode(size_t length)
        : length_(length), words_(words_for(length), 0) {}

    static PackedBinaryCode from_words(size_t length, std::vector<uint64_t> words);

    static constexpr size_t words_for(size_t length) noexcept {
        return (length + kBitsPerWord - 1) / kBitsPerWord;
    }

    size_t length() const noexcept { return length_; }
    size_t word_count() const noexcept { return words_.size(); }
    std::span<const uint64_t> words() const noexcept { return words_; }

    void set(size_t i, bool v);
    bool bit(size_t i) const;

    bool operator==(const PackedBinaryCode&) const = default;

private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

PackedTernaryCode pack_ternary(std::span<const Trit> trits);
std::vector<Trit> unpack_ternary(const PackedTernaryCode& code);

namespace kernels {

// Word-level distance kernels over raw packed storage. The spans must hold
// at least the words covering `length` positions; any further words are
// ignored, so rows of a larger matrix can be passed directly. A partial last
// word is masked, which also neutralizes padding.

int64_t thd_lukasiewicz_twice(std::span<const uint64_t> a, std::span<const uint64_t> b,
                              size_t length_trits);
int64_t thd_kleene_twice(std::span<const uint64_t> a, std::span<const uint64_t> b,
                         size_t length_trits);
uint64_t hamming(std::span<const uint64_t> a, std::span<const uint64_t> b, size_t length_bits);

}  // namespace kernels

TernaryDistance thd_lukasiewicz_packed(const PackedTernaryCode& a, const PackedTernaryCode& b);
TernaryDistance thd_kleene_packed(const PackedTernaryCode& a, const PackedTernaryCode& b);
TernaryDistance thd_packed(const PackedTernaryCode& a, const PackedTernaryCode& b, LogicKind logic);
uint64_t hamming_binary_packed(const PackedBinaryCode& a, const PackedBinaryCode& b);

}  // namespace ternhash
