// Copyright 2026 The cssft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _CSSFT_GF2_BIT_VECTOR_H
#define _CSSFT_GF2_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cssft {

/// A fixed-length word over GF(2), packed 64 bits per machine word.
///
/// Bit i lives in word i / 64 at position i % 64. Padding bits past size()
/// are always zero, which lets weight and comparison work word-at-a-time.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0' and '1' characters.
    static BitVector from_string(std::string_view text);
    /// Low `num_bits` bits of `value`, bit 0 first.
    static BitVector from_uint64(uint64_t value, size_t num_bits);
    static BitVector ones(size_t num_bits);
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(size_t index, bool value) {
        uint64_t mask = uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= mask;
        } else {
            words_[index >> 6] &= ~mask;
        }
    }
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    size_t weight() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() when zero.
    size_t first_one() const;
    /// Parity of the overlap with `other`.
    bool dot(const BitVector &other) const;
    size_t overlap(const BitVector &other) const;
    /// Value of the bits as an integer; requires size() <= 64.
    uint64_t to_uint64() const;

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    /// Lexicographic order of the '0'/'1' strings (bit 0 is most significant).
    bool lex_less(const BitVector &other) const;

    /// Copy with coordinate `index` removed.
    BitVector without(size_t index) const;

    std::string str() const;

    const uint64_t *data() const {
        return words_.data();
    }
    uint64_t *data() {
        return words_.data();
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cssft

#endif
