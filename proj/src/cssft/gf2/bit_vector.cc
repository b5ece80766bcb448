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

#include "cssft/gf2/bit_vector.h"

#include "cssft/error.h"

namespace cssft {

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector result(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c == '1') {
            result.set(i, true);
        } else if (c != '0') {
            fail(ErrorCode::Parse, std::string("Bad bit character '") + c + "'.");
        }
    }
    return result;
}

BitVector BitVector::from_uint64(uint64_t value, size_t num_bits) {
    if (num_bits > 64) {
        fail(ErrorCode::InvalidArgument, "from_uint64 needs num_bits <= 64.");
    }
    BitVector result(num_bits);
    if (num_bits > 0) {
        result.words_[0] = num_bits == 64 ? value : (value & ((uint64_t{1} << num_bits) - 1));
    }
    return result;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector result(num_bits);
    for (size_t i = 0; i < num_bits; i++) {
        result.set(i, true);
    }
    return result;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector result(num_bits);
    result.set(index, true);
    return result;
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

bool BitVector::dot(const BitVector &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::overlap(const BitVector &other) const {
    size_t total = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        total += std::popcount(words_[k] & other.words_[k]);
    }
    return total;
}

uint64_t BitVector::to_uint64() const {
    if (num_bits_ > 64) {
        fail(ErrorCode::InvalidArgument, "to_uint64 needs size() <= 64.");
    }
    return words_.empty() ? 0 : words_[0];
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        fail(ErrorCode::InvalidArgument, "Bit vector length mismatch.");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector BitVector::operator&(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        fail(ErrorCode::InvalidArgument, "Bit vector length mismatch.");
    }
    BitVector result = *this;
    for (size_t k = 0; k < words_.size(); k++) {
        result.words_[k] &= other.words_[k];
    }
    return result;
}

bool BitVector::lex_less(const BitVector &other) const {
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            // The lowest differing bit is the first differing character.
            return !((words_[k] >> std::countr_zero(diff)) & 1);
        }
    }
    return false;
}

BitVector BitVector::without(size_t index) const {
    BitVector result(num_bits_ - 1);
    size_t j = 0;
    for (size_t i = 0; i < num_bits_; i++) {
        if (i != index) {
            result.set(j++, get(i));
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace cssft
