// Copyright 2026 The graphprep Authors
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

#include "graphprep/bitvec.h"

#include <bit>
#include <stdexcept>

namespace graphprep {

namespace {

size_t num_words(size_t bits) {
    return (bits + 63) >> 6;
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(num_words(num_bits), 0) {
}

BitVec BitVec::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVec result(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index " + std::to_string(i) + " >= " + std::to_string(num_bits));
        }
        result.set(i);
    }
    return result;
}

BitVec BitVec::from_indices(size_t num_bits, std::initializer_list<size_t> indices) {
    return from_indices(num_bits, std::span<const size_t>(indices.begin(), indices.size()));
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

void BitVec::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::subtract(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= ~other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator~() const {
    BitVec result = *this;
    for (auto &w : result.words_) {
        w = ~w;
    }
    if (num_bits_ & 63) {
        result.words_.back() &= (uint64_t{1} << (num_bits_ & 63)) - 1;
    }
    return result;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    size_t n = std::min(words_.size(), other.words_.size());
    for (size_t k = 0; k < n; k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

bool BitVec::is_subset_of(const BitVec &other) const {
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t o = k < other.words_.size() ? other.words_[k] : 0;
        if (words_[k] & ~o) {
            return false;
        }
    }
    return true;
}

std::optional<size_t> BitVec::first() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return std::nullopt;
}

std::optional<size_t> BitVec::next(size_t after) const {
    size_t i = after + 1;
    if (i >= num_bits_) {
        return std::nullopt;
    }
    size_t k = i >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
        if (w) {
            return (k << 6) + std::countr_zero(w);
        }
        if (++k >= words_.size()) {
            return std::nullopt;
        }
        w = words_[k];
    }
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> result;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            result.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

void BitVec::push_back(bool value) {
    if ((num_bits_ & 63) == 0) {
        words_.push_back(0);
    }
    num_bits_++;
    set(num_bits_ - 1, value);
}

void BitVec::erase(size_t i) {
    if (i >= num_bits_) {
        throw std::out_of_range("BitVec::erase index out of range");
    }
    size_t k = i >> 6;
    uint64_t low_mask = (uint64_t{1} << (i & 63)) - 1;
    uint64_t w = words_[k];
    words_[k] = (w & low_mask) | ((w >> 1) & ~low_mask);
    for (size_t j = k + 1; j < words_.size(); j++) {
        words_[j - 1] |= (words_[j] & 1) << 63;
        words_[j] >>= 1;
    }
    num_bits_--;
    if (words_.size() > num_words(num_bits_)) {
        words_.pop_back();
    }
}

std::string BitVec::to_string() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

bool BitVec::operator<(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    return words_ < other.words_;
}

size_t BitVecHash::operator()(const BitVec &v) const {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
    for (auto w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

}  // namespace graphprep
