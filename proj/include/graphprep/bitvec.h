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

#ifndef GRAPHPREP_BITVEC_H
#define GRAPHPREP_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphprep {

/// Fixed-length vector of bits packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// equality, hashing and popcounts need no masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    static BitVec from_indices(size_t num_bits, std::span<const size_t> indices);
    static BitVec from_indices(size_t num_bits, std::initializer_list<size_t> indices);
    /// Parses a string of '0'/'1' characters, bit 0 first.
    static BitVec from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    bool empty() const {
        return num_bits_ == 0;
    }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value = true) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void reset(size_t i) {
        set(i, false);
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear();

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    /// Clears every bit that is set in `other`.
    BitVec &subtract(const BitVec &other);
    BitVec operator~() const;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of |this AND other|.
    bool dot(const BitVec &other) const;
    /// True iff every set bit of this is also set in `other`.
    bool is_subset_of(const BitVec &other) const;

    std::optional<size_t> first() const;
    std::optional<size_t> next(size_t after) const;
    std::vector<size_t> ones() const;

    /// Appends one bit at the end.
    void push_back(bool value);
    /// Removes bit `i`, shifting higher bits down by one.
    void erase(size_t i);

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    /// '0'/'1' characters, bit 0 first.
    std::string to_string() const;

    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

inline BitVec operator^(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
}
inline BitVec operator&(BitVec a, const BitVec &b) {
    a &= b;
    return a;
}
inline BitVec operator|(BitVec a, const BitVec &b) {
    a |= b;
    return a;
}

struct BitVecHash {
    size_t operator()(const BitVec &v) const;
};

}  // namespace graphprep

#endif
