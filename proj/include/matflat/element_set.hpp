// Copyright 2026 The Authors.
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

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matflat {

/// Upper bound on ground-set size. PG(3,5) has 156 points; 256 keeps a set in
/// exactly one AVX2 register.
inline constexpr int kMaxElements = 256;
inline constexpr int kSetWords = kMaxElements / 64;

/// Fixed-width subset of {0, ..., kMaxElements-1}.
class alignas(32) ElementSet {
 public:
  using Words = std::array<std::uint64_t, kSetWords>;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  /// {0, ..., n-1}.
  static ElementSet prefix(int n) {
    ElementSet s;
    for (int w = 0; w < kSetWords; ++w) {
      int lo = w * 64;
      if (n >= lo + 64)
        s.words_[w] = ~std::uint64_t{0};
      else if (n > lo)
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
    }
    return s;
  }

  static ElementSet from_vector(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }

  void insert(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1; }

  ElementSet with(int e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc |= w;
    return acc == 0;
  }

  /// Smallest element, or -1 when empty.
  int first() const {
    for (int w = 0; w < kSetWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Smallest element strictly greater than e, or -1.
  int next(int e) const {
    ++e;
    if (e >= kMaxElements) return -1;
    int w = e >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (e & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w == kSetWords) return -1;
      cur = words_[w];
    }
  }

  bool is_subset_of(const ElementSet& other) const {
    std::uint64_t acc = 0;
    for (int w = 0; w < kSetWords; ++w) acc |= words_[w] & ~other.words_[w];
    return acc == 0;
  }

  bool intersects(const ElementSet& other) const {
    std::uint64_t acc = 0;
    for (int w = 0; w < kSetWords; ++w) acc |= words_[w] & other.words_[w];
    return acc != 0;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (int w = 0; w < kSetWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (int w = 0; w < kSetWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (int w = 0; w < kSetWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: the set owning the smallest element of the symmetric
  /// difference comes first. On sets of equal size this is lexicographic
  /// order of the sorted element lists.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    for (int w = 0; w < kSetWords; ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[w] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  const Words& words() const { return words_; }
  Words& words() { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  std::vector<int> to_vector() const;
  /// "{0, 3, 5}"
  std::string to_string() const;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const ElementSet* s, int e) : set_(s), e_(e) {}
    int operator*() const { return e_; }
    iterator& operator++() {
      e_ = set_->next(e_);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return e_ == o.e_; }

   private:
    const ElementSet* set_ = nullptr;
    int e_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  Words words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace matflat
