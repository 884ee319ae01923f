#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gmsrg {

/// Fixed-length bit vector over GF(2), packed into 64-bit words. Bits past
/// size() in the last word are always zero, so word-wise comparison and
/// popcount are exact.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size)
      : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  static BitVec ones(std::size_t size) {
    BitVec v(size);
    std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
    v.trim();
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept {
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](word_type w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  /// popcount(*this & other) without materializing the intersection.
  std::size_t and_count(const BitVec& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
  }

  std::optional<std::size_t> first_set() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return i * word_bits +
               static_cast<std::size_t>(std::countr_zero(words_[i]));
      }
    }
    return std::nullopt;
  }

  /// Indices of set bits in ascending order.
  std::vector<std::size_t> ones_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word_type w = words_[i];
      while (w != 0) {
        out.push_back(i * word_bits +
                      static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  BitVec& operator^=(const BitVec& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) noexcept { return a |= b; }

  /// Set difference: bits of *this not in other.
  BitVec without(const BitVec& other) const {
    BitVec out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i] &= ~other.words_[i];
    }
    return out;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

 private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty()) {
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace gmsrg
