#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oml {

/// Fixed-universe bitset used for element subsets, down-sets and sweep
/// kernels. All binary operations require operands drawn from the same
/// universe size.
class Bitset {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset single(std::size_t universe, std::size_t i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  /// Removes every member of `o` from this set.
  Bitset& subtract(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  std::size_t find_first() const { return scan_from(0); }

  std::size_t find_next(std::size_t prev) const { return scan_from(prev + 1); }

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ size_);
  }

private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t scan_from(std::size_t start) const {
    if (start >= size_) return npos;
    std::size_t w = start >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (cur) {
        std::size_t bit = (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
        return bit < size_ ? bit : npos;
      }
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace oml
