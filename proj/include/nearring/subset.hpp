#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace nearring {

// Subset of the element indices 0..n-1 of a finite nearring, stored as a
// packed bit-vector. Element 0 is the least significant bit. Subsets are
// ordered by their unsigned bit-vector value, which is the canonical order
// used everywhere enumeration results are sorted.
class Subset {
 public:
  Subset() : n_(0) {}

  explicit Subset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("Subset: negative universe");
  }

  static Subset full(int universe) {
    Subset s(universe);
    for (int e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  static Subset of(int universe, std::initializer_list<int> elems) {
    Subset s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  static Subset of(int universe, const std::vector<int>& elems) {
    Subset s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const {
    return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(int e) {
    check_element(e);
    words_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
  }

  void remove(int e) {
    check_element(e);
    words_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63));
  }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Subset& other) const {
    check_universe(other);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Subset operator&(const Subset& other) const {
    check_universe(other);
    Subset r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  Subset operator|(const Subset& other) const {
    check_universe(other);
    Subset r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  // Elements in exactly one of the two subsets.
  Subset operator^(const Subset& other) const {
    check_universe(other);
    Subset r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ other.words_[i];
    return r;
  }

  bool operator==(const Subset& other) const = default;

  // Canonical order: compare as unsigned bit-vector integers.
  std::strong_ordering operator<=>(const Subset& other) const {
    if (n_ != other.n_) return n_ <=> other.n_;
    for (size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
  }

  // Set bits in ascending element order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  // Smallest set element, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

 private:
  void check_element(int e) const {
    if (e < 0 || e >= n_) throw std::out_of_range("Subset: element out of range");
  }
  void check_universe(const Subset& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Subset: mismatched ambient orders");
  }

  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace nearring
