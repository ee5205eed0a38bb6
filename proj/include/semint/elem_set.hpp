#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace semint {

/// Subset of a fixed finite carrier {0, ..., n-1}.
/// Equality is extensional: two sets are equal iff they have the same
/// universe size and the same members, regardless of insertion order.
class ElemSet {
 public:
  explicit ElemSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::out_of_range("ElemSet: negative universe");
  }

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int i) const {
    check(i);
    return (bits_[i / 64] >> (i % 64)) & 1u;
  }

  void insert(int i) {
    check(i);
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(int i) {
    check(i);
    bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  int size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const ElemSet& other) const {
    require_same_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~other.bits_[k]) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < universe_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

 private:
  void check(int i) const {
    if (i < 0 || i >= universe_) throw std::out_of_range("ElemSet: index out of range");
  }
  void require_same_universe(const ElemSet& other) const {
    if (universe_ != other.universe_) throw std::out_of_range("ElemSet: universe mismatch");
  }

  int universe_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace semint
