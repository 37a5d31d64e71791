#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace afdt {

/// Fixed-width bitset over the risk leaves of one circuit.
class LeafSet {
 public:
  LeafSet() = default;
  explicit LeafSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool subset_of(const LeafSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  LeafSet& operator|=(const LeafSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend LeafSet operator|(LeafSet a, const LeafSet& b) { return a |= b; }

  bool operator==(const LeafSet&) const = default;
  auto operator<=>(const LeafSet&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// An antichain of leaf sets. The empty family is constant false; the family
/// holding only the empty set is constant true.
using Family = std::vector<LeafSet>;

/// Removes duplicates and every set that strictly contains another member.
void minimize(Family& family);

}  // namespace afdt
