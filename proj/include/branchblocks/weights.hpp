#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchblocks/bigint.hpp"

namespace branchblocks {

// The four classical families. Rank is the number of weight entries:
// GL(k) weights have k entries, Sp(2n) and SO(2n+1) and SO(2n) have n.
enum class Family { GL, Sp, SOodd, SOeven };

inline const char* family_name(Family family) {
  switch (family) {
    case Family::GL: return "GL";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOeven: return "SOeven";
  }
  return "?";
}

// A family together with a rank, e.g. GL(4) or SO(7). GL(0) is allowed
// (the trivial group, needed as a branching target); the other families
// require rank >= 1.
struct GroupFamily {
  Family family;
  std::size_t rank;

  GroupFamily(Family f, std::size_t r) : family(f), rank(r) {
    if (f != Family::GL && r < 1)
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " requires rank >= 1");
  }

  // Classical notation: GL(k), Sp(2n), SO(2n+1), SO(2n).
  std::string name() const {
    switch (family) {
      case Family::GL: return "GL(" + std::to_string(rank) + ")";
      case Family::Sp: return "Sp(" + std::to_string(2 * rank) + ")";
      case Family::SOodd: return "SO(" + std::to_string(2 * rank + 1) + ")";
      case Family::SOeven: return "SO(" + std::to_string(2 * rank) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

// A dominant weight for one of the classical groups.
//
// Dominance means the entries are weakly decreasing and nonnegative, with
// one exception: the last entry of an SO(2n) weight may be negative as long
// as entry n-1 >= |entry n| (for SO(2), the single entry is unconstrained).
// The constructor rejects anything else and names the first violated
// inequality, e.g. "entry 1 < entry 2".
class DominantWeight {
 public:
  DominantWeight(GroupFamily group, std::vector<Int> entries)
      : group_(group), entries_(std::move(entries)) {
    if (entries_.size() != group_.rank)
      throw std::invalid_argument(
          group_.name() + " weight needs " + std::to_string(group_.rank) +
          " entries, got " + std::to_string(entries_.size()));
    check_dominance();
  }

  const GroupFamily& group() const { return group_; }
  Family family() const { return group_.family; }
  std::size_t rank() const { return group_.rank; }
  const std::vector<Int>& entries() const { return entries_; }

  // 0-based entry access.
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  // Sum of all entries (the "size" |lambda| of the weight).
  Int sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), Int(0));
  }

  std::string to_string() const { return tuple_to_string(entries_); }

  friend bool operator==(const DominantWeight&, const DominantWeight&) =
      default;

 private:
  void check_dominance() const {
    const std::size_t n = entries_.size();
    if (n == 0) return;
    const bool even_so = group_.family == Family::SOeven;
    // Weakly decreasing along consecutive entries; SO(2n) exempts the last
    // pair, which is covered by the |entry n| test below.
    const std::size_t plain_pairs = even_so ? n - 1 : n;
    for (std::size_t i = 0; i + 1 < plain_pairs; ++i) {
      if (entries_[i] < entries_[i + 1])
        throw std::invalid_argument(group_.name() + " weight " +
                                    tuple_to_string(entries_) + ": entry " +
                                    std::to_string(i + 1) + " < entry " +
                                    std::to_string(i + 2));
    }
    if (even_so) {
      if (n >= 2 && entries_[n - 2] < abs(entries_[n - 1]))
        throw std::invalid_argument(
            group_.name() + " weight " + tuple_to_string(entries_) +
            ": entry " + std::to_string(n - 1) + " < |entry " +
            std::to_string(n) + "|");
      // SO(2) has a single unconstrained integer entry.
    } else {
      if (entries_[n - 1] < 0)
        throw std::invalid_argument(group_.name() + " weight " +
                                    tuple_to_string(entries_) + ": entry " +
                                    std::to_string(n) + " < 0");
    }
  }

  GroupFamily group_;
  std::vector<Int> entries_;
};

inline DominantWeight gl_weight(std::vector<Int> entries) {
  const std::size_t rank = entries.size();
  return DominantWeight(GroupFamily(Family::GL, rank), std::move(entries));
}

inline DominantWeight sp_weight(std::vector<Int> entries) {
  const std::size_t rank = entries.size();
  return DominantWeight(GroupFamily(Family::Sp, rank), std::move(entries));
}

inline DominantWeight so_odd_weight(std::vector<Int> entries) {
  const std::size_t rank = entries.size();
  return DominantWeight(GroupFamily(Family::SOodd, rank), std::move(entries));
}

inline DominantWeight so_even_weight(std::vector<Int> entries) {
  const std::size_t rank = entries.size();
  return DominantWeight(GroupFamily(Family::SOeven, rank), std::move(entries));
}

// |w| = sum of entries; 0 for the empty weight.
inline Int weight_sum(const DominantWeight& w) { return w.sum(); }

}  // namespace branchblocks
