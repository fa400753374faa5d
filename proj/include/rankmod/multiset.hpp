#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmod {

using Rank = int;
using BigInt = boost::multiprecision::cpp_int;

/**
 * A multi-set of ranks {v_1^{m_1}, ..., v_l^{m_l}} with strictly increasing
 * ranks v_i. Levels are the dense indices 0..l-1 of the ranks; prefix(i) is
 * the number of elements at levels below i, so prefix(levels()) == size().
 *
 * Rank 0 is allowed and is the rank reserved for the information positions
 * of a redundancy word.
 */
class MultiSet {
public:
  struct Entry {
    Rank rank;
    std::size_t multiplicity;
    friend bool operator==(const Entry &, const Entry &) = default;
  };

  MultiSet() = default;
  explicit MultiSet(std::vector<Entry> entries);

  /// The multi-set of symbols occurring in \a seq.
  static MultiSet of_sequence(std::span<const Rank> seq);
  /// {first, first+1, ..., last}, each once.
  static MultiSet range(Rank first, Rank last);
  /// {0^k, k+1, ..., k+r}: the alphabet of redundancy words.
  static MultiSet redundancy(std::size_t k, std::size_t r);
  /// Parses `v^m` terms joined by `+`, e.g. `0^4+5+6`.
  static MultiSet parse(std::string_view text);

  std::string to_string() const;

  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t levels() const { return entries_.size(); }
  std::size_t size() const { return prefix_.back(); }
  Rank rank(std::size_t level) const { return entries_[level].rank; }
  std::size_t multiplicity(std::size_t level) const {
    return entries_[level].multiplicity;
  }
  std::size_t prefix(std::size_t level) const { return prefix_[level]; }

  std::optional<std::size_t> level_of(Rank r) const;
  bool contains(Rank r) const { return level_of(r).has_value(); }
  /// True when every multiplicity is 1.
  bool is_set() const;
  /// v_1 repeated m_1 times, then v_2, and so on.
  std::vector<Rank> sorted_sequence() const;

  friend bool operator==(const MultiSet &a, const MultiSet &b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<Entry> entries_;
  std::vector<std::size_t> prefix_{0};
};

/// Union of two multi-sets with no rank in common.
MultiSet disjoint_union(const MultiSet &a, const MultiSet &b);

/// n! / (m_1! ... m_l!), the number of multi-permutations of \a m.
BigInt space_size(const MultiSet &m);

} // namespace rankmod
