#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankmod/multiset.hpp"

namespace rankmod {

/// Parses comma-separated ranks, e.g. `2,6,4,1,5,7,3`.
std::vector<Rank> parse_sequence(std::string_view text);
std::string format_sequence(std::span<const Rank> seq);

/**
 * An ordering of all elements of a MultiSet. Values are immutable; every
 * operation returns a new object.
 */
class MultiPermutation {
public:
  /// Throws InvalidArgument unless \a seq uses every rank of \a alphabet
  /// exactly as often as its multiplicity.
  MultiPermutation(MultiSet alphabet, std::vector<Rank> seq);

  static MultiPermutation from_sequence(std::vector<Rank> seq);
  /// The lexicographically smallest element of S(alphabet).
  static MultiPermutation sorted(const MultiSet &alphabet);
  /// Parses the text form; the alphabet is inferred unless given.
  static MultiPermutation parse(std::string_view text);
  static MultiPermutation parse(std::string_view text, const MultiSet &alphabet);

  const MultiSet &alphabet() const { return alphabet_; }
  const std::vector<Rank> &sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  Rank operator[](std::size_t pos) const { return seq_[pos]; }

  /// Dense level index (0-based) of each position.
  std::vector<std::size_t> levels() const;
  /// Canonical labels: the r-th occurrence (0-based) of level i gets
  /// prefix(i) + r. The result is a permutation of 0..n-1.
  std::vector<std::size_t> canonical_labels() const;

  std::string to_string() const { return format_sequence(seq_); }

  friend bool operator==(const MultiPermutation &a,
                         const MultiPermutation &b) {
    return a.seq_ == b.seq_ && a.alphabet_ == b.alphabet_;
  }
  /// Lexicographic on the sequence.
  friend std::strong_ordering operator<=>(const MultiPermutation &a,
                                          const MultiPermutation &b) {
    return a.seq_ <=> b.seq_;
  }

protected:
  struct Unchecked {};
  MultiPermutation(Unchecked, MultiSet alphabet, std::vector<Rank> seq)
      : alphabet_(std::move(alphabet)), seq_(std::move(seq)) {}

private:
  MultiSet alphabet_;
  std::vector<Rank> seq_;
};

/// A multi-permutation whose alphabet is a set, e.g. an element of S_n or of
/// S([a,b]).
class Permutation : public MultiPermutation {
public:
  /// Throws InvalidArgument when \a seq has a repeated entry.
  explicit Permutation(std::vector<Rank> seq);
  /// Checked narrowing from a multi-permutation over a set.
  explicit Permutation(const MultiPermutation &mp);

  /// [1, 2, ..., n]
  static Permutation identity(std::size_t n);
  /// [first, first+1, ..., last]
  static Permutation identity(Rank first, Rank last);
  static Permutation parse(std::string_view text);

  /// Inverse as positions: inverse()[v - min] is the position of v.
  std::vector<std::size_t> positions() const;
};

/// One permutation per level of a MultiSet; the i-th acts on the interval
/// [prefix(i)+1, prefix(i+1)].
struct ThetaVector {
  std::vector<Permutation> thetas;

  static ThetaVector identity(const MultiSet &m);
  /// Throws InvalidArgument unless the supports match the intervals of \a m.
  void check_compatible(const MultiSet &m) const;
};

} // namespace rankmod
