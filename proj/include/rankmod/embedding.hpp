#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankmod/multipermutation.hpp"

namespace rankmod {

/**
 * Image of a multi-permutation under the inversion-vector embedding.
 *
 * One block per level above the lowest: the block of level i holds
 * multiplicity(i) entries, each in [0, prefix(i)], and is non-increasing.
 * Entries are stored flat in block order, so the first coordinate belongs to
 * the second-lowest rank. The flat length is size() - multiplicity(0).
 */
class InversionVector {
public:
  /// Throws InvalidArgument if \a values is not in the image box of \a m or a
  /// block is not monotone.
  InversionVector(const MultiSet &m, std::vector<int> values);

  static InversionVector zeros(const MultiSet &m);
  /// Blocks separated by `;`, entries by `,`, e.g. `2,1;2,2;3,0`.
  static InversionVector parse(std::string_view text, const MultiSet &m);

  std::span<const int> values() const { return values_; }
  std::size_t block_count() const { return block_start_.size() - 1; }
  std::span<const int> block(std::size_t b) const;
  /// Upper bound shared by every entry of block \a b.
  int block_bound(std::size_t b) const { return bounds_[b]; }

  std::string to_string() const;

  friend bool operator==(const InversionVector &,
                         const InversionVector &) = default;

private:
  std::vector<int> values_;
  std::vector<std::size_t> block_start_;
  std::vector<int> bounds_;
};

/// Per-coordinate upper bounds of the image box of \a m (lower bounds are 0).
std::vector<int> inversion_box(const MultiSet &m);

/// Number of monotone-blocked vectors in the image box; equals space_size(m).
BigInt inversion_image_size(const MultiSet &m);

/// x_{i,s} = number of smaller ranks to the right of the s-th occurrence of
/// the rank at level i.
InversionVector psi(const MultiPermutation &s);

/// Inverse of psi, built rank by rank from the lowest upward.
MultiPermutation psi_inverse(const InversionVector &x, const MultiSet &m);

/// L1 distance. Throws InvalidArgument on a length mismatch.
std::int64_t manhattan_distance(std::span<const int> x, std::span<const int> y);

/// Lee distance over Z_q. Entries must lie in [0, q).
std::int64_t lee_distance(std::span<const int> x, std::span<const int> y,
                          int q);

} // namespace rankmod
