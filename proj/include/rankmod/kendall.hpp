#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankmod/multipermutation.hpp"

namespace rankmod {

/// Number of pairs i < j with a[i] > a[j], by merge sort in O(n log n).
std::uint64_t count_inversions(std::span<const std::size_t> a);
/// Same count by direct pair enumeration; kept for cross-checking.
std::uint64_t count_inversions_quadratic(std::span<const std::size_t> a);

/**
 * Kendall tau distance: the least number of swaps of two distinct adjacent
 * elements turning \a a into \a b. Both must share an alphabet.
 *
 * Occurrences of equal ranks are labelled in order of appearance and the
 * inversions of the relabelled sequences are counted.
 */
std::uint64_t kendall_distance(const MultiPermutation &a,
                               const MultiPermutation &b);

/// Swaps positions \a pos and \a pos + 1 (0-based). The two entries must be
/// distinct; swapping equal symbols is not an adjacent transposition.
MultiPermutation apply_adjacent_transposition(const MultiPermutation &s,
                                              std::size_t pos);

/// Positions p (0-based) where s[p] != s[p+1].
std::vector<std::size_t> legal_transpositions(const MultiPermutation &s);

/// Substitutes theta_i, in order, into the positions of the i-th rank.
Permutation t_theta(const MultiPermutation &s, const ThetaVector &theta);

/**
 * sigma * rho: the k zeros of rho over {0^k, k+1..k+r} are replaced left to
 * right by sigma(1..k), where sigma is a permutation of [k].
 */
Permutation star(const Permutation &sigma, const MultiPermutation &rho);

/// alpha restricted to the entries in [k].
Permutation project_down(const Permutation &alpha, std::size_t k);

/// alpha with every entry in [k] replaced by 0.
MultiPermutation project_zero(const Permutation &alpha, std::size_t k);

// Multi-set versions used by the general systematic codes. The information
// alphabet plays the role of [k]; rank 0 marks information positions.

/// Replaces the zeros of \a rho, in order, by the entries of \a info.
MultiPermutation substitute_zeros(const MultiPermutation &info,
                                  const MultiPermutation &rho);
/// The subsequence of \a word whose symbols belong to \a info.
MultiPermutation restrict_to(const MultiPermutation &word,
                             const MultiSet &info);
/// \a word with every symbol of \a info replaced by 0.
MultiPermutation mask_to_zero(const MultiPermutation &word,
                              const MultiSet &info);

} // namespace rankmod
