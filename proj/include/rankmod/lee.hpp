#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rankmod {

/// Calls \a visit(e, weight) for every integer vector e of the given length
/// with Manhattan weight at most \a radius. The zero vector comes first.
void for_each_error_pattern(
    std::size_t length, int radius,
    const std::function<void(std::span<const int>, int)> &visit);

/// Number of integer vectors of the given length and weight at most radius.
std::uint64_t error_pattern_count(std::size_t length, int radius);

/// True when the sums sum(e_i * h_i), over all e of weight <= radius, are
/// pairwise distinct modulo \a modulus.
bool has_distinct_sums(std::span<const std::int64_t> h, std::int64_t modulus,
                       int radius);

/**
 * Check integers h_1..h_N with modulus M such that every error pattern of
 * weight <= radius has its own sum modulo M. A congruence code built on it
 * has minimum Manhattan distance at least 2 * radius + 1.
 *
 * Radius 0 is the trivial sequence (modulus 1, no correction).
 */
class CheckSequence {
public:
  /// Validates bounds (0 < h_i < M for radius >= 1) and the distinct-sums
  /// property by full enumeration.
  CheckSequence(std::vector<std::int64_t> h, std::int64_t modulus, int radius);

  static CheckSequence trivial(std::size_t length);

  const std::vector<std::int64_t> &h() const { return h_; }
  std::size_t length() const { return h_.size(); }
  std::int64_t modulus() const { return modulus_; }
  int radius() const { return radius_; }

  /// sum(x_i * h_i) reduced into [0, M).
  std::int64_t weighted_sum(std::span<const int> x) const;

  friend bool operator==(const CheckSequence &,
                         const CheckSequence &) = default;

private:
  std::vector<std::int64_t> h_;
  std::int64_t modulus_;
  int radius_;
};

/// h_i = i with modulus 2N + 1: the perfect single-error code in Z_{2N+1}^N.
CheckSequence golomb_welch_check(std::size_t n);

bool is_prime_power(std::int64_t q);

/// (q^{t+1} - 1)/(q - 1) scaled by t(t+1) for odd t or t(t+2) for even t.
/// Throws InvalidArgument unless q is a prime power and t >= 1.
std::int64_t mt_bound(std::int64_t q, int t);

/**
 * Smallest modulus M <= max_modulus admitting N check integers with the
 * distinct-sums property at radius t, found by trying M upward from the
 * counting bound and backtracking over increasing h_i <= (M-1)/2.
 * Throws Infeasible if none exists within the budget.
 */
CheckSequence find_check_sequence(std::size_t n, int t,
                                  std::int64_t max_modulus);

/// { x in box : sum(x_i * h_i) == residue (mod M) } over the integer box
/// 0 <= x_i <= upper[i].
class CongruenceCode {
public:
  CongruenceCode(CheckSequence check, std::int64_t residue,
                 std::vector<int> upper);

  const CheckSequence &check() const { return check_; }
  std::int64_t residue() const { return residue_; }
  const std::vector<int> &upper() const { return upper_; }
  int design_distance() const { return 2 * check_.radius() + 1; }

  bool in_domain(std::span<const int> x) const;
  bool contains(std::span<const int> x) const;

private:
  CheckSequence check_;
  std::int64_t residue_;
  std::vector<int> upper_;
};

/// (sum(y_i * h_i) - residue) mod M.
std::int64_t syndrome(std::span<const int> y, const CongruenceCode &code);

/// Syndrome -> unique error pattern of weight <= radius, for one check
/// sequence. Built once; read-only afterwards.
class SyndromeTable {
public:
  explicit SyndromeTable(const CheckSequence &check);

  const CheckSequence &check() const { return check_; }
  /// The pattern with this syndrome, or nullptr.
  const std::vector<int> *lookup(std::int64_t syndrome) const;

private:
  CheckSequence check_;
  std::vector<std::int32_t> slot_;
  std::vector<std::vector<int>> patterns_;
};

/**
 * Error vector e with y - e in the code and weight(e) <= max_weight (the
 * check radius by default), or nullopt. Throws InvalidArgument when the
 * table belongs to a different check sequence or lengths disagree.
 */
std::optional<std::vector<int>>
syndrome_decode(std::span<const int> y, const CongruenceCode &code,
                const SyndromeTable &table,
                std::optional<int> max_weight = std::nullopt);

} // namespace rankmod
