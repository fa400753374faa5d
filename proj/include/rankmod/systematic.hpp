#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankmod/lee.hpp"
#include "rankmod/mpcodes.hpp"
#include "rankmod/multipermutation.hpp"

namespace rankmod {

/// Result of a successful decode.
struct Decoded {
  MultiPermutation info;
  MultiPermutation codeword;
  /// Kendall distance between the received word and the codeword.
  std::uint64_t distance;
};

/// Result of the exhaustive nearest-codeword search.
struct Nearest {
  std::uint64_t distance;
  /// Every codeword at that distance, in the order of their information parts.
  std::vector<MultiPermutation> codewords;
  std::vector<MultiPermutation> infos;
};

struct BuildOptions {
  /// Largest modulus tried when searching check sequences for t >= 2.
  std::int64_t check_search_budget = 4096;
  RedundancyOptions redundancy;
};

/**
 * A systematic t-error-correcting code.
 *
 * Information words are the multi-permutations of an information alphabet K
 * of k symbols; r redundancy symbols come from an alphabet R disjoint from K.
 * Each information word s is sent as rho_j with its zeros replaced by s,
 * where j is the checksum of psi(s). The redundancy words rho_0..rho_{M-1}
 * are distinct words over {0^k} + R at pairwise distance >= 2t, and M is the
 * modulus of the check sequence.
 *
 * When K = {1..k} and R = {k+1..k+r} this is the permutation code of S_{k+r}
 * with k! codewords.
 */
class SystematicCode {
public:
  /// Structural checks only (alphabets, lengths, counts). Distinctness and
  /// distances of the redundancy words are checked by audit_code().
  SystematicCode(MultiSet info, MultiSet redundancy, int t, CheckSequence check,
                 std::vector<MultiPermutation> rhos, CodeRecipe recipe = {});

  std::size_t k() const { return info_.size(); }
  std::size_t r() const { return redundancy_.size(); }
  int t() const { return t_; }
  const MultiSet &info_alphabet() const { return info_; }
  const MultiSet &redundancy_alphabet() const { return redundancy_; }
  /// {0^k} + R
  const MultiSet &rho_alphabet() const { return rho_alphabet_; }
  /// K + R
  const MultiSet &codeword_alphabet() const { return word_alphabet_; }
  const CheckSequence &check() const { return check_; }
  const std::vector<MultiPermutation> &rhos() const { return rhos_; }
  const CodeRecipe &recipe() const { return recipe_; }
  bool is_permutation_code() const;

  /// Number of codewords, |S(K)|.
  BigInt size() const;

  std::int64_t checksum(const MultiPermutation &info) const;
  MultiPermutation encode(const MultiPermutation &info) const;
  /// encode(unrank(data)).
  MultiPermutation encode_data(const BigInt &data) const;

  /**
   * The unique codeword within distance t of \a received, or nullopt.
   *
   * Candidates rho_j within t of the masked redundancy part are tried in
   * index order; for each, the information part is syndrome-decoded in coset
   * j with the remaining budget and the rebuilt codeword is accepted only if
   * it is within t of \a received.
   */
  std::optional<Decoded> decode(const MultiPermutation &received) const;

  /// Exhaustive nearest-codeword search over all |S(K)| codewords.
  Nearest decode_bruteforce(const MultiPermutation &received,
                            std::size_t budget = kDefaultEnumerationBudget) const;

private:
  void check_info(const MultiPermutation &info) const;

  MultiSet info_;
  MultiSet redundancy_;
  MultiSet rho_alphabet_;
  MultiSet word_alphabet_;
  int t_;
  CheckSequence check_;
  std::vector<MultiPermutation> rhos_;
  CodeRecipe recipe_;
  std::vector<int> info_box_;
  SyndromeTable table_;
};

/// The multi-set form of the construction uses the same type.
using GeneralSystematicCode = SystematicCode;

/// Check sequence of length \a n for radius t used by the builders:
/// golomb_welch_check for t = 1, find_check_sequence otherwise.
CheckSequence systematic_check(std::size_t n, int t,
                               std::int64_t search_budget);

/// (k + r, k) systematic t-error-correcting permutation code. Throws
/// Infeasible when the redundancy code has fewer words than the modulus.
SystematicCode build_systematic(std::size_t k, std::size_t r, int t,
                                const BuildOptions &opts = {});

/// Systematic code for information multi-set \a info and redundancy
/// multi-set \a redundancy. Throws InvalidArgument when they overlap or
/// either contains 0, Infeasible as build_systematic.
SystematicCode build_general(const MultiSet &info, const MultiSet &redundancy,
                             int t, const BuildOptions &opts = {});

/// Outcome of the redundancy search.
struct Advice {
  std::size_t k;
  int t;
  std::size_t r;
  std::int64_t modulus;
  std::uint64_t redundancy_code_size;
  /// Every r tried, with the redundancy code size it reached.
  std::vector<std::pair<std::size_t, std::uint64_t>> attempts;
  // Asymptotic regime of the existence theorem, evaluated and reported only.
  double epsilon;           // log t / log k
  double mu;                // r / t
  double mu_threshold;      // 1 + epsilon, or 1 + 1/epsilon when epsilon > 1
  bool k_minus_2_prime_power;
  bool r_minus_1_prime_power;
  bool in_asymptotic_regime; // mu above threshold and both prime-power flags
};

/// Smallest r >= t+1 (r = 0 for t = 0) for which build_systematic succeeds.
/// Throws BudgetExceeded if no r <= max_r works.
Advice advise_parameters(std::size_t k, int t, std::size_t max_r = 12,
                         const BuildOptions &opts = {});

} // namespace rankmod
