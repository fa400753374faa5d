#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankmod/lee.hpp"
#include "rankmod/multipermutation.hpp"

namespace rankmod {

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;
/// Minimum distance reported for a code with fewer than two codewords.
inline constexpr std::uint64_t kNoPairs =
    std::numeric_limits<std::uint64_t>::max();

/// Visits S(m) in lexicographic order. Throws BudgetExceeded when
/// |S(m)| > budget.
void for_each_in_space(const MultiSet &m,
                       const std::function<void(const MultiPermutation &)> &visit,
                       std::size_t budget = kDefaultEnumerationBudget);

/// All of S(m) in lexicographic order.
std::vector<MultiPermutation>
enumerate_space(const MultiSet &m,
                std::size_t budget = kDefaultEnumerationBudget);

/// How a code was obtained, enough to rebuild it from its alphabet.
struct CodeRecipe {
  /// Congruence filter on the inversion vector, if any.
  std::optional<CheckSequence> check;
  std::int64_t residue = 0;
  /// Parity filter: keep words whose distance to anchor has this parity.
  std::optional<std::vector<Rank>> anchor;
  std::optional<int> parity;

  friend bool operator==(const CodeRecipe &, const CodeRecipe &) = default;
};

/// An explicit code inside S(alphabet); codewords kept in lexicographic
/// order.
class MultiPermCode {
public:
  MultiPermCode(MultiSet alphabet, std::vector<MultiPermutation> codewords,
                std::uint64_t design_distance, CodeRecipe recipe = {});

  const MultiSet &alphabet() const { return alphabet_; }
  const std::vector<MultiPermutation> &codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  std::uint64_t design_distance() const { return design_distance_; }
  const CodeRecipe &recipe() const { return recipe_; }

  bool contains(const MultiPermutation &w) const;

private:
  MultiSet alphabet_;
  std::vector<MultiPermutation> codewords_;
  std::uint64_t design_distance_;
  CodeRecipe recipe_;
};

/// Implicit membership: psi(w) lies in \a code.
bool in_lifted_code(const MultiPermutation &w, const CongruenceCode &code);

/// All of S(m), design distance 1.
MultiPermCode whole_space(const MultiSet &m,
                          std::size_t budget = kDefaultEnumerationBudget);

/// { w in S(m) : psi(w) in code }, with the code's design distance.
MultiPermCode lift_lee_code(const MultiSet &m, const CongruenceCode &code,
                            std::size_t budget = kDefaultEnumerationBudget);

/// Sizes of the M cosets of the lifted congruence code, indexed by residue.
std::vector<std::uint64_t>
coset_sizes(const MultiSet &m, const CheckSequence &check,
            std::size_t budget = kDefaultEnumerationBudget);

/// Largest lifted coset; ties go to the smallest residue.
MultiPermCode best_coset_code(const MultiSet &m, const CheckSequence &check,
                              std::size_t budget = kDefaultEnumerationBudget);

/// (even, odd) parts by parity of the distance to \a anchor. Each part has
/// only even pairwise distances, so an odd design distance d becomes d + 1.
std::pair<MultiPermCode, MultiPermCode>
parity_split(const MultiPermCode &code, const MultiPermutation &anchor);

struct RedundancyOptions {
  std::int64_t check_search_budget = 4096;
  std::size_t enumeration_budget = kDefaultEnumerationBudget;
};

/**
 * A code of minimum distance >= 2t inside S(m), where the lowest rank of m
 * marks information positions. t = 1 splits the whole space by parity; t >= 2
 * splits the best coset of a lifted (t-1)-error-correcting congruence code.
 * The anchor is the sorted word and the larger part is kept (the even part
 * on a tie). t = 0 returns the whole space.
 */
MultiPermCode build_redundancy_code(const MultiSet &m, int t,
                                    const RedundancyOptions &opts = {});
/// Same over {0^k, k+1, ..., k+r}.
MultiPermCode build_redundancy_code(std::size_t k, std::size_t r, int t,
                                    const RedundancyOptions &opts = {});

/// Least pairwise Kendall distance of \a words, or kNoPairs.
std::uint64_t min_pairwise_distance(std::span<const MultiPermutation> words);

/**
 * Exact minimum pairwise distance. Throws BudgetExceeded when the number of
 * pairs exceeds \a pair_budget and CertificationFailure when it is below the
 * design distance.
 */
std::uint64_t certify_min_distance(const MultiPermCode &code,
                                   std::uint64_t pair_budget = 50'000'000);

} // namespace rankmod
