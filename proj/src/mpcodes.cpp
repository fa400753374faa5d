#include "rankmod/mpcodes.hpp"

#include <algorithm>

#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"

namespace rankmod {

namespace {

void require_within_budget(const MultiSet &m, std::size_t budget) {
  BigInt size = space_size(m);
  if (size > budget)
    throw BudgetExceeded("|S(" + m.to_string() + ")| = " + size.str() +
                         " exceeds the enumeration budget " + std::to_string(budget));
}

} // namespace

void for_each_in_space(const MultiSet &m,
                       const std::function<void(const MultiPermutation &)> &visit,
                       std::size_t budget) {
  require_within_budget(m, budget);
  std::vector<Rank> seq = m.sorted_sequence();
  do {
    visit(MultiPermutation(m, seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

std::vector<MultiPermutation> enumerate_space(const MultiSet &m, std::size_t budget) {
  std::vector<MultiPermutation> out;
  for_each_in_space(m, [&](const MultiPermutation &w) { out.push_back(w); }, budget);
  return out;
}

MultiPermCode::MultiPermCode(MultiSet alphabet, std::vector<MultiPermutation> codewords,
                             std::uint64_t design_distance, CodeRecipe recipe)
    : alphabet_(std::move(alphabet)), codewords_(std::move(codewords)),
      design_distance_(design_distance), recipe_(std::move(recipe)) {
  for (const auto &w : codewords_)
    if (!(w.alphabet() == alphabet_))
      throw InvalidArgument("codeword " + w.to_string() + " is not over " +
                            alphabet_.to_string());
  std::sort(codewords_.begin(), codewords_.end());
  if (std::adjacent_find(codewords_.begin(), codewords_.end()) != codewords_.end())
    throw InvalidArgument("code has a repeated codeword");
}

bool MultiPermCode::contains(const MultiPermutation &w) const {
  return w.alphabet() == alphabet_ &&
         std::binary_search(codewords_.begin(), codewords_.end(), w);
}

bool in_lifted_code(const MultiPermutation &w, const CongruenceCode &code) {
  return code.contains(psi(w).values());
}

MultiPermCode whole_space(const MultiSet &m, std::size_t budget) {
  return MultiPermCode(m, enumerate_space(m, budget), 1);
}

MultiPermCode lift_lee_code(const MultiSet &m, const CongruenceCode &code,
                            std::size_t budget) {
  std::vector<int> box = inversion_box(m);
  if (box.size() != code.check().length())
    throw InvalidArgument("congruence code has length " +
                          std::to_string(code.check().length()) + " but " + m.to_string() +
                          " embeds in dimension " + std::to_string(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i)
    if (code.upper()[i] < box[i])
      throw InvalidArgument("congruence code domain does not cover the inversion box");
  std::vector<MultiPermutation> words;
  for_each_in_space(m, [&](const MultiPermutation &w) {
    if (in_lifted_code(w, code)) words.push_back(w);
  }, budget);
  CodeRecipe recipe;
  recipe.check = code.check();
  recipe.residue = code.residue();
  return MultiPermCode(m, std::move(words), static_cast<std::uint64_t>(code.design_distance()),
                       std::move(recipe));
}

std::vector<std::uint64_t> coset_sizes(const MultiSet &m, const CheckSequence &check,
                                       std::size_t budget) {
  if (inversion_box(m).size() != check.length())
    throw InvalidArgument("check sequence length does not match " + m.to_string());
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(check.modulus()), 0);
  for_each_in_space(m, [&](const MultiPermutation &w) {
    ++sizes[static_cast<std::size_t>(check.weighted_sum(psi(w).values()))];
  }, budget);
  return sizes;
}

MultiPermCode best_coset_code(const MultiSet &m, const CheckSequence &check,
                              std::size_t budget) {
  auto sizes = coset_sizes(m, check, budget);
  auto best = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();
  return lift_lee_code(m, CongruenceCode(check, best, inversion_box(m)), budget);
}

std::pair<MultiPermCode, MultiPermCode> parity_split(const MultiPermCode &code,
                                                     const MultiPermutation &anchor) {
  if (!(anchor.alphabet() == code.alphabet()))
    throw InvalidArgument("anchor " + anchor.to_string() + " is not over " +
                          code.alphabet().to_string());
  std::vector<MultiPermutation> parts[2];
  for (const auto &w : code.codewords()) parts[kendall_distance(anchor, w) % 2].push_back(w);
  std::uint64_t d = code.design_distance();
  std::uint64_t split_distance = d % 2 == 1 ? d + 1 : d;
  auto make = [&](int parity) {
    CodeRecipe recipe = code.recipe();
    recipe.anchor = anchor.sequence();
    recipe.parity = parity;
    return MultiPermCode(code.alphabet(), std::move(parts[parity]), split_distance,
                         std::move(recipe));
  };
  MultiPermCode even = make(0);
  MultiPermCode odd = make(1);
  return {std::move(even), std::move(odd)};
}

MultiPermCode build_redundancy_code(const MultiSet &m, int t, const RedundancyOptions &opts) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  if (t == 0) return whole_space(m, opts.enumeration_budget);
  MultiPermCode base = [&] {
    if (t == 1) return whole_space(m, opts.enumeration_budget);
    std::size_t n = inversion_box(m).size();
    CheckSequence check = t == 2 ? golomb_welch_check(n)
                                 : find_check_sequence(n, t - 1, opts.check_search_budget);
    return best_coset_code(m, check, opts.enumeration_budget);
  }();
  auto [even, odd] = parity_split(base, MultiPermutation::sorted(m));
  return odd.size() > even.size() ? std::move(odd) : std::move(even);
}

MultiPermCode build_redundancy_code(std::size_t k, std::size_t r, int t,
                                    const RedundancyOptions &opts) {
  return build_redundancy_code(MultiSet::redundancy(k, r), t, opts);
}

std::uint64_t min_pairwise_distance(std::span<const MultiPermutation> words) {
  std::uint64_t best = kNoPairs;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, kendall_distance(words[i], words[j]));
  return best;
}

std::uint64_t certify_min_distance(const MultiPermCode &code, std::uint64_t pair_budget) {
  std::uint64_t n = code.size();
  std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (pairs > pair_budget)
    throw BudgetExceeded(std::to_string(pairs) + " codeword pairs exceed the budget " +
                         std::to_string(pair_budget));
  std::uint64_t d = min_pairwise_distance(code.codewords());
  if (d != kNoPairs && d < code.design_distance())
    throw CertificationFailure("minimum distance " + std::to_string(d) +
                               " is below the design distance " +
                               std::to_string(code.design_distance()));
  return d;
}

} // namespace rankmod
