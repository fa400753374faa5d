#include "rankmod/systematic.hpp"

#include <cmath>

#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/rank.hpp"

namespace rankmod {

namespace {

MultiSet zeros_plus(std::size_t k, const MultiSet &redundancy) {
  if (k == 0) return redundancy;
  return disjoint_union(MultiSet({{0, k}}), redundancy);
}

void require_no_zero(const MultiSet &m, const char *what) {
  if (m.contains(0))
    throw InvalidArgument(std::string(what) + " alphabet must not contain the reserved rank 0");
}

} // namespace

SystematicCode::SystematicCode(MultiSet info, MultiSet redundancy, int t, CheckSequence check,
                               std::vector<MultiPermutation> rhos, CodeRecipe recipe)
    : info_(std::move(info)), redundancy_(std::move(redundancy)),
      rho_alphabet_(zeros_plus(info_.size(), redundancy_)),
      word_alphabet_(disjoint_union(info_, redundancy_)), t_(t), check_(std::move(check)),
      rhos_(std::move(rhos)), recipe_(std::move(recipe)), info_box_(inversion_box(info_)),
      table_(check_) {
  require_no_zero(info_, "information");
  require_no_zero(redundancy_, "redundancy");
  if (info_.size() == 0) throw InvalidArgument("information alphabet is empty");
  if (t_ < 0) throw InvalidArgument("t must be non-negative");
  if (check_.length() != info_box_.size())
    throw InvalidArgument("check sequence has length " + std::to_string(check_.length()) +
                          ", expected " + std::to_string(info_box_.size()));
  if (check_.radius() != t_)
    throw InvalidArgument("check radius " + std::to_string(check_.radius()) +
                          " differs from t = " + std::to_string(t_));
  if (rhos_.size() != static_cast<std::size_t>(check_.modulus()))
    throw InvalidArgument("need exactly " + std::to_string(check_.modulus()) +
                          " redundancy words, got " + std::to_string(rhos_.size()));
  for (const auto &rho : rhos_)
    if (!(rho.alphabet() == rho_alphabet_))
      throw InvalidArgument("redundancy word " + rho.to_string() + " is not over " +
                            rho_alphabet_.to_string());
}

bool SystematicCode::is_permutation_code() const {
  auto k = static_cast<Rank>(this->k());
  return info_ == MultiSet::range(1, k) &&
         redundancy_ == MultiSet::range(k + 1, k + static_cast<Rank>(r()));
}

BigInt SystematicCode::size() const { return space_size(info_); }

void SystematicCode::check_info(const MultiPermutation &info) const {
  if (!(info.alphabet() == info_))
    throw InvalidArgument("information word " + info.to_string() + " is not over " +
                          info_.to_string());
}

std::int64_t SystematicCode::checksum(const MultiPermutation &info) const {
  check_info(info);
  return check_.weighted_sum(psi(info).values());
}

MultiPermutation SystematicCode::encode(const MultiPermutation &info) const {
  return substitute_zeros(info, rhos_[static_cast<std::size_t>(checksum(info))]);
}

MultiPermutation SystematicCode::encode_data(const BigInt &data) const {
  return encode(unrank(data, info_));
}

std::optional<Decoded> SystematicCode::decode(const MultiPermutation &received) const {
  if (!(received.alphabet() == word_alphabet_))
    throw InvalidArgument("received word " + received.to_string() + " is not over " +
                          word_alphabet_.to_string());
  const MultiPermutation masked = mask_to_zero(received, info_);
  const InversionVector y = psi(restrict_to(received, info_));
  const auto t = static_cast<std::uint64_t>(t_);
  for (std::size_t j = 0; j < rhos_.size(); ++j) {
    std::uint64_t dj = kendall_distance(masked, rhos_[j]);
    if (dj > t) continue;
    CongruenceCode coset(check_, static_cast<std::int64_t>(j), info_box_);
    auto e = syndrome_decode(y.values(), coset, table_, static_cast<int>(t - dj));
    if (!e) continue;
    std::vector<int> x(y.values().begin(), y.values().end());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= (*e)[i];
    MultiPermutation info = psi_inverse(InversionVector(info_, std::move(x)), info_);
    MultiPermutation codeword = substitute_zeros(info, rhos_[j]);
    std::uint64_t d = kendall_distance(received, codeword);
    if (d <= t) return Decoded{std::move(info), std::move(codeword), d};
  }
  return std::nullopt;
}

Nearest SystematicCode::decode_bruteforce(const MultiPermutation &received,
                                          std::size_t budget) const {
  if (!(received.alphabet() == word_alphabet_))
    throw InvalidArgument("received word " + received.to_string() + " is not over " +
                          word_alphabet_.to_string());
  Nearest best{kNoPairs, {}, {}};
  for_each_in_space(info_, [&](const MultiPermutation &info) {
    MultiPermutation c = encode(info);
    std::uint64_t d = kendall_distance(received, c);
    if (d < best.distance) {
      best.distance = d;
      best.codewords.clear();
      best.infos.clear();
    }
    if (d == best.distance) {
      best.codewords.push_back(std::move(c));
      best.infos.push_back(info);
    }
  }, budget);
  return best;
}

CheckSequence systematic_check(std::size_t n, int t, std::int64_t search_budget) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  if (t == 0) return CheckSequence::trivial(n);
  if (t == 1) return golomb_welch_check(n);
  return find_check_sequence(n, t, search_budget);
}

SystematicCode build_general(const MultiSet &info, const MultiSet &redundancy, int t,
                             const BuildOptions &opts) {
  require_no_zero(info, "information");
  require_no_zero(redundancy, "redundancy");
  if (info.size() == 0) throw InvalidArgument("information alphabet is empty");
  disjoint_union(info, redundancy); // throws when they share a rank
  CheckSequence check = systematic_check(inversion_box(info).size(), t, opts.check_search_budget);
  MultiPermCode cr = build_redundancy_code(zeros_plus(info.size(), redundancy), t, opts.redundancy);
  auto needed = static_cast<std::size_t>(check.modulus());
  if (cr.size() < needed)
    throw Infeasible("redundancy code over " + zeros_plus(info.size(), redundancy).to_string() +
                     " has " + std::to_string(cr.size()) + " words but the checksum needs " +
                     std::to_string(needed));
  std::vector<MultiPermutation> rhos(cr.codewords().begin(),
                                     cr.codewords().begin() + static_cast<std::ptrdiff_t>(needed));
  return SystematicCode(info, redundancy, t, std::move(check), std::move(rhos), cr.recipe());
}

SystematicCode build_systematic(std::size_t k, std::size_t r, int t, const BuildOptions &opts) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (t >= 1 && r < 1) throw InvalidArgument("t >= 1 needs at least one redundancy symbol");
  auto kk = static_cast<Rank>(k);
  MultiSet redundancy = r == 0 ? MultiSet() : MultiSet::range(kk + 1, kk + static_cast<Rank>(r));
  return build_general(MultiSet::range(1, kk), redundancy, t, opts);
}

Advice advise_parameters(std::size_t k, int t, std::size_t max_r, const BuildOptions &opts) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (t < 0) throw InvalidArgument("t must be non-negative");
  Advice advice{};
  advice.k = k;
  advice.t = t;
  CheckSequence check = systematic_check(k - 1, t, opts.check_search_budget);
  advice.modulus = check.modulus();
  const std::size_t first_r = t == 0 ? 0 : static_cast<std::size_t>(t) + 1;
  bool found = false;
  for (std::size_t r = first_r; r <= max_r && !found; ++r) {
    MultiPermCode cr = build_redundancy_code(k, r, t, opts.redundancy);
    advice.attempts.emplace_back(r, cr.size());
    if (cr.size() >= static_cast<std::size_t>(check.modulus())) {
      advice.r = r;
      advice.redundancy_code_size = cr.size();
      found = true;
    }
  }
  if (!found)
    throw BudgetExceeded("no r <= " + std::to_string(max_r) + " gives a (k+r, k) code for k = " +
                         std::to_string(k) + ", t = " + std::to_string(t));
  if (t >= 1 && k >= 2) {
    advice.epsilon = std::log(static_cast<double>(t)) / std::log(static_cast<double>(k));
    advice.mu = static_cast<double>(advice.r) / t;
    advice.mu_threshold = advice.epsilon <= 1.0 ? 1.0 + advice.epsilon : 1.0 + 1.0 / advice.epsilon;
  }
  advice.k_minus_2_prime_power = k >= 4 && is_prime_power(static_cast<std::int64_t>(k) - 2);
  advice.r_minus_1_prime_power = advice.r >= 3 && is_prime_power(static_cast<std::int64_t>(advice.r) - 1);
  advice.in_asymptotic_regime = t >= 1 && advice.mu > advice.mu_threshold &&
                                advice.k_minus_2_prime_power && advice.r_minus_1_prime_power;
  return advice;
}

} // namespace rankmod
