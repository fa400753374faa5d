#include "rankmod/lee.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void patterns_from(std::size_t i, int remaining, std::vector<int> &e, int weight,
                   const std::function<void(std::span<const int>, int)> &visit) {
  if (i == e.size()) {
    visit(e, weight);
    return;
  }
  patterns_from(i + 1, remaining, e, weight, visit);
  for (int a = 1; a <= remaining; ++a) {
    for (int sign : {1, -1}) {
      e[i] = sign * a;
      patterns_from(i + 1, remaining - a, e, weight + a, visit);
    }
  }
  e[i] = 0;
}

// Backtracking over increasing h_1 < h_2 < ... <= (M-1)/2. Negating an h_i or
// reordering the h's permutes the error patterns, so this loses no solutions.
class CheckSearch {
public:
  CheckSearch(std::size_t n, int t, std::int64_t modulus)
      : n_(n), t_(t), modulus_(modulus), used_(static_cast<std::size_t>(modulus), 0) {
    used_[0] = 1;
    patterns_.push_back({0, 0});
  }

  bool run() { return extend(1); }
  const std::vector<std::int64_t> &h() const { return h_; }

private:
  bool extend(std::int64_t min_h) {
    if (h_.size() == n_) return true;
    const std::int64_t max_h = (modulus_ - 1) / 2;
    for (std::int64_t c = min_h; c <= max_h; ++c) {
      if (max_h - c + 1 < static_cast<std::int64_t>(n_ - h_.size())) break;
      const std::size_t before = patterns_.size();
      bool ok = true;
      for (std::size_t p = 0; p < before && ok; ++p) {
        auto [sum, weight] = patterns_[p];
        for (int a = 1; a <= t_ - weight && ok; ++a) {
          for (int sign : {1, -1}) {
            std::int64_t v = mod(sum + sign * a * c, modulus_);
            if (used_[v]) {
              ok = false;
              break;
            }
            used_[v] = 1;
            patterns_.push_back({v, weight + a});
          }
        }
      }
      if (ok) {
        h_.push_back(c);
        if (extend(c + 1)) return true;
        h_.pop_back();
      }
      for (std::size_t p = before; p < patterns_.size(); ++p) used_[patterns_[p].first] = 0;
      patterns_.resize(before);
    }
    return false;
  }

  std::size_t n_;
  int t_;
  std::int64_t modulus_;
  std::vector<char> used_;
  std::vector<std::pair<std::int64_t, int>> patterns_;
  std::vector<std::int64_t> h_;
};

} // namespace

void for_each_error_pattern(std::size_t length, int radius,
                            const std::function<void(std::span<const int>, int)> &visit) {
  if (radius < 0) throw InvalidArgument("radius must be non-negative");
  std::vector<int> e(length, 0);
  patterns_from(0, radius, e, 0, visit);
}

std::uint64_t error_pattern_count(std::size_t length, int radius) {
  // sum over support size i of 2^i C(N, i) C(t, i)
  std::uint64_t total = 0;
  std::uint64_t binom_n = 1, binom_t = 1, pow2 = 1;
  for (std::size_t i = 0; i <= length && static_cast<int>(i) <= radius; ++i) {
    total += pow2 * binom_n * binom_t;
    binom_n = binom_n * (length - i) / (i + 1);
    binom_t = binom_t * (static_cast<std::uint64_t>(radius) - i) / (i + 1);
    pow2 *= 2;
  }
  return total;
}

bool has_distinct_sums(std::span<const std::int64_t> h, std::int64_t modulus, int radius) {
  if (modulus <= 0) return false;
  if (error_pattern_count(h.size(), radius) > static_cast<std::uint64_t>(modulus))
    return false;
  std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
  bool distinct = true;
  for_each_error_pattern(h.size(), radius, [&](std::span<const int> e, int) {
    if (!distinct) return;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s = mod(s + e[i] * h[i], modulus);
    if (seen[s]) distinct = false;
    seen[s] = 1;
  });
  return distinct;
}

CheckSequence::CheckSequence(std::vector<std::int64_t> h, std::int64_t modulus, int radius)
    : h_(std::move(h)), modulus_(modulus), radius_(radius) {
  if (modulus_ < 1) throw InvalidArgument("check modulus must be positive");
  if (radius_ < 0) throw InvalidArgument("check radius must be non-negative");
  for (auto v : h_) {
    bool in_range = radius_ == 0 ? (v >= 0 && v < modulus_) : (v > 0 && v < modulus_);
    if (!in_range)
      throw InvalidArgument("check value " + std::to_string(v) + " outside (0, " +
                            std::to_string(modulus_) + ")");
  }
  if (!has_distinct_sums(h_, modulus_, radius_))
    throw InvalidArgument("check sequence lacks distinct sums at radius " +
                          std::to_string(radius_) + " modulo " + std::to_string(modulus_));
}

CheckSequence CheckSequence::trivial(std::size_t length) {
  return CheckSequence(std::vector<std::int64_t>(length, 0), 1, 0);
}

std::int64_t CheckSequence::weighted_sum(std::span<const int> x) const {
  if (x.size() != h_.size())
    throw InvalidArgument("vector length " + std::to_string(x.size()) +
                          " does not match check length " + std::to_string(h_.size()));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = mod(s + mod(x[i], modulus_) * h_[i], modulus_);
  return s;
}

CheckSequence golomb_welch_check(std::size_t n) {
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = static_cast<std::int64_t>(i + 1);
  return CheckSequence(std::move(h), static_cast<std::int64_t>(2 * n + 1), 1);
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true; // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::int64_t mt_bound(std::int64_t q, int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (!is_prime_power(q))
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  std::int64_t m = 0, power = 1;
  for (int i = 0; i <= t; ++i) {
    if (power > std::numeric_limits<std::int64_t>::max() / q && i < t)
      throw InvalidArgument("bound overflows");
    m += power;
    power *= q;
  }
  std::int64_t factor = t % 2 == 1 ? static_cast<std::int64_t>(t) * (t + 1)
                                   : static_cast<std::int64_t>(t) * (t + 2);
  return factor * m;
}

CheckSequence find_check_sequence(std::size_t n, int t, std::int64_t max_modulus) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  if (t == 0) return CheckSequence::trivial(n);
  std::uint64_t lower = error_pattern_count(n, t);
  for (auto m = static_cast<std::int64_t>(lower); m <= max_modulus; ++m) {
    CheckSearch search(n, t, m);
    if (search.run()) return CheckSequence(search.h(), m, t);
  }
  throw Infeasible("no check sequence of length " + std::to_string(n) + " for radius " +
                   std::to_string(t) + " with modulus <= " + std::to_string(max_modulus));
}

CongruenceCode::CongruenceCode(CheckSequence check, std::int64_t residue,
                               std::vector<int> upper)
    : check_(std::move(check)), residue_(residue), upper_(std::move(upper)) {
  if (residue_ < 0 || residue_ >= check_.modulus())
    throw InvalidArgument("residue " + std::to_string(residue_) + " outside [0, " +
                          std::to_string(check_.modulus()) + ")");
  if (upper_.size() != check_.length())
    throw InvalidArgument("domain box and check sequence have different lengths");
  if (std::any_of(upper_.begin(), upper_.end(), [](int u) { return u < 0; }))
    throw InvalidArgument("domain bounds must be non-negative");
}

bool CongruenceCode::in_domain(std::span<const int> x) const {
  if (x.size() != upper_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] > upper_[i]) return false;
  return true;
}

bool CongruenceCode::contains(std::span<const int> x) const {
  return in_domain(x) && check_.weighted_sum(x) == residue_;
}

std::int64_t syndrome(std::span<const int> y, const CongruenceCode &code) {
  return mod(code.check().weighted_sum(y) - code.residue(), code.check().modulus());
}

SyndromeTable::SyndromeTable(const CheckSequence &check)
    : check_(check), slot_(static_cast<std::size_t>(check.modulus()), -1) {
  for_each_error_pattern(check.length(), check.radius(), [&](std::span<const int> e, int) {
    std::int64_t s = check_.weighted_sum(e);
    slot_[s] = static_cast<std::int32_t>(patterns_.size());
    patterns_.emplace_back(e.begin(), e.end());
  });
}

const std::vector<int> *SyndromeTable::lookup(std::int64_t syndrome) const {
  if (syndrome < 0 || syndrome >= check_.modulus()) return nullptr;
  auto slot = slot_[static_cast<std::size_t>(syndrome)];
  return slot < 0 ? nullptr : &patterns_[static_cast<std::size_t>(slot)];
}

std::optional<std::vector<int>> syndrome_decode(std::span<const int> y,
                                                const CongruenceCode &code,
                                                const SyndromeTable &table,
                                                std::optional<int> max_weight) {
  if (!(table.check() == code.check()))
    throw InvalidArgument("syndrome table was built for a different check sequence");
  if (y.size() != code.check().length())
    throw InvalidArgument("received vector has the wrong length");
  const std::vector<int> *e = table.lookup(syndrome(y, code));
  if (!e) return std::nullopt;
  int weight = 0;
  for (int v : *e) weight += std::abs(v);
  if (weight > max_weight.value_or(code.check().radius())) return std::nullopt;
  std::vector<int> x(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= (*e)[i];
  if (!code.in_domain(x)) return std::nullopt;
  return *e;
}

} // namespace rankmod
