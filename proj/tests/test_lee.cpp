#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/lee.hpp"

using namespace rankmod;

namespace {

bool distinct_sums_by_hand(const CheckSequence &c) {
  std::set<std::int64_t> sums;
  auto patterns = oracle::small_patterns(c.length(), c.radius());
  for (const auto &e : patterns) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * c.h()[i];
    s %= c.modulus();
    if (s < 0) s += c.modulus();
    if (!sums.insert(s).second) return false;
  }
  return true;
}

} // namespace

TEST_CASE("golomb-welch check sequences") {
  CheckSequence c3 = golomb_welch_check(3);
  CHECK(c3.h() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(c3.modulus() == 7);
  CHECK(c3.radius() == 1);
  CheckSequence c1 = golomb_welch_check(1);
  CHECK(c1.h() == std::vector<std::int64_t>{1});
  CHECK(c1.modulus() == 3);

  std::set<std::int64_t> sums;
  for (const auto &e : oracle::small_patterns(3, 1)) sums.insert(c3.weighted_sum(e));
  CHECK(sums.size() == 7);
}

TEST_CASE("radius-1 lee balls tile the torus") {
  for (std::size_t n : {2u, 3u}) {
    CheckSequence c = golomb_welch_check(n);
    const int q = static_cast<int>(c.modulus());
    std::vector<int> cover(static_cast<std::size_t>(std::pow(q, n)), 0);
    std::size_t codewords = 0;
    for (std::size_t code = 0; code < cover.size(); ++code) {
      std::vector<int> x(n);
      std::size_t rest = code;
      for (auto &v : x) {
        v = static_cast<int>(rest % q);
        rest /= q;
      }
      if (c.weighted_sum(x) != 0) continue;
      ++codewords;
      for (const auto &e : oracle::small_patterns(n, 1)) {
        std::size_t idx = 0, scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
          idx += static_cast<std::size_t>(((x[i] + e[i]) % q + q) % q) * scale;
          scale *= q;
        }
        ++cover[idx];
      }
    }
    CHECK(codewords * static_cast<std::size_t>(q) == cover.size());
    CHECK(std::all_of(cover.begin(), cover.end(), [](int v) { return v == 1; }));
  }
}

TEST_CASE("prime powers and the modulus bound") {
  CHECK(is_prime_power(2));
  CHECK(is_prime_power(9));
  CHECK(is_prime_power(27));
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(12));
  CHECK(mt_bound(3, 2) == 104);
  CHECK(mt_bound(2, 1) == 6);
  for (std::int64_t q : {2, 3, 4, 5, 7}) CHECK(mt_bound(q, 1) == 2 * (q + 1));
  CHECK_THROWS_AS(mt_bound(6, 1), InvalidArgument);
}

TEST_CASE("error pattern counts") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t <= 3; ++t) {
      std::uint64_t visited = 0;
      for_each_error_pattern(n, t, [&](std::span<const int>, int) { ++visited; });
      CHECK(visited == oracle::small_patterns(n, t).size());
      CHECK(error_pattern_count(n, t) == visited);
    }
}

TEST_CASE("check sequence search") {
  CheckSequence a = find_check_sequence(3, 1, 100);
  CHECK(a.modulus() == 7);
  CHECK(a.h() == std::vector<std::int64_t>{1, 2, 3});
  CheckSequence b = find_check_sequence(1, 1, 100);
  CHECK(b.modulus() == 3);
  CHECK(b.h() == std::vector<std::int64_t>{1});

  CheckSequence c = find_check_sequence(4, 2, mt_bound(3, 2));
  CHECK(c.modulus() <= 104);
  CHECK(c.radius() == 2);
  CHECK(distinct_sums_by_hand(c));

  // Radius 3 from length 5 on is a minutes-long search, so it stops at 4.
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 1; t <= (n <= 4 ? 3 : 2); ++t) {
      CheckSequence s = find_check_sequence(n, t, 4096);
      CHECK(distinct_sums_by_hand(s));
      CHECK(static_cast<std::uint64_t>(s.modulus()) >= error_pattern_count(n, t));
    }
  CHECK_THROWS_AS(find_check_sequence(4, 2, 20), Infeasible);
}

TEST_CASE("check sequences reject colliding sums") {
  CHECK_THROWS_AS(CheckSequence({1, 2, 3}, 6, 1), InvalidArgument);
  CHECK_THROWS_AS(CheckSequence({1, 1}, 5, 1), InvalidArgument);
  CHECK_NOTHROW(CheckSequence({1, 2}, 5, 1));
}

TEST_CASE("syndromes") {
  CongruenceCode code(golomb_welch_check(3), 0, {3, 3, 3});
  CHECK(syndrome(std::vector<int>{1, 0, 2}, code) == 0);
  CHECK(code.contains(std::vector<int>{1, 0, 2}));
  CHECK(syndrome(std::vector<int>{1, 1, 2}, code) == 2);
  CHECK(syndrome(std::vector<int>{1, 0, 3}, code) == 3);
  CHECK(code.design_distance() == 3);
}

TEST_CASE("syndrome decoding") {
  CongruenceCode code(golomb_welch_check(3), 0, {3, 3, 3});
  SyndromeTable table(code.check());
  std::vector<int> c{1, 0, 2};
  CHECK(*syndrome_decode(c, code, table) == std::vector<int>{0, 0, 0});
  CHECK(*syndrome_decode(std::vector<int>{1, 1, 2}, code, table) == std::vector<int>{0, 1, 0});

  // A word at Manhattan distance >= 2 from every codeword of the box.
  std::vector<std::vector<int>> box_codewords;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int d = 0; d <= 3; ++d)
        if (code.contains(std::vector<int>{a, b, d})) box_codewords.push_back({a, b, d});
  bool found = false;
  for (int a = 0; a <= 3 && !found; ++a)
    for (int b = 0; b <= 3 && !found; ++b)
      for (int d = 0; d <= 3 && !found; ++d) {
        std::vector<int> y{a, b, d};
        bool far = true;
        for (const auto &x : box_codewords) far = far && oracle::manhattan(x, y) >= 2;
        if (!far) continue;
        found = true;
        CHECK_FALSE(syndrome_decode(y, code, table).has_value());
      }
  CHECK(found);
}

TEST_CASE("syndrome decoding recovers every in-box pattern") {
  for (auto check : {golomb_welch_check(3), find_check_sequence(3, 2, 200)}) {
    std::vector<int> upper{3, 3, 3};
    SyndromeTable table(check);
    auto patterns = oracle::small_patterns(3, check.radius());
    for (std::int64_t residue = 0; residue < check.modulus(); residue += 3) {
      CongruenceCode code(check, residue, upper);
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
          for (int d = 0; d <= 3; ++d) {
            std::vector<int> x{a, b, d};
            if (!code.contains(x)) continue;
            for (const auto &e : patterns) {
              std::vector<int> y{a + e[0], b + e[1], d + e[2]};
              auto got = syndrome_decode(y, code, table);
              REQUIRE(got.has_value());
              CHECK(*got == e);
            }
          }
    }
  }
}

TEST_CASE("distinct sums give manhattan distance 2t+1") {
  for (auto check : {golomb_welch_check(2), find_check_sequence(2, 2, 100)}) {
    std::map<std::int64_t, std::vector<std::vector<int>>> cosets;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) cosets[check.weighted_sum(std::vector<int>{a, b})].push_back({a, b});
    for (const auto &[s, points] : cosets)
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          CHECK(oracle::manhattan(points[i], points[j]) >= 2 * check.radius() + 1);
  }
}
