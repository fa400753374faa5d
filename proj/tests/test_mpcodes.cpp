#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/lee.hpp"
#include "rankmod/mpcodes.hpp"

using namespace rankmod;

namespace {

std::uint64_t min_distance_by_loop(const std::vector<MultiPermutation> &words) {
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, kendall_distance(words[i], words[j]));
  return best;
}

} // namespace

TEST_CASE("space enumeration") {
  auto two = enumerate_space(MultiSet::parse("1+2"));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == MultiPermutation::parse("1,2"));
  CHECK(two[1] == MultiPermutation::parse("2,1"));
  CHECK(enumerate_space(MultiSet::parse("1^2+2")).size() == 3);

  MultiSet m = MultiSet::redundancy(4, 2);
  auto words = enumerate_space(m);
  CHECK(words.size() == 30);
  CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
  auto reference = oracle::arrangements(m);
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i].sequence() == reference[i]);
  CHECK_THROWS_AS(enumerate_space(MultiSet::range(1, 9), 1000), BudgetExceeded);
}

TEST_CASE("whole space and trivial congruence code") {
  MultiSet m = MultiSet::parse("1^2+2^2+3");
  MultiPermCode all = whole_space(m);
  CHECK(all.size() == 30);
  CongruenceCode trivial(CheckSequence::trivial(inversion_box(m).size()), 0, inversion_box(m));
  CHECK(lift_lee_code(m, trivial).codewords() == all.codewords());
}

TEST_CASE("lifted single-error code on {1^2,2^2,3}") {
  MultiSet m = MultiSet::parse("1^2+2^2+3");
  CheckSequence check = golomb_welch_check(3);
  std::size_t total = 0;
  for (std::int64_t j = 0; j < 7; ++j) {
    MultiPermCode code = lift_lee_code(m, CongruenceCode(check, j, inversion_box(m)));
    total += code.size();
    CHECK(code.design_distance() == 3);
    if (code.size() > 1) CHECK(min_distance_by_loop(code.codewords()) >= 3);
    CHECK_NOTHROW(certify_min_distance(code));
  }
  CHECK(total == 30);
  auto sizes = coset_sizes(m, check);
  CHECK(std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}) == 30);
  MultiPermCode best = best_coset_code(m, check);
  CHECK(best.size() == *std::max_element(sizes.begin(), sizes.end()));
  CHECK(best.recipe().residue ==
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
}

TEST_CASE("certification sentinels and failures") {
  MultiSet m = MultiSet::parse("1+2+3");
  MultiPermCode single(m, {MultiPermutation::sorted(m)}, 5);
  CHECK(certify_min_distance(single) == kNoPairs);
  MultiPermCode bad(m, enumerate_space(m), 2);
  CHECK_THROWS_AS(certify_min_distance(bad), CertificationFailure);
  CHECK_THROWS_AS(certify_min_distance(bad, 3), BudgetExceeded);
  CHECK_THROWS_AS(MultiPermCode(m, {MultiPermutation::sorted(m), MultiPermutation::sorted(m)}, 1),
                  InvalidArgument);
}

TEST_CASE("parity split") {
  MultiSet m = MultiSet::redundancy(4, 2);
  auto [even, odd] = parity_split(whole_space(m), MultiPermutation::sorted(m));
  CHECK(even.size() == 15);
  CHECK(odd.size() == 15);
  CHECK(min_distance_by_loop(even.codewords()) == 2);
  CHECK(min_distance_by_loop(odd.codewords()) == 2);
  CHECK(even.design_distance() == 2);

  MultiPermCode one(m, {MultiPermutation::sorted(m)}, 1);
  auto [e1, o1] = parity_split(one, MultiPermutation::sorted(m));
  CHECK(e1.size() + o1.size() == 1);
  CHECK(std::max(e1.size(), o1.size()) == 1);
}

TEST_CASE("parity split raises an odd design distance") {
  for (const char *text : {"1^2+2^2+3", "1+2+3+4+5", "1^3+2+3^2"}) {
    MultiSet m = MultiSet::parse(text);
    MultiPermCode best = best_coset_code(m, golomb_welch_check(inversion_box(m).size()));
    auto [even, odd] = parity_split(best, MultiPermutation::sorted(m));
    CHECK(even.design_distance() == 4);
    for (const auto &part : {even, odd})
      if (part.size() > 1) CHECK(min_distance_by_loop(part.codewords()) >= 4);
  }
}

TEST_CASE("redundancy codes") {
  MultiPermCode c = build_redundancy_code(4, 2, 1);
  CHECK(c.size() == 15);
  CHECK(min_distance_by_loop(c.codewords()) == 2);
  CHECK(std::is_sorted(c.codewords().begin(), c.codewords().end()));

  for (std::size_t k = 1; k <= 8; ++k) {
    MultiPermCode t1 = build_redundancy_code(k, 2, 1);
    CHECK(4 * t1.size() >= (k + 2) * (k + 1));
    CHECK(certify_min_distance(t1) >= 2);
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    MultiPermCode t2 = build_redundancy_code(k, 3, 2);
    CHECK(28 * t2.size() >= (k + 3) * (k + 2) * (k + 1));
    CHECK(certify_min_distance(t2) >= 4);
  }
  CHECK(build_redundancy_code(3, 2, 0).size() == 20);
}

TEST_CASE("best single-error coset meets the pigeonhole bound") {
  for (const char *text : {"1^2+2^2+3", "1+2+3+4+5+6", "1^3+2^2+3^2", "1^4+2+3+4", "1+2^3+3^3"}) {
    MultiSet m = MultiSet::parse(text);
    std::size_t n1 = inversion_box(m).size();
    MultiPermCode best = best_coset_code(m, golomb_welch_check(n1));
    CHECK(BigInt(best.size()) * (2 * n1 + 1) >= space_size(m));
  }
}

TEST_CASE("the t = 1 modulus bound is below the counting bound") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto n = static_cast<std::size_t>(q + 1);
    CHECK(static_cast<std::uint64_t>(mt_bound(q, 1)) < error_pattern_count(n, 1));
    CHECK_THROWS_AS(find_check_sequence(n, 1, mt_bound(q, 1)), Infeasible);
  }
}

TEST_CASE("multi-error cosets meet the bound for prime-power lengths") {
  // Check length N with N - 1 a prime power q; the searched modulus stays
  // within the bound, so the best coset holds |S| / bound words at least.
  // At t = 1 the bound 2(q+1) is one short of the 2N+1 syndromes a radius-1
  // sequence needs, so only t = 2 is checked.
  for (const char *text : {"1+2+3+4", "1^2+2+3+4", "1+2+3+4+5", "1^2+2+3+4+5", "1+2+3+4+5+6"}) {
    MultiSet m = MultiSet::parse(text);
    std::int64_t n1 = static_cast<std::int64_t>(inversion_box(m).size());
    std::int64_t bound = mt_bound(n1 - 1, 2);
    CheckSequence check = find_check_sequence(static_cast<std::size_t>(n1), 2, bound);
    CHECK(check.modulus() <= bound);
    MultiPermCode best = best_coset_code(m, check);
    CHECK(BigInt(best.size()) * bound >= space_size(m));
  }
}
