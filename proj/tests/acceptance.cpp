// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails or runs past its time limit.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "oracles.hpp"
#include "rankmod/channel.hpp"
#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/lee.hpp"
#include "rankmod/mpcodes.hpp"
#include "rankmod/systematic.hpp"
#include "rankmod/verify.hpp"

using namespace rankmod;

namespace {

// Wall-clock limits, in seconds.
constexpr double kLimitDistance = 60;
constexpr double kLimitCoreProperties = 300;
constexpr double kLimitPsi = 60;
constexpr double kLimitTiling = 10;
constexpr double kLimitSmallCodes = 60;
constexpr double kLimitTwoError = 600;
constexpr double kLimitCosetBound = 60;
constexpr double kLimitGeneral = 10;
constexpr double kLimitAgreement = 60;
constexpr double kLimitSimulation = 60;

// Multi-sets are enumerated as compositions of n over ranks 1..l. Beyond
// n = 10 every multi-set with a small space is a near-constant word whose
// space is already represented, so the families stop there.
constexpr std::size_t kMaxFamilyLength = 10;

std::vector<MultiSet> family(std::uint64_t max_space) {
  std::vector<MultiSet> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      std::vector<MultiSet::Entry> entries;
      for (std::size_t i = 0; i < parts.size(); ++i) entries.push_back({static_cast<Rank>(i + 1), parts[i]});
      MultiSet m(std::move(entries));
      if (space_size(m) <= max_space) out.push_back(std::move(m));
      return;
    }
    for (std::size_t p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  for (std::size_t n = 1; n <= kMaxFamilyLength; ++n) rec(n);
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt multinomial(const MultiSet &m) {
  BigInt f = factorial(m.size());
  for (std::size_t i = 0; i < m.levels(); ++i) f /= factorial(m.multiplicity(i));
  return f;
}

std::uint64_t key_of(const std::vector<Rank> &s) {
  std::uint64_t k = 0;
  for (Rank v : s) k = k * 11 + static_cast<std::uint64_t>(v);
  return k;
}

/// All-pairs BFS over the transposition graph, with hashed word lookup.
std::vector<std::vector<std::uint32_t>> bfs_all(const std::vector<oracle::Seq> &space) {
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::size_t i = 0; i < space.size(); ++i) index[key_of(space[i])] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> adj(space.size());
  for (std::size_t u = 0; u < space.size(); ++u)
    for (std::size_t i = 0; i + 1 < space[u].size(); ++i) {
      if (space[u][i] == space[u][i + 1]) continue;
      auto w = space[u];
      std::swap(w[i], w[i + 1]);
      adj[u].push_back(index.at(key_of(w)));
    }
  std::vector<std::vector<std::uint32_t>> out(space.size());
  std::vector<std::uint32_t> queue(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    auto &depth = out[s];
    depth.assign(space.size(), UINT32_MAX);
    depth[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(s);
    while (head < tail) {
      std::uint32_t u = queue[head++];
      for (std::uint32_t v : adj[u])
        if (depth[v] == UINT32_MAX) {
          depth[v] = depth[u] + 1;
          queue[tail++] = v;
        }
    }
  }
  return out;
}

std::vector<MultiPermutation> codewords(const SystematicCode &code) {
  std::vector<MultiPermutation> out;
  for (const auto &s : enumerate_space(code.info_alphabet())) out.push_back(code.encode(s));
  return out;
}

std::uint64_t min_distance(const std::vector<MultiPermutation> &words) {
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, kendall_distance(words[i], words[j]));
  return best;
}

/// Words reachable from each codeword by <= t swaps that fail to decode to it.
std::uint64_t decoding_failures(const SystematicCode &code, std::uint64_t &patterns) {
  std::uint64_t failures = 0;
  for (const auto &c : codewords(code)) {
    std::set<std::vector<Rank>> seen{c.sequence()};
    std::vector<MultiPermutation> frontier{c};
    for (int step = 0; step <= code.t(); ++step) {
      std::vector<MultiPermutation> next;
      for (const auto &w : frontier) {
        ++patterns;
        auto got = code.decode(w);
        if (!got || !(got->codeword == c)) ++failures;
        if (step == code.t()) continue;
        for (std::size_t p : legal_transpositions(w)) {
          auto v = apply_adjacent_transposition(w, p);
          if (seen.insert(v.sequence()).second) next.push_back(std::move(v));
        }
      }
      frontier = std::move(next);
    }
  }
  return failures;
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char *title, double limit, const std::function<Outcome()> &body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception &e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs <= limit;
  bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d %s  %s: %s (%.1f s, limit %.0f s%s)\n", id, pass ? "PASS" : "FAIL", title,
              out.detail.c_str(), secs, limit, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

} // namespace

int main() {
  criterion(1, "distance oracle", kLimitDistance, [] {
    std::uint64_t pairs = 0, mismatches = 0;
    auto fam = family(720);
    for (const auto &m : fam) {
      auto space = oracle::arrangements(m);
      auto bfs = bfs_all(space);
      std::vector<MultiPermutation> words;
      for (const auto &s : space) words.emplace_back(m, s);
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j, ++pairs)
          mismatches += kendall_distance(words[i], words[j]) != bfs[i][j];
    }
    bool examples = kendall_distance(MultiPermutation::parse("1,1,2,2"), MultiPermutation::parse("2,1,2,1")) == 3 &&
                    kendall_distance(Permutation::parse("2,1,3,4"), Permutation::parse("3,2,4,1")) == 3;
    std::ostringstream s;
    s << fam.size() << " multi-sets, " << pairs << " pairs, " << mismatches << " mismatches, worked examples "
      << (examples ? "match" : "differ");
    return Outcome{mismatches == 0 && examples, s.str()};
  });

  criterion(2, "core properties", kLimitCoreProperties, [] {
    auto results = verify_all({6, "core"});
    std::uint64_t cases = 0;
    std::string failed;
    for (const auto &r : results) {
      cases += r.cases;
      if (!r.passed) failed += " " + r.name + " [" + r.counterexample + "]";
    }
    std::ostringstream s;
    s << results.size() << " properties, " << cases << " cases";
    if (!failed.empty()) s << ", failed:" << failed;
    return Outcome{failed.empty(), s.str()};
  });

  criterion(3, "psi bijection", kLimitPsi, [] {
    std::uint64_t words = 0, bad = 0;
    auto fam = family(5040);
    for (const auto &m : fam) {
      std::set<std::vector<int>> image;
      BigInt expected = multinomial(m);
      for_each_in_space(m, [&](const MultiPermutation &s) {
        ++words;
        InversionVector x = psi(s);
        image.emplace(x.values().begin(), x.values().end());
        if (!(psi_inverse(x, m) == s)) ++bad;
      });
      if (BigInt(image.size()) != expected || inversion_image_size(m) != expected) ++bad;
    }
    std::ostringstream s;
    s << fam.size() << " multi-sets, " << words << " words, " << bad << " failures";
    return Outcome{bad == 0, s.str()};
  });

  criterion(4, "perfect lee tiling", kLimitTiling, [] {
    std::ostringstream s;
    bool ok = true;
    for (std::size_t n : {2u, 3u}) {
      CheckSequence check = golomb_welch_check(n);
      const int q = static_cast<int>(check.modulus());
      std::size_t points = 1;
      for (std::size_t i = 0; i < n; ++i) points *= static_cast<std::size_t>(q);
      std::vector<int> cover(points, 0);
      std::size_t centers = 0, ball = oracle::small_patterns(n, 1).size();
      for (std::size_t code = 0; code < points; ++code) {
        std::vector<int> x(n);
        std::size_t rest = code;
        for (auto &v : x) {
          v = static_cast<int>(rest % static_cast<std::size_t>(q));
          rest /= static_cast<std::size_t>(q);
        }
        if (check.weighted_sum(x) != 0) continue;
        ++centers;
        for (const auto &e : oracle::small_patterns(n, 1)) {
          std::size_t idx = 0, scale = 1;
          for (std::size_t i = 0; i < n; ++i) {
            idx += static_cast<std::size_t>(((x[i] + e[i]) % q + q) % q) * scale;
            scale *= static_cast<std::size_t>(q);
          }
          ++cover[idx];
        }
      }
      bool exact = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }) &&
                   centers * ball == points;
      ok = ok && exact;
      s << "Z_" << q << "^" << n << ": " << points << " = " << centers << " x " << ball
        << (exact ? "" : " (overlap or gap)") << (n == 2 ? "; " : "");
    }
    return Outcome{ok, s.str()};
  });

  criterion(5, "single-error permutation codes", kLimitSmallCodes, [] {
    std::ostringstream s;
    bool ok = true;
    for (std::size_t k : {4u, 5u}) {
      SystematicCode code = build_systematic(k, 2, 1);
      auto words = codewords(code);
      std::set<std::vector<Rank>> distinct;
      for (const auto &w : words) distinct.insert(w.sequence());
      std::uint64_t d = min_distance(words), patterns = 0;
      std::uint64_t fails = decoding_failures(code, patterns);
      bool here = distinct.size() == factorial(k) && d >= 3 && fails == 0;
      ok = ok && here;
      s << "(" << k << ",2,1): |C|=" << distinct.size() << " d=" << d << " " << patterns
        << " words within 1, " << fails << " misdecoded" << (k == 4 ? "; " : "");
    }
    return Outcome{ok, s.str()};
  });

  criterion(6, "two-error codes", kLimitTwoError, [] {
    std::ostringstream s;
    bool ok = true;
    for (std::size_t k = 4; k <= 6; ++k) {
      CheckSequence check = find_check_sequence(k - 1, 2, 4096);
      std::optional<std::size_t> chosen;
      std::string sizes;
      for (std::size_t r = 3; r <= 5 && !chosen; ++r) {
        auto size = build_redundancy_code(k, r, 2).size();
        sizes += " r=" + std::to_string(r) + ":" + std::to_string(size);
        if (size >= static_cast<std::size_t>(check.modulus())) chosen = r;
      }
      s << (k > 4 ? "; " : "") << "k=" << k << " M=" << check.modulus() << sizes;
      if (!chosen) {
        ok = false;
        s << " no r found";
        continue;
      }
      SystematicCode code = build_systematic(k, *chosen, 2);
      std::uint64_t d = min_distance(codewords(code)), patterns = 0;
      std::uint64_t fails = decoding_failures(code, patterns);
      ok = ok && d >= 5 && fails == 0;
      s << " d=" << d << " " << patterns << " words within 2, " << fails << " misdecoded";
    }
    return Outcome{ok, s.str()};
  });

  criterion(7, "best-coset bound", kLimitCosetBound, [] {
    std::uint64_t violations = 0;
    auto fam = family(5040);
    for (const auto &m : fam) {
      std::size_t len = inversion_box(m).size();
      if (len == 0) continue;  // one level: the single word is its own coset
      auto sizes = coset_sizes(m, golomb_welch_check(len));
      std::uint64_t total = 0, best = 0;
      for (auto c : sizes) {
        total += c;
        best = std::max(best, c);
      }
      if (BigInt(total) != multinomial(m) || BigInt(best) * (2 * len + 1) < multinomial(m)) ++violations;
    }
    std::ostringstream s;
    s << fam.size() << " multi-sets, " << violations << " violations";
    return Outcome{violations == 0, s.str()};
  });

  criterion(8, "multi-set information code", kLimitGeneral, [] {
    MultiSet info = MultiSet::parse("1^2+2");
    SystematicCode code = build_general(info, MultiSet::parse("3^2"), 1);
    std::map<std::vector<Rank>, int> appearances;
    auto words = codewords(code);
    for (const auto &w : words) ++appearances[restrict_to(w, info).sequence()];
    bool once = appearances.size() == 3;
    for (const auto &[seq, count] : appearances) once = once && count == 1;
    std::uint64_t patterns = 0, fails = decoding_failures(code, patterns);
    std::ostringstream s;
    s << "M=" << code.check().modulus() << ", " << words.size() << " codewords, each information word "
      << (once ? "exactly once" : "NOT exactly once") << ", " << patterns << " words within 1, " << fails
      << " misdecoded";
    return Outcome{once && fails == 0, s.str()};
  });

  criterion(9, "decoder matches brute force", kLimitAgreement, [] {
    std::ostringstream s;
    bool ok = true;
    for (std::size_t k : {4u, 5u}) {
      SystematicCode code = build_systematic(k, 2, 1);
      std::uint64_t inputs = 0, disagreements = 0;
      for_each_in_space(code.codeword_alphabet(), [&](const MultiPermutation &w) {
        ++inputs;
        Nearest nearest = code.decode_bruteforce(w);
        auto got = code.decode(w);
        bool agree = nearest.distance <= 1 ? got && nearest.codewords.size() == 1 &&
                                                 got->codeword == nearest.codewords[0]
                                           : !got;
        disagreements += !agree;
      });
      ok = ok && disagreements == 0 && inputs == factorial(k + 2);
      s << (k == 5 ? "; " : "") << "(" << k << ",2,1): " << inputs << " inputs, " << disagreements
        << " disagreements";
    }
    return Outcome{ok, s.str()};
  });

  criterion(10, "channel simulation", kLimitSimulation, [] {
    constexpr std::uint64_t kTrials = 10000;
    constexpr std::uint64_t kSeed = 20240601;
    SystematicCode code = build_systematic(5, 2, 1);
    SimReport one = simulate(code, {1, {}, kSeed}, kTrials);
    SimReport two = simulate(code, {2, {}, kSeed}, kTrials);
    // A second two-error run driven from here, auditing every decoded word
    // against the received one.
    std::uint64_t violations = 0;
    for (std::uint64_t trial = 0; trial < kTrials; ++trial) {
      auto rng = trial_rng(kSeed + 1, trial);
      auto sent = code.encode_data(uniform_below(rng, code.size()));
      auto received = apply_channel(sent, 2, rng);
      auto got = code.decode(received);
      if (got && kendall_distance(received, got->codeword) > 1) ++violations;
    }
    bool ok = one.corrected == kTrials && one.miscorrected == 0 && two.contract_violations == 0 &&
              violations == 0 &&
              two.corrected + two.miscorrected + two.detected_uncorrectable == kTrials;
    std::ostringstream s;
    s << "1 error: corrected " << one.corrected << "/" << kTrials << ", miscorrected " << one.miscorrected
      << "; 2 errors: corrected " << two.corrected << ", miscorrected " << two.miscorrected
      << ", detected " << two.detected_uncorrectable << ", contract violations "
      << two.contract_violations << " (audit " << violations << ")";
    return Outcome{ok, s.str()};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures == 0 ? 0 : 1;
}
