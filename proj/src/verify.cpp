#include "rankmod/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "rankmod/embedding.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/lee.hpp"
#include "rankmod/mpcodes.hpp"

namespace rankmod {

namespace {

// A property under test: counts cases and keeps the first counterexample.
class Property {
public:
  Property(std::string name, std::string suite, std::string statement) {
    result_.name = std::move(name);
    result_.suite = std::move(suite);
    result_.statement = std::move(statement);
  }

  void check(bool ok, const std::function<std::string()> &describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  void tally(std::uint64_t cases) { result_.cases += cases; }
  bool passed() const { return result_.passed; }
  PropertyResult take() { return std::move(result_); }

private:
  PropertyResult result_;
};

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = 1; part <= left; ++part) {
      current.push_back(part);
      rec(left - part);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

MultiSet from_multiplicities(const std::vector<std::size_t> &mults) {
  std::vector<MultiSet::Entry> entries;
  for (std::size_t i = 0; i < mults.size(); ++i) entries.push_back({static_cast<Rank>(i + 1), mults[i]});
  return MultiSet(std::move(entries));
}

/// Multi-sets over ranks 1..l with 1 <= n <= max_n and |S| <= max_space.
std::vector<MultiSet> small_multisets(std::size_t max_n, std::size_t max_space) {
  std::vector<MultiSet> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto &c : compositions(n)) {
      MultiSet m = from_multiplicities(c);
      if (space_size(m) <= max_space) out.push_back(std::move(m));
    }
  return out;
}

// S(m) with an index and an all-pairs distance matrix.
struct Space {
  std::vector<MultiPermutation> words;
  std::map<std::vector<Rank>, std::size_t> index;
  std::vector<std::uint32_t> dist;

  explicit Space(const MultiSet &m) : words(enumerate_space(m)) {
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i].sequence(), i);
    dist.assign(words.size() * words.size(), 0);
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        auto d = static_cast<std::uint32_t>(kendall_distance(words[i], words[j]));
        dist[i * words.size() + j] = dist[j * words.size() + i] = d;
      }
  }
  std::size_t size() const { return words.size(); }
  std::uint32_t d(std::size_t i, std::size_t j) const { return dist[i * words.size() + j]; }
  std::size_t at(const MultiPermutation &w) const { return index.at(w.sequence()); }
};

std::vector<std::uint32_t> bfs(const Space &space, std::size_t source) {
  std::vector<std::uint32_t> depth(space.size(), UINT32_MAX);
  std::deque<std::size_t> queue{source};
  depth[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t p : legal_transpositions(space.words[u])) {
      std::size_t v = space.at(apply_adjacent_transposition(space.words[u], p));
      if (depth[v] == UINT32_MAX) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return depth;
}

std::vector<ThetaVector> all_thetas(const MultiSet &m) {
  std::vector<std::vector<Permutation>> per_level;
  for (std::size_t i = 0; i < m.levels(); ++i) {
    std::vector<Permutation> perms;
    auto seq = Permutation::identity(static_cast<Rank>(m.prefix(i) + 1),
                                     static_cast<Rank>(m.prefix(i + 1))).sequence();
    do {
      perms.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    per_level.push_back(std::move(perms));
  }
  std::vector<ThetaVector> out{ThetaVector{}};
  for (const auto &choices : per_level) {
    std::vector<ThetaVector> next;
    for (const auto &partial : out)
      for (const auto &p : choices) {
        ThetaVector extended = partial;
        extended.thetas.push_back(p);
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

std::string pair_text(const MultiPermutation &a, const MultiPermutation &b) {
  return "[" + a.to_string() + "] vs [" + b.to_string() + "]";
}

// ---- core ----

PropertyResult kendall_matches_bfs(std::size_t max_n) {
  Property p("kendall-matches-bfs", "core",
             "inversion-count distance equals shortest adjacent-transposition path, "
             "all pairs, all multi-sets with |S| <= 720");
  for (const auto &m : small_multisets(max_n, 720)) {
    Space space(m);
    for (std::size_t i = 0; i < space.size(); ++i) {
      auto depth = bfs(space, i);
      for (std::size_t j = 0; j < space.size(); ++j)
        p.check(depth[j] == space.d(i, j), [&] { return pair_text(space.words[i], space.words[j]); });
    }
  }
  return p.take();
}

std::vector<PropertyResult> metric_and_parity(std::size_t max_n) {
  Property axioms("metric-axioms", "core",
                  "distance is symmetric, zero exactly on equal words, and satisfies the "
                  "triangle inequality");
  Property parity("distance-parity", "core",
                  "d(a,b) + d(b,c) and d(a,c) have the same parity for every triple");
  for (const auto &m : small_multisets(max_n, 720)) {
    Space s(m);
    const std::size_t n = s.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        axioms.check(s.d(a, b) == s.d(b, a) && ((s.d(a, b) == 0) == (a == b)),
                     [&] { return pair_text(s.words[a], s.words[b]); });
        for (std::size_t c = 0; c < n; ++c) {
          std::uint32_t ab = s.d(a, b), bc = s.d(b, c), ac = s.d(a, c);
          if (ac > ab + bc)
            axioms.check(false, [&] { return "triangle " + pair_text(s.words[a], s.words[c]); });
          if ((ab + bc + ac) % 2 != 0)
            parity.check(false, [&] { return "triple through [" + s.words[b].to_string() + "]"; });
        }
      }
    axioms.tally(n * n * n);
    parity.tally(n * n * n);
  }
  return {axioms.take(), parity.take()};
}

PropertyResult relabeling_invariance(std::size_t max_n) {
  Property p("relabeling-invariance", "core",
             "d(s,p) = d(T_theta(s), T_theta(p)) for every theta substitution");
  for (const auto &m : small_multisets(max_n, 720)) {
    Space s(m);
    for (const auto &theta : all_thetas(m)) {
      std::vector<Permutation> images;
      for (const auto &w : s.words) images.push_back(t_theta(w, theta));
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
          p.check(kendall_distance(images[a], images[b]) == s.d(a, b),
                  [&] { return pair_text(s.words[a], s.words[b]); });
    }
  }
  return p.take();
}

PropertyResult relabeling_lower_bound(std::size_t max_n) {
  Property p("relabeling-lower-bound", "core",
             "d(T_theta(s), T_eta(p)) >= d(s,p) + sum_i d(theta_i, eta_i)");
  for (const auto &m : small_multisets(std::min<std::size_t>(max_n, 5), 720)) {
    Space s(m);
    auto thetas = all_thetas(m);
    std::vector<std::vector<Permutation>> images(thetas.size());
    for (std::size_t th = 0; th < thetas.size(); ++th)
      for (const auto &w : s.words) images[th].push_back(t_theta(w, thetas[th]));
    for (std::size_t th = 0; th < thetas.size(); ++th)
      for (std::size_t et = 0; et < thetas.size(); ++et) {
        std::uint64_t theta_gap = 0;
        for (std::size_t i = 0; i < m.levels(); ++i)
          theta_gap += kendall_distance(thetas[th].thetas[i], thetas[et].thetas[i]);
        for (std::size_t a = 0; a < s.size(); ++a)
          for (std::size_t b = 0; b < s.size(); ++b)
            p.check(kendall_distance(images[th][a], images[et][b]) >= s.d(a, b) + theta_gap,
                    [&] { return pair_text(s.words[a], s.words[b]); });
      }
  }
  return p.take();
}

PropertyResult inversion_vector_bijection(std::size_t max_n) {
  Property p("inversion-vector-bijection", "core",
             "psi maps S(M) one-to-one onto the monotone-blocked box, |image| = |S(M)|, "
             "and psi_inverse undoes it");
  for (const auto &m : small_multisets(max_n + 1, 5040)) {
    std::map<std::vector<int>, int> seen;
    bool ok = true;
    for_each_in_space(m, [&](const MultiPermutation &w) {
      InversionVector x = psi(w);
      bool fresh = seen.emplace(std::vector<int>(x.values().begin(), x.values().end()), 0).second;
      bool back = psi_inverse(x, m) == w;
      if (!(fresh && back)) ok = false;
      p.check(fresh && back, [&] { return "[" + w.to_string() + "] -> " + x.to_string(); });
    });
    p.check(ok && BigInt(seen.size()) == inversion_image_size(m) &&
                inversion_image_size(m) == space_size(m),
            [&] { return "image size mismatch for " + m.to_string(); });
  }
  return p.take();
}

PropertyResult manhattan_lower_bound(std::size_t max_n) {
  Property p("manhattan-lower-bound", "core", "d_M(psi(s), psi(p)) <= d_K(s, p)");
  for (const auto &m : small_multisets(max_n, 720)) {
    Space s(m);
    std::vector<InversionVector> images;
    for (const auto &w : s.words) images.push_back(psi(w));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        p.check(manhattan_distance(images[a].values(), images[b].values()) <= s.d(a, b),
                [&] { return pair_text(s.words[a], s.words[b]); });
  }
  return p.take();
}

PropertyResult lee_below_manhattan() {
  Property p("lee-below-manhattan", "core", "d_L(x,y) <= d_M(x,y) over Z_q^N");
  for (auto [q, len] : {std::pair{5, 2}, std::pair{4, 3}, std::pair{3, 4}}) {
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<std::size_t>(q);
    auto vec = [&](std::size_t code) {
      std::vector<int> v(static_cast<std::size_t>(len));
      for (auto &x : v) {
        x = static_cast<int>(code % static_cast<std::size_t>(q));
        code /= static_cast<std::size_t>(q);
      }
      return v;
    };
    for (std::size_t a = 0; a < total; ++a)
      for (std::size_t b = 0; b < total; ++b) {
        auto x = vec(a), y = vec(b);
        p.check(lee_distance(x, y, q) <= manhattan_distance(x, y),
                [&] { return "q=" + std::to_string(q); });
      }
  }
  return p.take();
}

std::vector<PropertyResult> star_properties() {
  Property ident("projection-identities", "core",
                 "(s * rho) restricted to [k] is s and (s * rho) with [k] zeroed is rho");
  Property bound("star-distance-lower-bound", "core",
                 "d(s * rho1, p * rho2) >= d(s, p) + d(rho1, rho2), k, r <= 3");
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t r = 1; r <= 3; ++r) {
      Space info(MultiSet::range(1, static_cast<Rank>(k)));
      Space red(MultiSet::redundancy(k, r));
      std::vector<std::vector<Permutation>> stars(info.size());
      for (std::size_t a = 0; a < info.size(); ++a)
        for (std::size_t b = 0; b < red.size(); ++b) {
          Permutation w = star(Permutation(info.words[a]), red.words[b]);
          ident.check(project_down(w, k) == info.words[a] && project_zero(w, k) == red.words[b],
                      [&] { return "[" + w.to_string() + "]"; });
          stars[a].push_back(std::move(w));
        }
      for (std::size_t a = 0; a < info.size(); ++a)
        for (std::size_t b = 0; b < info.size(); ++b)
          for (std::size_t x = 0; x < red.size(); ++x)
            for (std::size_t y = 0; y < red.size(); ++y)
              bound.check(kendall_distance(stars[a][x], stars[b][y]) >= info.d(a, b) + red.d(x, y),
                          [&] { return pair_text(stars[a][x], stars[b][y]); });
    }
  return {ident.take(), bound.take()};
}

PropertyResult projection_contraction(std::size_t max_n) {
  Property p("projection-contraction", "core",
             "d(a|k, b|k) + d(a[k->0], b[k->0]) <= d(a, b) for permutations a, b and every k");
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 6); ++n) {
    Space full(MultiSet::range(1, static_cast<Rank>(n)));
    for (std::size_t k = 1; k <= n; ++k) {
      Space down(MultiSet::range(1, static_cast<Rank>(k)));
      Space zero(MultiSet::redundancy(k, n - k));
      std::vector<std::size_t> di, zi;
      for (const auto &w : full.words) {
        Permutation a(w);
        di.push_back(down.at(project_down(a, k)));
        zi.push_back(zero.at(project_zero(a, k)));
      }
      for (std::size_t a = 0; a < full.size(); ++a)
        for (std::size_t b = 0; b < full.size(); ++b)
          p.check(down.d(di[a], di[b]) + zero.d(zi[a], zi[b]) <= full.d(a, b),
                  [&] { return pair_text(full.words[a], full.words[b]) + " k=" + std::to_string(k); });
    }
  }
  return p.take();
}

// ---- codes ----

PropertyResult golomb_welch_tiling() {
  Property p("golomb-welch-tiling", "codes",
             "radius-1 Lee balls around the check-sum-zero words tile Z_{2N+1}^N, N = 2, 3");
  for (std::size_t n : {2u, 3u}) {
    CheckSequence check = golomb_welch_check(n);
    const int q = static_cast<int>(check.modulus());
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(q);
    auto vec = [&](std::size_t code) {
      std::vector<int> v(n);
      for (auto &x : v) {
        x = static_cast<int>(code % static_cast<std::size_t>(q));
        code /= static_cast<std::size_t>(q);
      }
      return v;
    };
    std::vector<std::vector<int>> codewords;
    for (std::size_t c = 0; c < total; ++c)
      if (check.weighted_sum(vec(c)) == 0) codewords.push_back(vec(c));
    std::vector<int> cover(total, 0);
    for (std::size_t c = 0; c < total; ++c) {
      auto y = vec(c);
      for (const auto &x : codewords)
        if (lee_distance(x, y, q) <= 1) ++cover[c];
    }
    std::size_t expected = total / static_cast<std::size_t>(q);
    p.check(codewords.size() == expected, [&] {
      return "N=" + std::to_string(n) + ": " + std::to_string(codewords.size()) + " codewords";
    });
    for (std::size_t c = 0; c < total; ++c)
      p.check(cover[c] == 1, [&] { return "N=" + std::to_string(n) + ": point covered " +
                                          std::to_string(cover[c]) + " times"; });
  }
  return p.take();
}

PropertyResult check_sequence_distance() {
  Property p("check-sequence-distance", "codes",
             "vectors in one coset of a distinct-sums congruence code are >= 2t+1 apart in "
             "Manhattan distance");
  std::vector<CheckSequence> checks{golomb_welch_check(2), golomb_welch_check(3),
                                    find_check_sequence(2, 2, 200), find_check_sequence(3, 2, 200)};
  for (const auto &check : checks) {
    const std::size_t n = check.length();
    const int side = 5;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= side;
    std::vector<std::vector<int>> points;
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<int> v(n);
      std::size_t code = c;
      for (auto &x : v) {
        x = static_cast<int>(code % side);
        code /= side;
      }
      points.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < total; ++a)
      for (std::size_t b = a + 1; b < total; ++b)
        if (check.weighted_sum(points[a]) == check.weighted_sum(points[b]))
          p.check(manhattan_distance(points[a], points[b]) >= 2 * check.radius() + 1,
                  [&] { return "modulus " + std::to_string(check.modulus()); });
  }
  return p.take();
}

std::vector<PropertyResult> lifted_codes(std::size_t max_n) {
  Property distance("lifted-code-distance", "codes",
                    "every coset of a lifted single-error congruence code has Kendall minimum "
                    "distance >= 3");
  Property bound("best-coset-bound", "codes",
                 "the largest lifted coset has >= |S(M)| / (2(n - m_1) + 1) words, |S| <= 5040");
  for (const auto &m : small_multisets(max_n, 720)) {
    std::size_t len = inversion_box(m).size();
    if (len == 0) continue;
    CheckSequence check = golomb_welch_check(len);
    for (std::int64_t j = 0; j < check.modulus(); ++j) {
      MultiPermCode code = lift_lee_code(m, CongruenceCode(check, j, inversion_box(m)));
      std::uint64_t d = min_pairwise_distance(code.codewords());
      distance.check(d == kNoPairs || d >= 3, [&] {
        return m.to_string() + " residue " + std::to_string(j) + " distance " + std::to_string(d);
      });
    }
  }
  for (const auto &m : small_multisets(max_n + 4, 5040)) {
    std::size_t len = inversion_box(m).size();
    CheckSequence check = golomb_welch_check(len);
    auto sizes = coset_sizes(m, check);
    std::uint64_t best = *std::max_element(sizes.begin(), sizes.end());
    bound.check(BigInt(best) * (2 * len + 1) >= space_size(m),
                [&] { return m.to_string() + " best coset " + std::to_string(best); });
  }
  return {distance.take(), bound.take()};
}

void check_code(Property &p, const SystematicCode &code, bool exhaustive_errors) {
  const std::string label = code.info_alphabet().to_string() + " | " +
                            code.redundancy_alphabet().to_string() + " t=" +
                            std::to_string(code.t());
  std::vector<MultiPermutation> words;
  std::map<std::vector<Rank>, int> info_seen;
  for_each_in_space(code.info_alphabet(), [&](const MultiPermutation &info) {
    MultiPermutation c = code.encode(info);
    p.check(restrict_to(c, code.info_alphabet()) == info,
            [&] { return label + ": not systematic at [" + info.to_string() + "]"; });
    words.push_back(std::move(c));
  });
  std::sort(words.begin(), words.end());
  p.check(std::adjacent_find(words.begin(), words.end()) == words.end(),
          [&] { return label + ": two information words share a codeword"; });
  std::uint64_t d = min_pairwise_distance(words);
  p.check(d == kNoPairs || d >= static_cast<std::uint64_t>(2 * code.t() + 1),
          [&] { return label + ": minimum distance " + std::to_string(d); });
  if (!exhaustive_errors) return;
  // Every sequence of <= t adjacent transpositions.
  for (const auto &c : words) {
    std::function<void(const MultiPermutation &, int)> walk = [&](const MultiPermutation &w,
                                                                  int left) {
      auto decoded = code.decode(w);
      p.check(decoded && decoded->codeword == c,
              [&] { return label + ": [" + w.to_string() + "] not decoded to [" + c.to_string() + "]"; });
      if (left == 0) return;
      for (std::size_t pos : legal_transpositions(w)) walk(apply_adjacent_transposition(w, pos), left - 1);
    };
    walk(c, code.t());
  }
}

PropertyResult systematic_codes() {
  Property p("systematic-codes", "codes",
             "built codes are systematic, have minimum distance >= 2t+1 and correct every "
             "pattern of <= t adjacent transpositions");
  check_code(p, build_systematic(4, 2, 1), true);
  check_code(p, build_systematic(5, 2, 1), true);
  check_code(p, build_systematic(4, 4, 2), true);
  return p.take();
}

PropertyResult decoder_matches_bruteforce() {
  Property p("decoder-matches-bruteforce", "codes",
             "decode returns the nearest codeword whenever it is within t and fails otherwise");
  for (std::size_t k : {4u, 5u}) {
    SystematicCode code = build_systematic(k, 2, 1);
    for_each_in_space(code.codeword_alphabet(), [&](const MultiPermutation &w) {
      Nearest nearest = code.decode_bruteforce(w);
      auto decoded = code.decode(w);
      bool ok = nearest.distance <= 1
                    ? decoded && nearest.codewords.size() == 1 && decoded->codeword == nearest.codewords[0]
                    : !decoded;
      p.check(ok, [&] { return "k=" + std::to_string(k) + " [" + w.to_string() + "]"; });
    });
  }
  return p.take();
}

PropertyResult general_code_example() {
  Property p("general-code-example", "codes",
             "multi-set information {1^2,2} with redundancy {3,3}: systematic, distance >= 3, "
             "single errors corrected");
  check_code(p, build_general(MultiSet::parse("1^2+2"), MultiSet::parse("3^2"), 1), true);
  return p.take();
}

} // namespace

std::vector<PropertyResult> verify_all(const VerifyOptions &opts) {
  if (opts.suite != "all" && opts.suite != "core" && opts.suite != "codes")
    throw InvalidArgument("unknown suite '" + opts.suite + "'");
  if (opts.max_n < 2) throw InvalidArgument("max-n must be at least 2");
  std::vector<PropertyResult> out;
  auto add = [&](std::vector<PropertyResult> results) {
    for (auto &r : results) out.push_back(std::move(r));
  };
  if (opts.suite != "codes") {
    out.push_back(kendall_matches_bfs(opts.max_n));
    add(metric_and_parity(opts.max_n));
    out.push_back(relabeling_invariance(opts.max_n));
    out.push_back(relabeling_lower_bound(opts.max_n));
    out.push_back(inversion_vector_bijection(opts.max_n));
    out.push_back(manhattan_lower_bound(opts.max_n));
    out.push_back(lee_below_manhattan());
    add(star_properties());
    out.push_back(projection_contraction(opts.max_n));
  }
  if (opts.suite != "core") {
    out.push_back(golomb_welch_tiling());
    out.push_back(check_sequence_distance());
    add(lifted_codes(opts.max_n));
    out.push_back(systematic_codes());
    out.push_back(decoder_matches_bruteforce());
    out.push_back(general_code_example());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> coverage_manifest() {
  // Run the cheap end of each property to collect names and statements.
  static const std::vector<std::pair<std::string, std::string>> manifest = [] {
    std::vector<std::pair<std::string, std::string>> m;
    for (const auto &r : verify_all({2, "all"})) m.emplace_back(r.name, r.statement);
    return m;
  }();
  return manifest;
}

std::vector<PropertyResult> audit_code(const SystematicCode &code) {
  Property distinct("redundancy-words-distinct", "audit",
                    "the redundancy words are pairwise distinct");
  const auto &rhos = code.rhos();
  for (std::size_t a = 0; a < rhos.size(); ++a)
    for (std::size_t b = a + 1; b < rhos.size(); ++b)
      distinct.check(!(rhos[a] == rhos[b]), [&] {
        return "rho_" + std::to_string(a) + " = rho_" + std::to_string(b) + " = [" +
               rhos[a].to_string() + "]";
      });
  Property spread("redundancy-distance", "audit",
                  "redundancy words are pairwise at distance >= 2t");
  for (std::size_t a = 0; a < rhos.size(); ++a)
    for (std::size_t b = a + 1; b < rhos.size(); ++b)
      spread.check(kendall_distance(rhos[a], rhos[b]) >= static_cast<std::uint64_t>(2 * code.t()),
                   [&] { return pair_text(rhos[a], rhos[b]); });
  Property whole("code-properties", "audit",
                 "systematic, minimum distance >= 2t+1, all <= t transposition patterns decoded");
  check_code(whole, code, space_size(code.info_alphabet()) <= 720);
  return {distinct.take(), spread.take(), whole.take()};
}

} // namespace rankmod
