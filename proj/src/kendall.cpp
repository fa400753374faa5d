#include "rankmod/kendall.hpp"

#include <algorithm>

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

std::uint64_t merge_count(std::vector<std::size_t> &a, std::vector<std::size_t> &buf,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      count += mid - i;
      buf[out++] = a[j++];
    } else {
      buf[out++] = a[i++];
    }
  }
  while (i < mid) buf[out++] = a[i++];
  while (j < hi) buf[out++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return count;
}

void require_same_alphabet(const MultiPermutation &a, const MultiPermutation &b) {
  if (!(a.alphabet() == b.alphabet()))
    throw InvalidArgument("alphabets differ: " + a.alphabet().to_string() + " vs " +
                          b.alphabet().to_string());
}

bool is_interval_set(const MultiSet &m, Rank first, Rank last) {
  return m == MultiSet::range(first, last);
}

} // namespace

std::uint64_t count_inversions(std::span<const std::size_t> a) {
  std::vector<std::size_t> work(a.begin(), a.end()), buf(a.size());
  return merge_count(work, buf, 0, work.size());
}

std::uint64_t count_inversions_quadratic(std::span<const std::size_t> a) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++count;
  return count;
}

std::uint64_t kendall_distance(const MultiPermutation &a, const MultiPermutation &b) {
  require_same_alphabet(a, b);
  auto la = a.canonical_labels();
  auto lb = b.canonical_labels();
  std::vector<std::size_t> pos_in_b(lb.size());
  for (std::size_t j = 0; j < lb.size(); ++j) pos_in_b[lb[j]] = j;
  for (auto &label : la) label = pos_in_b[label];
  return count_inversions(la);
}

MultiPermutation apply_adjacent_transposition(const MultiPermutation &s,
                                              std::size_t pos) {
  if (pos + 1 >= s.size())
    throw InvalidArgument("transposition position " + std::to_string(pos) +
                          " out of range for length " + std::to_string(s.size()));
  if (s[pos] == s[pos + 1])
    throw InvalidArgument("positions " + std::to_string(pos) + " and " +
                          std::to_string(pos + 1) + " hold equal symbols");
  std::vector<Rank> seq = s.sequence();
  std::swap(seq[pos], seq[pos + 1]);
  return MultiPermutation(s.alphabet(), std::move(seq));
}

std::vector<std::size_t> legal_transpositions(const MultiPermutation &s) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < s.size(); ++p)
    if (s[p] != s[p + 1]) out.push_back(p);
  return out;
}

Permutation t_theta(const MultiPermutation &s, const ThetaVector &theta) {
  theta.check_compatible(s.alphabet());
  auto labels = s.canonical_labels();
  const MultiSet &m = s.alphabet();
  auto levels = s.levels();
  std::vector<Rank> out(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::size_t level = levels[j];
    out[j] = theta.thetas[level][labels[j] - m.prefix(level)];
  }
  return Permutation(std::move(out));
}

MultiPermutation substitute_zeros(const MultiPermutation &info,
                                  const MultiPermutation &rho) {
  const MultiSet &ra = rho.alphabet();
  if (ra.levels() == 0 || ra.rank(0) != 0 || ra.multiplicity(0) != info.size())
    throw InvalidArgument("redundancy word " + rho.to_string() + " needs exactly " +
                          std::to_string(info.size()) + " zeros");
  std::vector<Rank> seq;
  seq.reserve(rho.size());
  std::size_t next = 0;
  for (Rank v : rho.sequence()) seq.push_back(v == 0 ? info[next++] : v);
  MultiSet redundancy(std::vector<MultiSet::Entry>(ra.entries().begin() + 1,
                                                   ra.entries().end()));
  return MultiPermutation(disjoint_union(info.alphabet(), redundancy), std::move(seq));
}

MultiPermutation restrict_to(const MultiPermutation &word, const MultiSet &info) {
  std::vector<Rank> seq;
  for (Rank v : word.sequence())
    if (info.contains(v)) seq.push_back(v);
  return MultiPermutation(info, std::move(seq));
}

MultiPermutation mask_to_zero(const MultiPermutation &word, const MultiSet &info) {
  std::vector<MultiSet::Entry> entries{{0, info.size()}};
  for (const auto &e : word.alphabet().entries()) {
    if (info.contains(e.rank)) continue;
    if (e.rank == 0) throw InvalidArgument("rank 0 is reserved for masking");
    entries.push_back(e);
  }
  std::vector<Rank> seq;
  seq.reserve(word.size());
  for (Rank v : word.sequence()) seq.push_back(info.contains(v) ? 0 : v);
  return MultiPermutation(MultiSet(std::move(entries)), std::move(seq));
}

Permutation star(const Permutation &sigma, const MultiPermutation &rho) {
  std::size_t k = sigma.size();
  if (!is_interval_set(sigma.alphabet(), 1, static_cast<Rank>(k)))
    throw InvalidArgument("sigma " + sigma.to_string() + " is not in S_k");
  std::size_t r = rho.size() >= k ? rho.size() - k : 0;
  if (!(rho.alphabet() == MultiSet::redundancy(k, r)))
    throw InvalidArgument("rho " + rho.to_string() + " is not over {0^" +
                          std::to_string(k) + ", k+1..k+r}");
  return Permutation(substitute_zeros(sigma, rho));
}

Permutation project_down(const Permutation &alpha, std::size_t k) {
  std::size_t n = alpha.size();
  if (k < 1 || k > n)
    throw InvalidArgument("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  if (!is_interval_set(alpha.alphabet(), 1, static_cast<Rank>(n)))
    throw InvalidArgument(alpha.to_string() + " is not in S_n");
  return Permutation(restrict_to(alpha, MultiSet::range(1, static_cast<Rank>(k))));
}

MultiPermutation project_zero(const Permutation &alpha, std::size_t k) {
  std::size_t n = alpha.size();
  if (k < 1 || k > n)
    throw InvalidArgument("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  if (!is_interval_set(alpha.alphabet(), 1, static_cast<Rank>(n)))
    throw InvalidArgument(alpha.to_string() + " is not in S_n");
  return mask_to_zero(alpha, MultiSet::range(1, static_cast<Rank>(k)));
}

} // namespace rankmod
