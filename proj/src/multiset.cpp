#include "rankmod/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view s, std::string_view what) {
  s = trim(s);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

} // namespace

MultiSet::MultiSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].rank < 0)
      throw InvalidArgument("ranks must be non-negative");
    if (entries_[i].multiplicity == 0)
      throw InvalidArgument("multiplicities must be positive");
    if (i > 0 && entries_[i - 1].rank >= entries_[i].rank)
      throw InvalidArgument("ranks must be strictly increasing");
    prefix_.push_back(prefix_.back() + entries_[i].multiplicity);
  }
}

MultiSet MultiSet::of_sequence(std::span<const Rank> seq) {
  std::map<Rank, std::size_t> counts;
  for (Rank r : seq) ++counts[r];
  std::vector<Entry> entries;
  entries.reserve(counts.size());
  for (auto [r, m] : counts) entries.push_back({r, m});
  return MultiSet(std::move(entries));
}

MultiSet MultiSet::range(Rank first, Rank last) {
  std::vector<Entry> entries;
  for (Rank r = first; r <= last; ++r) entries.push_back({r, 1});
  return MultiSet(std::move(entries));
}

MultiSet MultiSet::redundancy(std::size_t k, std::size_t r) {
  std::vector<Entry> entries;
  if (k > 0) entries.push_back({0, k});
  for (std::size_t i = 1; i <= r; ++i)
    entries.push_back({static_cast<Rank>(k + i), 1});
  return MultiSet(std::move(entries));
}

MultiSet MultiSet::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) return MultiSet();
  std::map<Rank, std::size_t> counts;
  while (true) {
    auto plus = text.find('+');
    std::string_view term = trim(text.substr(0, plus));
    auto caret = term.find('^');
    long long rank = parse_integer(term.substr(0, caret), "rank");
    long long mult = caret == std::string_view::npos
                         ? 1
                         : parse_integer(term.substr(caret + 1), "multiplicity");
    if (mult <= 0) throw InvalidArgument("multiplicities must be positive");
    if (rank < 0) throw InvalidArgument("ranks must be non-negative");
    counts[static_cast<Rank>(rank)] += static_cast<std::size_t>(mult);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  std::vector<Entry> entries;
  for (auto [r, m] : counts) entries.push_back({r, m});
  return MultiSet(std::move(entries));
}

std::string MultiSet::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << '+';
    out << entries_[i].rank;
    if (entries_[i].multiplicity != 1) out << '^' << entries_[i].multiplicity;
  }
  return out.str();
}

std::optional<std::size_t> MultiSet::level_of(Rank r) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                             [](const Entry &e, Rank v) { return e.rank < v; });
  if (it == entries_.end() || it->rank != r) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

bool MultiSet::is_set() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry &e) { return e.multiplicity == 1; });
}

std::vector<Rank> MultiSet::sorted_sequence() const {
  std::vector<Rank> seq;
  seq.reserve(size());
  for (const auto &e : entries_) seq.insert(seq.end(), e.multiplicity, e.rank);
  return seq;
}

MultiSet disjoint_union(const MultiSet &a, const MultiSet &b) {
  std::vector<MultiSet::Entry> entries = a.entries();
  for (const auto &e : b.entries()) {
    if (a.contains(e.rank))
      throw InvalidArgument("multi-sets share rank " + std::to_string(e.rank));
    entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto &x, const auto &y) { return x.rank < y.rank; });
  return MultiSet(std::move(entries));
}

BigInt space_size(const MultiSet &m) {
  // Product of binomials C(prefix(i+1), m_i) avoids the full factorials.
  BigInt total = 1;
  for (std::size_t i = 0; i < m.levels(); ++i) {
    std::size_t top = m.prefix(i + 1);
    std::size_t mult = m.multiplicity(i);
    BigInt binom = 1;
    for (std::size_t j = 1; j <= mult; ++j) {
      binom *= top - mult + j;
      binom /= j;
    }
    total *= binom;
  }
  return total;
}

} // namespace rankmod
