#include "rankmod/multipermutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rankmod/errors.hpp"

namespace rankmod {

std::vector<Rank> parse_sequence(std::string_view text) {
  std::vector<Rank> seq;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  if (text.empty()) return seq;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    Rank value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidArgument("bad rank '" + std::string(item) + "'");
    seq.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return seq;
}

std::string format_sequence(std::span<const Rank> seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ',';
    out << seq[i];
  }
  return out.str();
}

MultiPermutation::MultiPermutation(MultiSet alphabet, std::vector<Rank> seq)
    : alphabet_(std::move(alphabet)), seq_(std::move(seq)) {
  if (seq_.size() != alphabet_.size())
    throw InvalidArgument("sequence " + format_sequence(seq_) +
                          " has the wrong length for " + alphabet_.to_string());
  std::vector<std::size_t> counts(alphabet_.levels(), 0);
  for (Rank r : seq_) {
    auto level = alphabet_.level_of(r);
    if (!level)
      throw InvalidArgument("rank " + std::to_string(r) + " is not in " +
                            alphabet_.to_string());
    ++counts[*level];
  }
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != alphabet_.multiplicity(i))
      throw InvalidArgument("sequence " + format_sequence(seq_) +
                            " is not an ordering of " + alphabet_.to_string());
}

MultiPermutation MultiPermutation::from_sequence(std::vector<Rank> seq) {
  MultiSet alphabet = MultiSet::of_sequence(seq);
  return MultiPermutation(Unchecked{}, std::move(alphabet), std::move(seq));
}

MultiPermutation MultiPermutation::sorted(const MultiSet &alphabet) {
  return MultiPermutation(Unchecked{}, alphabet, alphabet.sorted_sequence());
}

MultiPermutation MultiPermutation::parse(std::string_view text) {
  return from_sequence(parse_sequence(text));
}

MultiPermutation MultiPermutation::parse(std::string_view text,
                                         const MultiSet &alphabet) {
  return MultiPermutation(alphabet, parse_sequence(text));
}

std::vector<std::size_t> MultiPermutation::levels() const {
  std::vector<std::size_t> out(seq_.size());
  for (std::size_t j = 0; j < seq_.size(); ++j) out[j] = *alphabet_.level_of(seq_[j]);
  return out;
}

std::vector<std::size_t> MultiPermutation::canonical_labels() const {
  std::vector<std::size_t> next(alphabet_.levels());
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = alphabet_.prefix(i);
  std::vector<std::size_t> out(seq_.size());
  for (std::size_t j = 0; j < seq_.size(); ++j) out[j] = next[*alphabet_.level_of(seq_[j])]++;
  return out;
}

Permutation::Permutation(std::vector<Rank> seq)
    : MultiPermutation(MultiPermutation::from_sequence(std::move(seq))) {
  if (!alphabet().is_set())
    throw InvalidArgument("permutation " + to_string() + " repeats an entry");
}

Permutation::Permutation(const MultiPermutation &mp) : MultiPermutation(mp) {
  if (!alphabet().is_set())
    throw InvalidArgument(to_string() + " is not a permutation");
}

Permutation Permutation::identity(std::size_t n) {
  return identity(1, static_cast<Rank>(n));
}

Permutation Permutation::identity(Rank first, Rank last) {
  std::vector<Rank> seq;
  for (Rank r = first; r <= last; ++r) seq.push_back(r);
  return Permutation(std::move(seq));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_sequence(text));
}

std::vector<std::size_t> Permutation::positions() const {
  std::vector<std::size_t> pos(size());
  if (size() == 0) return pos;
  Rank low = alphabet().rank(0);
  for (std::size_t j = 0; j < size(); ++j) pos[(*this)[j] - low] = j;
  return pos;
}

ThetaVector ThetaVector::identity(const MultiSet &m) {
  ThetaVector theta;
  for (std::size_t i = 0; i < m.levels(); ++i)
    theta.thetas.push_back(Permutation::identity(static_cast<Rank>(m.prefix(i) + 1),
                                                 static_cast<Rank>(m.prefix(i + 1))));
  return theta;
}

void ThetaVector::check_compatible(const MultiSet &m) const {
  if (thetas.size() != m.levels())
    throw InvalidArgument("theta needs one permutation per rank");
  for (std::size_t i = 0; i < m.levels(); ++i) {
    const MultiSet &support = thetas[i].alphabet();
    if (support != MultiSet::range(static_cast<Rank>(m.prefix(i) + 1),
                                   static_cast<Rank>(m.prefix(i + 1))))
      throw InvalidArgument("theta_" + std::to_string(i + 1) + " acts on " +
                            support.to_string() + " instead of its interval");
  }
}

} // namespace rankmod
