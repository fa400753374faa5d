#include "rankmod/embedding.hpp"

#include <cstdlib>
#include <sstream>

#include "rankmod/errors.hpp"

namespace rankmod {

InversionVector::InversionVector(const MultiSet &m, std::vector<int> values)
    : values_(std::move(values)) {
  block_start_.push_back(0);
  for (std::size_t level = 1; level < m.levels(); ++level) {
    block_start_.push_back(block_start_.back() + m.multiplicity(level));
    bounds_.push_back(static_cast<int>(m.prefix(level)));
  }
  if (values_.size() != block_start_.back())
    throw InvalidArgument("inversion vector of length " + std::to_string(values_.size()) +
                          " does not fit " + m.to_string());
  for (std::size_t b = 0; b < block_count(); ++b) {
    auto blk = block(b);
    for (std::size_t s = 0; s < blk.size(); ++s) {
      if (blk[s] < 0 || blk[s] > bounds_[b])
        throw InvalidArgument("inversion vector entry " + std::to_string(blk[s]) +
                              " outside [0," + std::to_string(bounds_[b]) + "]");
      if (s > 0 && blk[s] > blk[s - 1])
        throw InvalidArgument("inversion vector block " + std::to_string(b + 1) +
                              " is not non-increasing");
    }
  }
}

InversionVector InversionVector::zeros(const MultiSet &m) {
  std::size_t len = m.levels() == 0 ? 0 : m.size() - m.multiplicity(0);
  return InversionVector(m, std::vector<int>(len, 0));
}

InversionVector InversionVector::parse(std::string_view text, const MultiSet &m) {
  std::vector<int> values;
  while (!text.empty()) {
    auto semi = text.find(';');
    std::string_view chunk = text.substr(0, semi);
    std::string flat(chunk);
    for (Rank v : parse_sequence(flat)) values.push_back(v);
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return InversionVector(m, std::move(values));
}

std::span<const int> InversionVector::block(std::size_t b) const {
  return std::span<const int>(values_).subspan(block_start_[b],
                                               block_start_[b + 1] - block_start_[b]);
}

std::string InversionVector::to_string() const {
  std::ostringstream out;
  for (std::size_t b = 0; b < block_count(); ++b) {
    if (b) out << ';';
    auto blk = block(b);
    for (std::size_t s = 0; s < blk.size(); ++s) out << (s ? "," : "") << blk[s];
  }
  return out.str();
}

std::vector<int> inversion_box(const MultiSet &m) {
  std::vector<int> upper;
  for (std::size_t level = 1; level < m.levels(); ++level)
    upper.insert(upper.end(), m.multiplicity(level), static_cast<int>(m.prefix(level)));
  return upper;
}

BigInt inversion_image_size(const MultiSet &m) {
  // Monotone vectors of length len over [0, b] number C(b + len, len).
  BigInt total = 1;
  for (std::size_t level = 1; level < m.levels(); ++level) {
    std::size_t len = m.multiplicity(level), b = m.prefix(level);
    BigInt binom = 1;
    for (std::size_t j = 1; j <= len; ++j) {
      binom *= b + j;
      binom /= j;
    }
    total *= binom;
  }
  return total;
}

InversionVector psi(const MultiPermutation &s) {
  const MultiSet &m = s.alphabet();
  auto levels = s.levels();
  std::vector<std::size_t> next(m.levels(), 0);
  // Offsets of each level's block in the flat vector.
  std::vector<std::size_t> offset(m.levels(), 0);
  for (std::size_t level = 2; level < m.levels(); ++level)
    offset[level] = offset[level - 1] + m.multiplicity(level - 1);

  std::vector<int> values(m.levels() == 0 ? 0 : m.size() - m.multiplicity(0), 0);
  // count_at[l] = symbols of level l seen so far, scanning from the right.
  std::vector<int> count_at(m.levels(), 0);
  for (std::size_t j = s.size(); j-- > 0;) {
    std::size_t level = levels[j];
    if (level > 0) {
      int smaller = 0;
      for (std::size_t l = 0; l < level; ++l) smaller += count_at[l];
      // Occurrences are numbered left to right; scanning from the right the
      // last occurrence is met first.
      std::size_t occ = m.multiplicity(level) - 1 - next[level]++;
      values[offset[level] + occ] = smaller;
    }
    ++count_at[level];
  }
  return InversionVector(m, std::move(values));
}

MultiPermutation psi_inverse(const InversionVector &x, const MultiSet &m) {
  InversionVector checked(m, std::vector<int>(x.values().begin(), x.values().end()));
  if (m.levels() == 0) return MultiPermutation(m, {});
  std::vector<Rank> seq(m.multiplicity(0), m.rank(0));
  for (std::size_t level = 1; level < m.levels(); ++level) {
    auto blk = checked.block(level - 1);
    std::vector<Rank> merged;
    merged.reserve(seq.size() + blk.size());
    // Occurrence s sits after the first seq.size() - x_s lower symbols;
    // monotone blocks make these gaps non-decreasing in s.
    std::size_t s = 0;
    for (std::size_t p = 0; p <= seq.size(); ++p) {
      while (s < blk.size() && seq.size() - static_cast<std::size_t>(blk[s]) == p) {
        merged.push_back(m.rank(level));
        ++s;
      }
      if (p < seq.size()) merged.push_back(seq[p]);
    }
    seq = std::move(merged);
  }
  return MultiPermutation(m, std::move(seq));
}

std::int64_t manhattan_distance(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size())
    throw InvalidArgument("vectors have different lengths");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += std::llabs(static_cast<long long>(x[i]) - y[i]);
  return d;
}

std::int64_t lee_distance(std::span<const int> x, std::span<const int> y, int q) {
  if (x.size() != y.size())
    throw InvalidArgument("vectors have different lengths");
  if (q <= 0) throw InvalidArgument("modulus must be positive");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= q || y[i] < 0 || y[i] >= q)
      throw InvalidArgument("Lee distance entries must lie in [0, q)");
    std::int64_t diff = std::llabs(static_cast<long long>(x[i]) - y[i]);
    d += std::min<std::int64_t>(diff, q - diff);
  }
  return d;
}

} // namespace rankmod
