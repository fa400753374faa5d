#include "rankmod/rank.hpp"

#include "rankmod/errors.hpp"

namespace rankmod {

BigInt rank(const MultiPermutation &s) {
  const MultiSet &m = s.alphabet();
  std::vector<std::size_t> remaining(m.levels());
  for (std::size_t i = 0; i < m.levels(); ++i) remaining[i] = m.multiplicity(i);
  // completions = multinomial count of the unconsumed symbols.
  BigInt completions = space_size(m);
  BigInt index = 0;
  std::size_t left = s.size();
  for (std::size_t level : s.levels()) {
    for (std::size_t smaller = 0; smaller < level; ++smaller)
      if (remaining[smaller] > 0) index += completions * remaining[smaller] / left;
    completions = completions * remaining[level] / left;
    --remaining[level];
    --left;
  }
  return index;
}

MultiPermutation unrank(const BigInt &index, const MultiSet &m) {
  BigInt completions = space_size(m);
  if (index < 0 || index >= completions)
    throw InvalidArgument("index " + index.str() + " outside [0, " + completions.str() + ")");
  std::vector<std::size_t> remaining(m.levels());
  for (std::size_t i = 0; i < m.levels(); ++i) remaining[i] = m.multiplicity(i);
  BigInt rest = index;
  std::vector<Rank> seq;
  seq.reserve(m.size());
  for (std::size_t left = m.size(); left > 0; --left) {
    for (std::size_t level = 0; level < m.levels(); ++level) {
      if (remaining[level] == 0) continue;
      BigInt block = completions * remaining[level] / left;
      if (rest < block) {
        seq.push_back(m.rank(level));
        completions = block;
        --remaining[level];
        break;
      }
      rest -= block;
    }
  }
  return MultiPermutation(m, std::move(seq));
}

} // namespace rankmod
