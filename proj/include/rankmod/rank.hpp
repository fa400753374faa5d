#pragma once

#include "rankmod/multipermutation.hpp"

namespace rankmod {

// Enumerative ranking of S(m) in lexicographic order. The count of
// completions of a prefix is a multinomial coefficient, updated in place as
// symbols are consumed.

/// Lexicographic index of \a s within S(s.alphabet()).
BigInt rank(const MultiPermutation &s);

/// The multi-permutation with lexicographic index \a index. Throws
/// InvalidArgument when index is outside [0, |S(m)|).
MultiPermutation unrank(const BigInt &index, const MultiSet &m);

} // namespace rankmod
