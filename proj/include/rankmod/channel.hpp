#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rankmod/multiset.hpp"
#include "rankmod/systematic.hpp"

namespace rankmod {

/// Adjacent-transposition channel. Each error swaps a uniformly chosen pair of
/// distinct adjacent symbols.
struct ChannelSpec {
  /// Errors per word when error_distribution is empty.
  std::size_t error_count = 0;
  /// Optional weights: error_distribution[e] is the relative probability of
  /// e errors.
  std::vector<double> error_distribution;
  std::uint64_t seed = 0;
};

struct SimReport {
  std::size_t k = 0, r = 0;
  int t = 0;
  ChannelSpec channel;
  std::uint64_t trials = 0;
  std::uint64_t corrected = 0;
  std::uint64_t miscorrected = 0;
  std::uint64_t detected_uncorrectable = 0;
  /// Decoder outputs farther than t from the received word; always 0 for a
  /// correct decoder.
  std::uint64_t contract_violations = 0;
  /// histogram[d] = trials whose received word was at distance d from the
  /// sent codeword.
  std::vector<std::uint64_t> channel_distance_histogram;
};

/// Uniform integer in [0, bound) from 64-bit draws, by rejection.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);
BigInt uniform_below(std::mt19937_64 &rng, const BigInt &bound);

/// Generator for one trial, derived from the run seed and trial index.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Applies \a errors random legal adjacent transpositions. Throws
/// InvalidArgument if the word runs out of legal positions.
MultiPermutation apply_channel(const MultiPermutation &word,
                               std::size_t errors, std::mt19937_64 &rng);

/**
 * Sends uniformly random information words through encode, the channel and
 * decode. Results depend only on the seed, never on \a threads
 * (0 = hardware concurrency).
 */
SimReport simulate(const SystematicCode &code, const ChannelSpec &channel,
                   std::uint64_t trials, unsigned threads = 0);

} // namespace rankmod
