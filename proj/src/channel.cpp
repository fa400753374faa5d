#include "rankmod/channel.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "rankmod/errors.hpp"
#include "rankmod/kendall.hpp"
#include "rankmod/rank.hpp"

namespace rankmod {

namespace {

std::size_t sample_error_count(const ChannelSpec &channel, std::mt19937_64 &rng) {
  if (channel.error_distribution.empty()) return channel.error_count;
  double total = 0;
  for (double w : channel.error_distribution) total += w;
  // 53 random bits -> uniform double in [0, 1)
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  for (std::size_t e = 0; e < channel.error_distribution.size(); ++e) {
    if (u < channel.error_distribution[e]) return e;
    u -= channel.error_distribution[e];
  }
  return channel.error_distribution.size() - 1;
}

void merge_into(SimReport &into, const SimReport &part) {
  into.trials += part.trials;
  into.corrected += part.corrected;
  into.miscorrected += part.miscorrected;
  into.detected_uncorrectable += part.detected_uncorrectable;
  into.contract_violations += part.contract_violations;
  auto &hist = into.channel_distance_histogram;
  if (hist.size() < part.channel_distance_histogram.size())
    hist.resize(part.channel_distance_histogram.size(), 0);
  for (std::size_t d = 0; d < part.channel_distance_histogram.size(); ++d)
    hist[d] += part.channel_distance_histogram[d];
}

} // namespace

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty sampling range");
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

BigInt uniform_below(std::mt19937_64 &rng, const BigInt &bound) {
  if (bound <= 0) throw InvalidArgument("empty sampling range");
  if (bound <= std::numeric_limits<std::uint64_t>::max())
    return uniform_below(rng, bound.convert_to<std::uint64_t>());
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  while (true) {
    BigInt x = 0;
    for (std::size_t have = 0; have < bits; have += 64) x = (x << 64) | BigInt(rng());
    x &= (BigInt(1) << bits) - 1;
    if (x < bound) return x;
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

MultiPermutation apply_channel(const MultiPermutation &word, std::size_t errors,
                               std::mt19937_64 &rng) {
  MultiPermutation out = word;
  for (std::size_t e = 0; e < errors; ++e) {
    auto legal = legal_transpositions(out);
    if (legal.empty())
      throw InvalidArgument("no legal transposition in " + word.to_string());
    out = apply_adjacent_transposition(out, legal[uniform_below(rng, legal.size())]);
  }
  return out;
}

SimReport simulate(const SystematicCode &code, const ChannelSpec &channel, std::uint64_t trials,
                   unsigned threads) {
  for (double w : channel.error_distribution)
    if (!(w >= 0)) throw InvalidArgument("error weights must be non-negative");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));

  const BigInt size = code.size();
  const auto t = static_cast<std::uint64_t>(code.t());
  auto run_range = [&](std::uint64_t first, std::uint64_t last, SimReport &out) {
    for (std::uint64_t i = first; i < last; ++i) {
      std::mt19937_64 rng = trial_rng(channel.seed, i);
      std::size_t errors = sample_error_count(channel, rng);
      MultiPermutation info = unrank(uniform_below(rng, size), code.info_alphabet());
      MultiPermutation sent = code.encode(info);
      MultiPermutation received = apply_channel(sent, errors, rng);
      std::uint64_t moved = kendall_distance(sent, received);
      if (out.channel_distance_histogram.size() <= moved)
        out.channel_distance_histogram.resize(moved + 1, 0);
      ++out.channel_distance_histogram[moved];
      ++out.trials;
      auto decoded = code.decode(received);
      if (!decoded) {
        ++out.detected_uncorrectable;
        continue;
      }
      if (kendall_distance(received, decoded->codeword) > t) ++out.contract_violations;
      if (decoded->codeword == sent)
        ++out.corrected;
      else
        ++out.miscorrected;
    }
  };

  std::vector<SimReport> parts(threads);
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      std::uint64_t first = trials * w / threads, last = trials * (w + 1) / threads;
      workers.emplace_back([&, first, last, w] {
        try {
          run_range(first, last, parts[w]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (auto &failure : failures)
    if (failure) std::rethrow_exception(failure);

  SimReport report;
  report.k = code.k();
  report.r = code.r();
  report.t = code.t();
  report.channel = channel;
  for (const auto &part : parts) merge_into(report, part);
  return report;
}

} // namespace rankmod
