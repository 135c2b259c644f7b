#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core/rational.hpp"
#include "core/series.hpp"

namespace lcz {

/// splitmix64 stream. Chosen over std:: engines so that identical seeds give
/// bit-identical reports on every platform and standard library.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// Per-trial stream seed: splitmix64 output of seed XOR (trial+1) * golden
/// ratio increment. Trials are independent streams, so they can be replayed
/// (or evaluated concurrently) in isolation.
inline std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 g(seed ^ ((trial + 1) * 0x9E3779B97F4A7C15ull));
  return g.next();
}

/// Default coefficient distribution: numerator uniform in [-5,5], denominator
/// uniform in {1,2,3}. Small rationals keep products exact and cheap through
/// order-16 series.
inline Rational random_coefficient(SplitMix64& g) {
  const long num = static_cast<long>(g.next() % 11) - 5;
  const long den = static_cast<long>(g.next() % 3) + 1;
  return Rational(num, den);
}

inline std::vector<Rational> random_values(SplitMix64& g, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_coefficient(g));
  return out;
}

inline TruncatedSeries random_series(SplitMix64& g, unsigned order) {
  return TruncatedSeries(random_values(g, order + 1));
}

/// Random series with a_1 regenerated until nonzero (the theorems'
/// hypothesis), deterministic in the stream.
inline TruncatedSeries random_series_a1_nonzero(SplitMix64& g, unsigned order) {
  if (order < 1) throw std::invalid_argument("random_series_a1_nonzero: order must be >= 1");
  auto values = random_values(g, order + 1);
  while (values[1].is_zero()) values[1] = random_coefficient(g);
  return TruncatedSeries(std::move(values));
}

}  // namespace lcz
