#pragma once

#include <cstdint>

namespace inselim {

// Deterministic counter-based generator (SplitMix64 finalizer over an
// incrementing counter).  Identical (seed, stream) pairs produce identical
// sequences on every platform, and independent streams can be split off
// without sharing state, so randomized sweeps parallelize reproducibly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();

  // Uniform over [0, n), n >= 1; rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n);

  // Uniform over [lo, hi] inclusive.
  int range(int lo, int hi);

  // Uniform over {-9..9} minus {0}.
  int small_nonzero();

  // Independent generator for a labeled substream.
  CounterRng split(std::uint64_t stream) const;

 private:
  std::uint64_t base_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace inselim
