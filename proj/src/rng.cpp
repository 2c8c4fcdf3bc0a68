#include "inselim/rng.hpp"

#include <stdexcept>

namespace inselim {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(mix64(seed ^ mix64(stream))), seed_(seed) {}

std::uint64_t CounterRng::next() { return mix64(base_ + counter_++ * 0x9e3779b97f4a7c15ULL); }

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw std::domain_error("empty range");
  std::uint64_t limit = ~0ULL - ~0ULL % n;
  for (;;) {
    std::uint64_t r = next();
    if (r < limit) return r % n;
  }
}

int CounterRng::range(int lo, int hi) {
  if (hi < lo) throw std::domain_error("empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

int CounterRng::small_nonzero() {
  int k = static_cast<int>(below(18));
  return k < 9 ? k - 9 : k - 8;
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(seed_, mix64(base_) ^ stream);
}

}  // namespace inselim
