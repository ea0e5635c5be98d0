#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lmax/model.hpp"

namespace lmax {

// Seeded deterministic random stream. All draws are built on top of the fully
// specified mt19937_64 engine with our own rejection sampling, so identical
// seeds reproduce identical sequences on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform integer in [0, bound); bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Exact Bernoulli with probability numerator/denominator.
  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator);

  // Exact Bernoulli with probability base^-exponent, usable even when the
  // denominator overflows 64 bits (falls back to chained base-draws).
  bool one_in_power(std::uint64_t base, unsigned exponent);

  // Uniform permutation of {1..n}.
  std::vector<JobIndex> permutation(std::size_t n);

  // Uniform unordered pair of distinct positions in {1..n}, returned as
  // (i, j) with i < j; each pair has probability 1 / C(n, 2).
  std::pair<Position, Position> position_pair(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace lmax
