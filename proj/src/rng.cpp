#include "lmax/rng.hpp"

#include <limits>
#include <numeric>

namespace lmax {

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw Error::contract("uniform_below needs a positive bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // reject the top partial block so every residue is equally likely
  const std::uint64_t overhang = (kMax % bound + 1) % bound;
  const std::uint64_t limit = kMax - overhang;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return draw % bound;
}

bool RngStream::bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0 || numerator > denominator)
    throw Error::contract("bernoulli probability must be a ratio within [0, 1]");
  return uniform_below(denominator) < numerator;
}

bool RngStream::one_in_power(std::uint64_t base, unsigned exponent) {
  if (base == 0) throw Error::contract("one_in_power needs a positive base");
  std::uint64_t denominator = 1;
  bool fits = true;
  for (unsigned e = 0; e < exponent && fits; ++e) {
    if (denominator > std::numeric_limits<std::uint64_t>::max() / base) fits = false;
    else denominator *= base;
  }
  if (fits) return uniform_below(denominator) == 0;
  // success iff `exponent` independent base-sided draws all land on zero
  for (unsigned e = 0; e < exponent; ++e) {
    if (uniform_below(base) != 0) return false;
  }
  return true;
}

std::vector<JobIndex> RngStream::permutation(std::size_t n) {
  std::vector<JobIndex> order(n);
  std::iota(order.begin(), order.end(), JobIndex{1});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t k = static_cast<std::size_t>(uniform_below(i));
    std::swap(order[i - 1], order[k]);
  }
  return order;
}

std::pair<Position, Position> RngStream::position_pair(std::size_t n) {
  if (n < 2) throw Error::contract("position_pair needs at least two positions");
  const std::uint64_t first = uniform_below(n);
  std::uint64_t second = uniform_below(n - 1);
  if (second >= first) ++second;
  const Position i = static_cast<Position>(std::min(first, second) + 1);
  const Position j = static_cast<Position>(std::max(first, second) + 1);
  return {i, j};
}

}  // namespace lmax
