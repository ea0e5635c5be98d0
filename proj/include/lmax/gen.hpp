#pragma once

#include <cstdint>

#include "lmax/model.hpp"

namespace lmax {

struct GenSpec {
  std::size_t n = 0;
  Time release_max = 0;     // releases drawn uniformly from [0, release_max]
  Time processing_max = 1;  // processing drawn uniformly from [1, processing_max]
  Time delivery_max = 0;    // deliveries drawn uniformly from [0, delivery_max]
  bool enforce_generic = false;
  // After repeated resampling still leaves duplicate deliveries, add the rank
  // permutation of offsets 0..n-1, which makes them pairwise distinct.
  bool allow_offset_fallback = true;
  std::uint64_t seed = 0;
};

// Deterministic instance sampler: a fixed spec always yields the same jobs.
Instance generate_instance(const GenSpec& spec);

}  // namespace lmax
