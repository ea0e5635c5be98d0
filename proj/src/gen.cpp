#include "lmax/gen.hpp"

#include <algorithm>
#include <numeric>

#include "lmax/rng.hpp"

namespace lmax {

namespace {

Error generation_error(const std::string& message) {
  return {ErrorKind::Contract, "GenerationError", message};
}

bool has_duplicates(std::vector<Time> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  if (spec.n == 0) throw generation_error("cannot generate an empty instance");
  if (spec.n > kMaxJobs) throw generation_error("n exceeds the job-count cap");
  if (spec.processing_max < 1) throw generation_error("processing_max must be at least 1");
  if (spec.release_max < 0 || spec.delivery_max < 0)
    throw generation_error("ranges must be non-negative");
  if (spec.release_max > kMaxTimeValue || spec.processing_max > kMaxTimeValue ||
      spec.delivery_max > kMaxTimeValue)
    throw generation_error("range exceeds the time-value cap");
  if (spec.enforce_generic) {
    const Time needed = static_cast<Time>(spec.n) - 1;
    if (!spec.allow_offset_fallback && spec.delivery_max < needed)
      throw generation_error("delivery_max leaves fewer than n distinct delivery times");
    if (spec.allow_offset_fallback && spec.delivery_max > kMaxTimeValue - needed)
      throw generation_error("offset fallback would exceed the time-value cap");
  }

  RngStream rng(spec.seed);
  std::vector<Job> jobs(spec.n);
  std::vector<Time> deliveries(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    jobs[i].release = static_cast<Time>(rng.uniform_below(spec.release_max + 1));
    jobs[i].processing = 1 + static_cast<Time>(rng.uniform_below(spec.processing_max));
    deliveries[i] = static_cast<Time>(rng.uniform_below(spec.delivery_max + 1));
  }

  if (spec.enforce_generic && has_duplicates(deliveries)) {
    for (int attempt = 0; attempt < 64 && has_duplicates(deliveries); ++attempt) {
      for (Time& q : deliveries) q = static_cast<Time>(rng.uniform_below(spec.delivery_max + 1));
    }
    if (has_duplicates(deliveries)) {
      if (!spec.allow_offset_fallback)
        throw generation_error("could not sample pairwise-distinct delivery times");
      // offsets follow the delivery rank, so the sorted sequence becomes
      // strictly increasing
      std::vector<std::size_t> by_rank(spec.n);
      std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
      std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t x, std::size_t y) {
        return deliveries[x] < deliveries[y] || (deliveries[x] == deliveries[y] && x < y);
      });
      for (std::size_t rank = 0; rank < spec.n; ++rank)
        deliveries[by_rank[rank]] += static_cast<Time>(rank);
    }
  }

  for (std::size_t i = 0; i < spec.n; ++i) jobs[i].delivery = deliveries[i];
  return Instance(std::move(jobs));
}

}  // namespace lmax
