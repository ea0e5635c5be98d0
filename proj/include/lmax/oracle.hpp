#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lmax/evolve.hpp"
#include "lmax/jackson.hpp"
#include "lmax/model.hpp"

namespace lmax {

inline constexpr std::size_t kDefaultExactCap = 10;

struct ExactResult {
  Time optimum = 0;
  Schedule witness;
  std::uint64_t explored = 0;  // complete permutations reached by the search
};

// Exhaustive branch-and-bound over all n! orders. A partial order is cut when
// max(worst delivered so far, machine-free time + remaining processing +
// smallest remaining delivery) already reaches the incumbent.
ExactResult exact_optimum(const Instance& instance, std::size_t cap = kDefaultExactCap);

struct PtasResult {
  // Lowest lateness over every built schedule, valid or not.
  Schedule best_schedule;
  Time best_lateness = 0;
  Placement best_placement;
  std::uint64_t placements_total = 0;
  std::uint64_t placements_valid = 0;
  // Lowest lateness restricted to full-prefix builds.
  Schedule best_valid_schedule;
  Time best_valid_lateness = 0;
  Placement best_valid_placement;
};

// Builds the pinned Jackson schedule for every placement and keeps the best
// one. At least one placement always builds with a full prefix (the plain
// extended Jackson rule induces one); a miss raises NoValidPlacement.
PtasResult enum_ptas(const Instance& instance, const Epsilon& eps,
                     std::uint64_t cap = kDefaultEnumerationCap);

// Exact integer form of lateness <= optimum + eps * total_processing.
// Requires optimum >= total_processing, which holds for every instance.
bool check_eps_optimal(Time lateness, Time optimum, const Epsilon& eps,
                       Time total_processing);

struct AbsorptionRun {
  std::uint64_t run = 0;
  std::uint64_t seed = 0;
  bool absorbed = false;
  std::uint64_t steps = 0;  // absorption time, or the cap when not absorbed
};

struct AbsorptionStats {
  std::uint64_t runs = 0;
  std::uint64_t absorbed_within_cap = 0;
  std::uint64_t step_cap = 0;
  std::vector<std::uint64_t> times;  // absorption times of absorbed runs
  double mean_time = 0.0;
  std::uint64_t max_time = 0;
  std::vector<AbsorptionRun> records;
  Placement placement;
  Schedule absorbing_schedule;
};

// Local-mutation-only walk restricted to one placement: long jobs pinned,
// short jobs shuffled uniformly at the start of each run. A run absorbs when
// it reaches the placement's full-prefix Jackson schedule. The placement
// defaults to the best valid one from enum_ptas; the step cap defaults to n^4.
AbsorptionStats absorption_experiment(const Instance& instance, const Epsilon& eps,
                                      std::uint64_t runs,
                                      std::optional<std::uint64_t> step_cap,
                                      std::uint64_t seed,
                                      const std::optional<Placement>& placement = std::nullopt);

struct HittingRun {
  std::uint64_t run = 0;
  std::uint64_t seed = 0;
  bool hit = false;
  std::uint64_t first_hit_step = 0;
  // lengths of the maximal global-mutation-free stretches after the hit
  std::vector<std::uint64_t> quiet_windows;
};

struct HittingResult {
  std::uint64_t runs = 0;
  std::uint64_t hits_within_budget = 0;
  std::uint64_t budget = 0;
  std::vector<HittingRun> records;
};

// Full hybrid runs that record when the walker first enters the target
// placement's equivalence class. Run r uses seed config.seed + r.
HittingResult hitting_experiment(const Instance& instance, const EAConfig& config,
                                 std::uint64_t runs, const Placement& target);

}  // namespace lmax
