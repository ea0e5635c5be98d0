#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "lmax/jackson.hpp"
#include "lmax/model.hpp"
#include "lmax/rng.hpp"

namespace lmax {

using u128 = unsigned __int128;

inline constexpr std::uint64_t kDefaultBudgetCap = 1'000'000'000;

struct EAConfig {
  Epsilon eps;
  unsigned global_exponent = 5;  // global mutation fires with probability n^-g
  std::uint64_t lambda = 0;      // 0 selects the default of n
  std::optional<std::uint64_t> max_steps;
  enum class Init { Random, Identity };
  Init init = Init::Random;
  std::uint64_t seed = 0;
  std::uint64_t budget_cap = kDefaultBudgetCap;  // hard cap without an override
};

enum class MutationOp { Local, Global };

struct StepTrace {
  std::uint64_t step = 0;
  MutationOp op = MutationOp::Local;
  std::size_t prefix_length = 0;  // filled only on detailed steps
  Time current_lateness = 0;
  Time best_lateness = 0;
  bool placement_changed = false;  // always false for local steps
};

// Two-individual population: the mutated walker and the best-so-far keeper.
struct EAState {
  Schedule current;
  Schedule best;
  Time current_lateness = 0;
  Time best_lateness = 0;
  std::uint64_t step = 0;
};

// Fresh uniform permutation, independent of any previous schedule.
Schedule global_mutation(std::size_t n, RngStream& rng);

// One neighborhood probe: draws an unordered pair of positions and swaps the
// two jobs when the later one should come first under the extended Jackson
// priorities. Pairs touching a long job are left unchanged, so the placement
// of long jobs is preserved. For n = 1 the schedule is returned as is.
Schedule local_mutation(const Instance& instance, const Epsilon& eps,
                        const Schedule& schedule, RngStream& rng);

// Deterministic core of local_mutation for an explicit pair of positions.
Schedule local_mutation_at(const Instance& instance, const Epsilon& eps,
                           const Schedule& schedule, Position i, Position j);

namespace detail {
// In-place variant; returns true when the pair was swapped.
bool apply_local_rule(const Instance& instance, const Epsilon& eps, Schedule& schedule,
                      Position i, Position j);
}  // namespace detail

// lambda * (ceil(n^(1/eps + 6)) + n^4), saturating 128-bit. The fractional
// exponent is resolved exactly: the head term is the least m with
// m^a >= n^(b + 6a) for eps = a/b.
u128 budget(std::size_t n, const Epsilon& eps, std::uint64_t lambda);

// Applies the max_steps override and the hard cap; throws BudgetTooLarge when
// the formula exceeds the cap with no override, or the result exceeds 2^63-1.
std::uint64_t effective_budget(std::size_t n, const EAConfig& config);

EAState make_initial_state(const Instance& instance, const EAConfig& config, RngStream& rng);

// One generation: mutate the walker (global with probability n^-g), then let
// it replace the keeper only on strict improvement. With detailed = false the
// trace skips the prefix/placement fields; the random draws are identical.
StepTrace ea_step(const Instance& instance, const EAConfig& config, EAState& state,
                  RngStream& rng, bool detailed = true);

struct RunResult {
  Schedule best;
  Time best_lateness = 0;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> first_success_step;
  std::uint64_t seed = 0;
};

using TraceSink = std::function<void(const StepTrace&)>;

// Full run at the effective budget. first_success_step is the first step at
// which the keeper's lateness reaches success_target (0 when the initial
// keeper already qualifies). The sink, when given, sees every step in order.
RunResult run_ea(const Instance& instance, const EAConfig& config,
                 std::optional<Time> success_target = std::nullopt,
                 const TraceSink& sink = {});

}  // namespace lmax
