#include "lmax/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lmax {

namespace {

constexpr u128 kU128Max = ~static_cast<u128>(0);

u128 sat_mul(u128 x, u128 y) {
  if (x == 0 || y == 0) return 0;
  if (x > kU128Max / y) return kU128Max;
  return x * y;
}

u128 sat_add(u128 x, u128 y) {
  if (x > kU128Max - y) return kU128Max;
  return x + y;
}

u128 sat_pow(u128 base, std::uint64_t exponent) {
  u128 result = 1;
  for (std::uint64_t e = 0; e < exponent; ++e) {
    result = sat_mul(result, base);
    if (result == kU128Max) break;
  }
  return result;
}

// Least m with m^den >= n^num, resolved in exact integer arithmetic around a
// floating-point starting guess.
u128 ceil_pow_rational(std::uint64_t n, std::uint64_t num, std::uint64_t den) {
  if (n <= 1) return n;
  if (den == 1) return sat_pow(n, num);
  const u128 target = sat_pow(n, num);
  if (target == kU128Max) return kU128Max;
  const long double guess =
      std::pow(static_cast<long double>(n),
               static_cast<long double>(num) / static_cast<long double>(den));
  std::uint64_t m = guess < 4.0L ? 1 : static_cast<std::uint64_t>(guess) - 3;
  while (sat_pow(m, den) < target) ++m;
  return m;
}

}  // namespace

Schedule global_mutation(std::size_t n, RngStream& rng) {
  return Schedule(rng.permutation(n));
}

namespace detail {

bool apply_local_rule(const Instance& instance, const Epsilon& eps, Schedule& schedule,
                      Position i, Position j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 1 || j > schedule.size())
    throw Error::contract("local mutation needs two distinct positions in range");
  const JobIndex front = schedule.at(i);
  const JobIndex back = schedule.at(j);
  if (is_long(instance, eps, front) || is_long(instance, eps, back)) return false;

  Time machine_free = 0;
  for (Position t = 1; t < i; ++t) {
    const Job& job = instance.job(schedule.at(t));
    machine_free = std::max(machine_free, job.release) + job.processing;
  }
  const Job& job_front = instance.job(front);
  const Job& job_back = instance.job(back);

  bool swap;
  if (job_front.release > machine_free) {
    // the machine idles before position i: earlier release wins the slot,
    // delivery priority breaking release ties
    swap = job_front.release > job_back.release ||
           (job_front.release == job_back.release && delivery_precedes(instance, back, front));
  } else {
    // position i starts right at machine_free: any job released by then with
    // higher delivery priority takes the slot
    swap = job_back.release <= machine_free && delivery_precedes(instance, back, front);
  }
  if (swap) schedule.swap_positions(i, j);
  return swap;
}

}  // namespace detail

Schedule local_mutation_at(const Instance& instance, const Epsilon& eps,
                           const Schedule& schedule, Position i, Position j) {
  Schedule result = schedule;
  detail::apply_local_rule(instance, eps, result, i, j);
  return result;
}

Schedule local_mutation(const Instance& instance, const Epsilon& eps,
                        const Schedule& schedule, RngStream& rng) {
  Schedule result = schedule;
  if (result.size() >= 2) {
    const auto [i, j] = rng.position_pair(result.size());
    detail::apply_local_rule(instance, eps, result, i, j);
  }
  return result;
}

u128 budget(std::size_t n, const Epsilon& eps, std::uint64_t lambda) {
  if (n == 0) throw Error::contract("budget needs at least one job");
  if (lambda == 0) throw Error::contract("lambda must be positive");
  const std::uint64_t a = eps.numerator();
  const std::uint64_t b = eps.denominator();
  const u128 head = ceil_pow_rational(n, b + 6 * a, a);
  const u128 tail = sat_pow(n, 4);
  return sat_mul(lambda, sat_add(head, tail));
}

std::uint64_t effective_budget(std::size_t n, const EAConfig& config) {
  const std::uint64_t lambda = config.lambda == 0 ? n : config.lambda;
  const u128 formula = budget(n, config.eps, lambda);
  u128 steps = formula;
  if (config.max_steps) steps = std::min<u128>(steps, *config.max_steps);
  constexpr u128 kStepLimit =
      static_cast<u128>(std::numeric_limits<std::int64_t>::max());
  if (steps > kStepLimit)
    throw Error::capacity("BudgetTooLarge", "step budget exceeds 2^63-1 even after overrides");
  if (!config.max_steps && steps > config.budget_cap)
    throw Error::capacity("BudgetTooLarge",
                          "step budget exceeds the cap of " + std::to_string(config.budget_cap) +
                              "; pass an explicit max_steps override");
  return static_cast<std::uint64_t>(steps);
}

EAState make_initial_state(const Instance& instance, const EAConfig& config, RngStream& rng) {
  const std::size_t n = instance.size();
  EAState state;
  if (config.init == EAConfig::Init::Random) {
    state.current = global_mutation(n, rng);
    state.best = global_mutation(n, rng);
  } else {
    state.current = Schedule::identity(n);
    state.best = Schedule::identity(n);
  }
  state.current_lateness = max_lateness(instance, state.current);
  state.best_lateness = max_lateness(instance, state.best);
  return state;
}

StepTrace ea_step(const Instance& instance, const EAConfig& config, EAState& state,
                  RngStream& rng, bool detailed) {
  const std::size_t n = instance.size();
  const bool global = rng.one_in_power(n, config.global_exponent);

  Placement before;
  if (detailed && global) before = extract_placement(instance, config.eps, state.current);

  if (global) {
    state.current = global_mutation(n, rng);
  } else if (n >= 2) {
    const auto [i, j] = rng.position_pair(n);
    detail::apply_local_rule(instance, config.eps, state.current, i, j);
  }
  state.current_lateness = max_lateness(instance, state.current);
  if (state.current_lateness < state.best_lateness) {
    state.best = state.current;
    state.best_lateness = state.current_lateness;
  }
  ++state.step;

  StepTrace trace;
  trace.step = state.step;
  trace.op = global ? MutationOp::Global : MutationOp::Local;
  trace.current_lateness = state.current_lateness;
  trace.best_lateness = state.best_lateness;
  if (detailed) {
    trace.prefix_length = jackson_prefix(instance, config.eps, state.current).prefix_length;
    if (global)
      trace.placement_changed =
          !(extract_placement(instance, config.eps, state.current) == before);
  }
  return trace;
}

RunResult run_ea(const Instance& instance, const EAConfig& config,
                 std::optional<Time> success_target, const TraceSink& sink) {
  const std::uint64_t steps = effective_budget(instance.size(), config);
  RngStream rng(config.seed);
  EAState state = make_initial_state(instance, config, rng);

  std::optional<std::uint64_t> first_success;
  if (success_target && state.best_lateness <= *success_target) first_success = 0;

  const bool detailed = static_cast<bool>(sink);
  for (std::uint64_t t = 0; t < steps; ++t) {
    const StepTrace trace = ea_step(instance, config, state, rng, detailed);
    if (sink) sink(trace);
    if (success_target && !first_success && state.best_lateness <= *success_target)
      first_success = state.step;
  }
  return {state.best, state.best_lateness, steps, first_success, config.seed};
}

}  // namespace lmax
