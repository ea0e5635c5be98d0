#include "lmax/oracle.hpp"

#include <algorithm>
#include <limits>

namespace lmax {

namespace {

struct ExactSearch {
  const Instance& instance;
  std::vector<bool> used;
  std::vector<JobIndex> prefix;
  Time incumbent = std::numeric_limits<Time>::max();
  std::vector<JobIndex> best_order;
  std::uint64_t explored = 0;

  explicit ExactSearch(const Instance& inst)
      : instance(inst), used(inst.size() + 1, false) {
    prefix.reserve(inst.size());
  }

  void dive(Time machine_free, Time worst_delivered, Time remaining_processing) {
    const std::size_t n = instance.size();
    if (prefix.size() == n) {
      ++explored;
      if (worst_delivered < incumbent) {
        incumbent = worst_delivered;
        best_order = prefix;
      }
      return;
    }
    for (JobIndex j = 1; j <= n; ++j) {
      if (used[j]) continue;
      const Job& job = instance.job(j);
      const Time done = std::max(machine_free, job.release) + job.processing;
      const Time worst = std::max(worst_delivered, done + job.delivery);
      const Time rest = remaining_processing - job.processing;
      Time bound = worst;
      if (rest > 0) {
        Time min_tail_delivery = std::numeric_limits<Time>::max();
        for (JobIndex k = 1; k <= n; ++k)
          if (!used[k] && k != j)
            min_tail_delivery = std::min(min_tail_delivery, instance.job(k).delivery);
        bound = std::max(bound, done + rest + min_tail_delivery);
      }
      if (bound >= incumbent) continue;
      used[j] = true;
      prefix.push_back(j);
      dive(done, worst, rest);
      prefix.pop_back();
      used[j] = false;
    }
  }
};

}  // namespace

ExactResult exact_optimum(const Instance& instance, std::size_t cap) {
  if (instance.size() > cap)
    throw Error::capacity("InstanceTooLargeForExact",
                          "exhaustive search is capped at n = " + std::to_string(cap));
  ExactSearch search(instance);
  search.dive(0, 0, instance.total_processing());
  return {search.incumbent, Schedule(std::move(search.best_order)), search.explored};
}

PtasResult enum_ptas(const Instance& instance, const Epsilon& eps, std::uint64_t cap) {
  PlacementEnumerator enumerator(instance, eps, cap);
  PtasResult result;
  bool have_any = false;
  bool have_valid = false;
  while (auto placement = enumerator.next()) {
    ++result.placements_total;
    JacksonBuild built = build_jackson(instance, eps, *placement);
    const Time lateness = max_lateness(instance, built.schedule);
    if (!have_any || lateness < result.best_lateness) {
      have_any = true;
      result.best_schedule = built.schedule;
      result.best_lateness = lateness;
      result.best_placement = *placement;
    }
    if (built.valid) {
      ++result.placements_valid;
      if (!have_valid || lateness < result.best_valid_lateness) {
        have_valid = true;
        result.best_valid_schedule = std::move(built.schedule);
        result.best_valid_lateness = lateness;
        result.best_valid_placement = std::move(*placement);
      }
    }
  }
  if (result.placements_total != enumerator.total_count())
    throw std::logic_error("placement enumeration count mismatch");
  if (!have_valid)
    throw Error::experiment("NoValidPlacement",
                            "no placement admits a full-prefix Jackson schedule");
  return result;
}

bool check_eps_optimal(Time lateness, Time optimum, const Epsilon& eps,
                       Time total_processing) {
  if (optimum < total_processing)
    throw Error::contract("optimum below total processing time; inputs are inconsistent");
  using i128 = __int128;
  const i128 lhs = static_cast<i128>(eps.denominator()) * lateness;
  const i128 rhs = static_cast<i128>(eps.denominator()) * optimum +
                   static_cast<i128>(eps.numerator()) * total_processing;
  return lhs <= rhs;
}

namespace {

std::uint64_t default_absorption_cap(std::size_t n) {
  unsigned __int128 cap = 1;
  for (int e = 0; e < 4; ++e) cap *= n;
  const unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::min(cap, limit));
}

}  // namespace

AbsorptionStats absorption_experiment(const Instance& instance, const Epsilon& eps,
                                      std::uint64_t runs,
                                      std::optional<std::uint64_t> step_cap,
                                      std::uint64_t seed,
                                      const std::optional<Placement>& placement) {
  const std::size_t n = instance.size();
  AbsorptionStats stats;
  stats.placement = placement ? *placement : enum_ptas(instance, eps).best_valid_placement;
  JacksonBuild target = build_jackson(instance, eps, stats.placement);
  if (!target.valid)
    throw Error::experiment("InvalidPlacementForAbsorption",
                            "the chosen placement admits no full-prefix Jackson schedule");
  stats.absorbing_schedule = std::move(target.schedule);
  stats.step_cap = step_cap ? *step_cap : default_absorption_cap(n);
  stats.runs = runs;

  const DeltaPartition part = classify(instance, eps);
  for (std::uint64_t r = 0; r < runs; ++r) {
    RngStream rng(seed + r);

    // start: long jobs pinned, short jobs shuffled over the free positions
    std::vector<JobIndex> order(n, 0);
    for (std::size_t k = 0; k < stats.placement.size(); ++k)
      order[stats.placement.positions()[k] - 1] = stats.placement.jobs()[k];
    const std::vector<JobIndex> arrangement = rng.permutation(part.short_jobs.size());
    std::size_t fill = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (order[i] == 0) order[i] = part.short_jobs[arrangement[fill++] - 1];
    Schedule current(std::move(order));

    std::uint64_t t = 0;
    bool absorbed = current == stats.absorbing_schedule;
    while (!absorbed && t < stats.step_cap) {
      bool swapped = false;
      if (n >= 2) {
        const auto [i, j] = rng.position_pair(n);
        swapped = detail::apply_local_rule(instance, eps, current, i, j);
      }
      ++t;
      if (swapped) absorbed = current == stats.absorbing_schedule;
    }
    stats.records.push_back({r, seed + r, absorbed, t});
    if (absorbed) {
      ++stats.absorbed_within_cap;
      stats.times.push_back(t);
      stats.max_time = std::max(stats.max_time, t);
    }
  }
  if (!stats.times.empty()) {
    long double sum = 0;
    for (std::uint64_t t : stats.times) sum += static_cast<long double>(t);
    stats.mean_time = static_cast<double>(sum / stats.times.size());
  }
  return stats;
}

HittingResult hitting_experiment(const Instance& instance, const EAConfig& config,
                                 std::uint64_t runs, const Placement& target) {
  HittingResult result;
  result.runs = runs;
  result.budget = effective_budget(instance.size(), config);
  for (std::uint64_t r = 0; r < runs; ++r) {
    EAConfig cfg = config;
    cfg.seed = config.seed + r;
    RngStream rng(cfg.seed);
    EAState state = make_initial_state(instance, cfg, rng);

    HittingRun record;
    record.run = r;
    record.seed = cfg.seed;
    record.hit = extract_placement(instance, cfg.eps, state.current) == target;
    std::uint64_t window = 0;
    for (std::uint64_t t = 0; t < result.budget; ++t) {
      const StepTrace trace = ea_step(instance, cfg, state, rng, false);
      if (!record.hit) {
        if (extract_placement(instance, cfg.eps, state.current) == target) {
          record.hit = true;
          record.first_hit_step = state.step;
          window = 0;
        }
      } else if (trace.op == MutationOp::Global) {
        record.quiet_windows.push_back(window);
        window = 0;
      } else {
        ++window;
      }
    }
    if (record.hit) record.quiet_windows.push_back(window);
    if (record.hit) ++result.hits_within_budget;
    result.records.push_back(std::move(record));
  }
  return result;
}

}  // namespace lmax
