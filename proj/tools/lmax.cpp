// lmax: solvers and experiment drivers for single-machine scheduling with
// release and delivery times (minimize maximal lateness).

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmax/evolve.hpp"
#include "lmax/gen.hpp"
#include "lmax/io.hpp"
#include "lmax/jackson.hpp"
#include "lmax/model.hpp"
#include "lmax/oracle.hpp"
#include "lmax/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace lmax;

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buffer[32];
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

ordered_json make_manifest(const std::string& command, const std::vector<std::string>& argv,
                           const ordered_json& instance, const ordered_json& config,
                           std::uint64_t seed) {
  ordered_json manifest;
  manifest["command"] = command;
  manifest["argv"] = argv;
  manifest["instance"] = instance;
  manifest["config"] = config;
  manifest["seed"] = seed;
  manifest["version"] = kVersion;
  manifest["timestamp"] = iso_timestamp();
  return manifest;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    write_text_file(out_path, payload);
  }
}

ordered_json schedule_json(const Schedule& schedule) {
  return ordered_json(schedule.order());
}

std::size_t worker_count() {
  if (const char* env = std::getenv("LMAX_WORKERS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<std::size_t>(value);
  }
  return 1;
}

// Runs fn(0..count-1) across the configured workers; slot-indexed results
// keep the aggregation order-independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), count == 0 ? std::size_t{1} : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct EAFlags {
  std::string eps_text;
  std::uint64_t seed = 0;
  std::int64_t max_steps = -1;  // -1 = no override
  std::uint64_t lambda = 1;
  unsigned global_exponent = 5;
  std::string init = "random";
  std::uint64_t budget_cap = kDefaultBudgetCap;

  void add_to(CLI::App* cmd, bool with_init = true) {
    cmd->add_option("--eps", eps_text, "approximation parameter, exact rational a/b")
        ->required();
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--max-steps", max_steps, "explicit step budget override");
    cmd->add_option("--lambda", lambda, "budget multiplier");
    cmd->add_option("--global-exponent", global_exponent,
                    "global mutation fires with probability n^-G");
    cmd->add_option("--budget-cap", budget_cap, "hard step cap without an override");
    if (with_init)
      cmd->add_option("--init", init, "initial population: random or identity")
          ->check(CLI::IsMember({"random", "identity"}));
  }

  EAConfig to_config() const {
    EAConfig config{Epsilon::parse(eps_text)};
    config.seed = seed;
    config.lambda = lambda;
    config.global_exponent = global_exponent;
    config.budget_cap = budget_cap;
    if (max_steps >= 0) config.max_steps = static_cast<std::uint64_t>(max_steps);
    config.init = init == "identity" ? EAConfig::Init::Identity : EAConfig::Init::Random;
    return config;
  }

  ordered_json echo() const {
    ordered_json config;
    config["eps"] = Epsilon::parse(eps_text).to_string();
    config["seed"] = seed;
    config["lambda"] = lambda;
    config["global_exponent"] = global_exponent;
    config["init"] = init;
    config["budget_cap"] = budget_cap;
    if (max_steps >= 0) config["max_steps"] = max_steps;
    else config["max_steps"] = nullptr;
    return config;
  }
};

int dispatch(const std::vector<std::string>& argv);

// ---------------------------------------------------------------- commands

int cmd_gen(const std::vector<std::string>& argv, const GenSpec& spec,
            const std::string& out_path) {
  const Instance instance = generate_instance(spec);
  const std::string doc = instance_to_json(instance);
  ordered_json config;
  config["n"] = spec.n;
  config["r_max"] = spec.release_max;
  config["p_max"] = spec.processing_max;
  config["q_max"] = spec.delivery_max;
  config["generic"] = spec.enforce_generic;
  config["seed"] = spec.seed;
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    write_text_file(out_path, doc);
    ordered_json result;
    result["command"] = "gen";
    result["out"] = out_path;
    result["manifest"] = make_manifest("gen", argv, out_path, config, spec.seed);
    std::cout << result.dump(2) << "\n";
  }
  return 0;
}

int cmd_eval(const std::vector<std::string>& argv, const std::string& instance_path,
             const std::string& schedule_text, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  Schedule schedule{[&] {
    try {
      return Schedule(parse_index_list(schedule_text));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Contract) throw Error::parse(e.what());
      throw;
    }
  }()};
  const EvaluationReport report = evaluate(instance, schedule);
  ordered_json result;
  result["command"] = "eval";
  result["lateness"] = report.max_lateness;
  result["schedule"] = schedule_json(schedule);
  result["starts"] = report.starts;
  result["completions"] = report.completions;
  result["delivered"] = report.delivered;
  ordered_json config;
  config["schedule"] = schedule_text;
  result["manifest"] = make_manifest("eval", argv, instance_path, config, 0);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_exact(const std::vector<std::string>& argv, const std::string& instance_path,
              std::size_t cap, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const ExactResult exact = exact_optimum(instance, cap);
  ordered_json result;
  result["command"] = "exact";
  result["optimum"] = exact.optimum;
  result["witness"] = schedule_json(exact.witness);
  result["explored"] = exact.explored;
  ordered_json config;
  config["exact_cap"] = cap;
  result["manifest"] = make_manifest("exact", argv, instance_path, config, 0);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_enum_ptas(const std::vector<std::string>& argv, const std::string& instance_path,
                  const std::string& eps_text, std::uint64_t cap,
                  const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const Epsilon eps = Epsilon::parse(eps_text);
  const PtasResult ptas = enum_ptas(instance, eps, cap);
  ordered_json result;
  result["command"] = "enum-ptas";
  result["lateness"] = ptas.best_lateness;
  result["schedule"] = schedule_json(ptas.best_schedule);
  result["phi"] = placement_to_json(ptas.best_placement);
  result["placements_total"] = ptas.placements_total;
  result["placements_valid"] = ptas.placements_valid;
  result["valid_lateness"] = ptas.best_valid_lateness;
  result["valid_schedule"] = schedule_json(ptas.best_valid_schedule);
  result["valid_phi"] = placement_to_json(ptas.best_valid_placement);
  ordered_json config;
  config["eps"] = eps.to_string();
  config["enum_cap"] = cap;
  result["manifest"] = make_manifest("enum-ptas", argv, instance_path, config, 0);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_ea(const std::vector<std::string>& argv, const std::string& instance_path,
           const EAFlags& flags, std::int64_t target, const std::string& trace_path,
           const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const EAConfig config = flags.to_config();
  std::optional<Time> success_target;
  if (target >= 0) success_target = target;

  std::ofstream trace_stream;
  TraceSink sink;
  if (!trace_path.empty()) {
    trace_stream.open(trace_path, std::ios::binary);
    if (!trace_stream) throw Error::parse("cannot write trace file: " + trace_path);
    trace_stream << kTraceCsvHeader << '\n';
    sink = [&trace_stream](const StepTrace& trace) { write_trace_row(trace_stream, trace); };
  }

  const RunResult run = run_ea(instance, config, success_target, sink);
  ordered_json result;
  result["command"] = "ea";
  result["schedule"] = schedule_json(run.best);
  result["lateness"] = run.best_lateness;
  result["steps"] = run.steps;
  if (run.first_success_step) result["first_success_step"] = *run.first_success_step;
  else result["first_success_step"] = nullptr;
  result["seed"] = run.seed;
  ordered_json config_echo = flags.echo();
  if (target >= 0) config_echo["target"] = target;
  result["config"] = config_echo;
  result["manifest"] = make_manifest("ea", argv, instance_path, config_echo, flags.seed);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_absorb(const std::vector<std::string>& argv, const std::string& instance_path,
               const std::string& eps_text, std::uint64_t runs, std::int64_t step_cap,
               std::uint64_t seed, const std::string& phi_text, const std::string& format,
               const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const Epsilon eps = Epsilon::parse(eps_text);
  std::optional<Placement> placement;
  if (!phi_text.empty()) placement = placement_from_json(nlohmann::json::parse(phi_text));
  std::optional<std::uint64_t> cap;
  if (step_cap >= 0) cap = static_cast<std::uint64_t>(step_cap);

  const AbsorptionStats stats = absorption_experiment(instance, eps, runs, cap, seed, placement);

  if (format == "csv") {
    std::string csv = "run,seed,outcome,steps\n";
    for (const AbsorptionRun& rec : stats.records)
      csv += std::to_string(rec.run) + "," + std::to_string(rec.seed) + "," +
             (rec.absorbed ? "absorbed" : "cap") + "," + std::to_string(rec.steps) + "\n";
    emit(csv, out_path);
    return 0;
  }

  ordered_json result;
  result["command"] = "absorb";
  ordered_json config;
  config["eps"] = eps.to_string();
  config["runs"] = runs;
  config["step_cap"] = stats.step_cap;
  config["seed"] = seed;
  result["config"] = config;
  result["placement"] = placement_to_json(stats.placement);
  result["absorbing_schedule"] = schedule_json(stats.absorbing_schedule);
  result["absorbed_within_cap"] = stats.absorbed_within_cap;
  result["mean_time"] = stats.mean_time;
  result["max_time"] = stats.max_time;
  auto records = ordered_json::array();
  for (const AbsorptionRun& rec : stats.records) {
    ordered_json row;
    row["run"] = rec.run;
    row["seed"] = rec.seed;
    row["outcome"] = rec.absorbed ? "absorbed" : "cap";
    row["steps"] = rec.steps;
    records.push_back(std::move(row));
  }
  result["records"] = std::move(records);
  result["manifest"] = make_manifest("absorb", argv, instance_path, config, seed);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_hit(const std::vector<std::string>& argv, const std::string& instance_path,
            const EAFlags& flags, std::uint64_t runs, const std::string& phi_text,
            const std::string& format, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const EAConfig config = flags.to_config();
  Placement target;
  if (!phi_text.empty()) {
    target = placement_from_json(nlohmann::json::parse(phi_text));
  } else {
    target = enum_ptas(instance, config.eps).best_placement;
  }
  const HittingResult hits = hitting_experiment(instance, config, runs, target);

  if (format == "csv") {
    std::string csv = "run,seed,outcome,steps\n";
    for (const HittingRun& rec : hits.records)
      csv += std::to_string(rec.run) + "," + std::to_string(rec.seed) + "," +
             (rec.hit ? "hit" : "miss") + "," +
             std::to_string(rec.hit ? rec.first_hit_step : hits.budget) + "\n";
    emit(csv, out_path);
    return 0;
  }

  ordered_json result;
  result["command"] = "hit";
  ordered_json config_echo = flags.echo();
  config_echo["runs"] = runs;
  result["config"] = config_echo;
  result["target_phi"] = placement_to_json(target);
  result["budget"] = hits.budget;
  result["hits_within_budget"] = hits.hits_within_budget;
  auto records = ordered_json::array();
  for (const HittingRun& rec : hits.records) {
    ordered_json row;
    row["run"] = rec.run;
    row["seed"] = rec.seed;
    row["hit"] = rec.hit;
    if (rec.hit) row["first_hit_step"] = rec.first_hit_step;
    else row["first_hit_step"] = nullptr;
    row["quiet_windows"] = rec.quiet_windows;
    records.push_back(std::move(row));
  }
  result["records"] = std::move(records);
  result["manifest"] = make_manifest("hit", argv, instance_path, config_echo, flags.seed);
  emit(result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_bench(const std::vector<std::string>& argv, const std::vector<std::string>& instances,
              const std::vector<std::string>& eps_list, std::uint64_t replicas,
              const EAFlags& flags, std::size_t exact_cap, const std::string& format,
              const std::string& out_path) {
  struct Replica {
    Time lateness = 0;
    bool success = false;
    std::optional<std::uint64_t> first_success;
    std::uint64_t seed = 0;
  };
  struct Row {
    std::string instance_path;
    std::string eps_text;
    std::size_t n = 0;
    Time optimum = 0;
    Time ptas_lateness = 0;
    std::uint64_t budget = 0;
    std::vector<Replica> replicas;
    std::uint64_t successes = 0;
  };

  std::vector<Row> rows;
  std::size_t row_index = 0;
  for (const std::string& path : instances) {
    const Instance instance = load_instance(path);
    const ExactResult exact = exact_optimum(instance, exact_cap);
    for (const std::string& eps_text : eps_list) {
      const Epsilon eps = Epsilon::parse(eps_text);
      Row row;
      row.instance_path = path;
      row.eps_text = eps.to_string();
      row.n = instance.size();
      row.optimum = exact.optimum;
      row.ptas_lateness = enum_ptas(instance, eps).best_lateness;

      EAConfig base = flags.to_config();
      base.eps = eps;
      row.budget = effective_budget(instance.size(), base);
      // success threshold L* + eps*P, floored to the integer lattice
      const Time target =
          exact.optimum + static_cast<Time>((static_cast<__int128>(eps.numerator()) *
                                             instance.total_processing()) /
                                            eps.denominator());

      row.replicas.resize(replicas);
      parallel_for(replicas, [&](std::size_t r) {
        EAConfig config = base;
        config.seed = flags.seed + row_index * replicas + r;
        const RunResult run = run_ea(instance, config, target);
        Replica& slot = row.replicas[r];
        slot.lateness = run.best_lateness;
        slot.first_success = run.first_success_step;
        slot.seed = config.seed;
        slot.success =
            check_eps_optimal(run.best_lateness, exact.optimum, eps, instance.total_processing());
      });
      for (const Replica& rep : row.replicas)
        if (rep.success) ++row.successes;
      rows.push_back(std::move(row));
      ++row_index;
    }
  }

  auto median_success_step = [](const Row& row) -> std::optional<double> {
    std::vector<std::uint64_t> steps;
    for (const Replica& rep : row.replicas)
      if (rep.first_success) steps.push_back(*rep.first_success);
    if (steps.empty()) return std::nullopt;
    std::sort(steps.begin(), steps.end());
    const std::size_t mid = steps.size() / 2;
    if (steps.size() % 2 == 1) return static_cast<double>(steps[mid]);
    return (static_cast<double>(steps[mid - 1]) + static_cast<double>(steps[mid])) / 2.0;
  };

  std::string csv = "instance,eps,replica,seed,lateness,success,first_success_step\n";
  for (const Row& row : rows) {
    for (std::size_t r = 0; r < row.replicas.size(); ++r) {
      const Replica& rep = row.replicas[r];
      csv += row.instance_path + "," + row.eps_text + "," + std::to_string(r) + "," +
             std::to_string(rep.seed) + "," + std::to_string(rep.lateness) + "," +
             (rep.success ? "1" : "0") + "," +
             (rep.first_success ? std::to_string(*rep.first_success) : "") + "\n";
    }
  }

  ordered_json result;
  result["command"] = "bench";
  ordered_json config_echo = flags.echo();
  config_echo["replicas"] = replicas;
  config_echo["exact_cap"] = exact_cap;
  config_echo["eps_list"] = eps_list;
  result["config"] = config_echo;
  auto table = ordered_json::array();
  for (const Row& row : rows) {
    ordered_json entry;
    entry["instance"] = row.instance_path;
    entry["eps"] = row.eps_text;
    entry["n"] = row.n;
    entry["optimum"] = row.optimum;
    entry["ptas_lateness"] = row.ptas_lateness;
    entry["budget"] = row.budget;
    entry["replicas"] = row.replicas.size();
    entry["successes"] = row.successes;
    entry["success_fraction"] =
        static_cast<double>(row.successes) / static_cast<double>(row.replicas.size());
    const auto median = median_success_step(row);
    if (median) entry["median_first_success_step"] = *median;
    else entry["median_first_success_step"] = nullptr;
    table.push_back(std::move(entry));
  }
  result["rows"] = std::move(table);
  auto replica_records = ordered_json::array();
  for (const Row& row : rows) {
    for (std::size_t r = 0; r < row.replicas.size(); ++r) {
      const Replica& rep = row.replicas[r];
      ordered_json record;
      record["instance"] = row.instance_path;
      record["eps"] = row.eps_text;
      record["replica"] = r;
      record["seed"] = rep.seed;
      record["lateness"] = rep.lateness;
      record["success"] = rep.success;
      if (rep.first_success) record["first_success_step"] = *rep.first_success;
      else record["first_success_step"] = nullptr;
      replica_records.push_back(std::move(record));
    }
  }
  result["replica_records"] = std::move(replica_records);
  result["manifest"] = make_manifest("bench", argv, ordered_json(instances), config_echo,
                                     flags.seed);

  // human-readable summary; goes to stderr when the payload uses stdout
  std::ostream& table_out = out_path.empty() ? std::cerr : std::cout;
  table_out << "instance eps n L* ptas_L budget successes/replicas median_success_step\n";
  for (const Row& row : rows) {
    const auto median = median_success_step(row);
    table_out << row.instance_path << " " << row.eps_text << " " << row.n << " " << row.optimum
              << " " << row.ptas_lateness << " " << row.budget << " " << row.successes << "/"
              << row.replicas.size() << " " << (median ? std::to_string(*median) : "-") << "\n";
  }

  emit(format == "csv" ? csv : result.dump(2) + "\n", out_path);
  return 0;
}

int cmd_replay(const std::string& manifest_path, const std::string& out_path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error::parse(std::string("invalid result file: ") + e.what());
  }
  if (!doc.contains("manifest") || !doc["manifest"].contains("argv"))
    throw Error::parse("result file carries no manifest.argv to replay");
  std::vector<std::string> argv;
  for (const auto& item : doc["manifest"]["argv"]) argv.push_back(item.get<std::string>());
  // strip the recorded output path so the replay never clobbers the original
  std::vector<std::string> cleaned;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--out" && i + 1 < argv.size()) {
      ++i;
      continue;
    }
    cleaned.push_back(argv[i]);
  }
  if (!out_path.empty()) {
    cleaned.push_back("--out");
    cleaned.push_back(out_path);
  }
  return dispatch(cleaned);
}

// ----------------------------------------------------------------- wiring

int dispatch(const std::vector<std::string>& argv) {
  CLI::App app{"single-machine max-lateness scheduling toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "sample a random instance file");
  GenSpec spec;
  std::string gen_out;
  gen->add_option("--n", spec.n, "number of jobs")->required();
  gen->add_option("--r-max", spec.release_max, "release range [0, r-max]");
  gen->add_option("--p-max", spec.processing_max, "processing range [1, p-max]");
  gen->add_option("--q-max", spec.delivery_max, "delivery range [0, q-max]");
  gen->add_flag("--generic", spec.enforce_generic, "force pairwise-distinct delivery times");
  bool no_fallback = false;
  gen->add_flag("--no-offset-fallback", no_fallback, "fail instead of offsetting duplicates");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--out", gen_out, "output instance path");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a schedule on an instance");
  std::string eval_instance, eval_schedule, eval_out;
  eval_cmd->add_option("--instance", eval_instance, "instance file")->required();
  eval_cmd->add_option("--schedule", eval_schedule, "comma-separated 1-based job order")
      ->required();
  eval_cmd->add_option("--out", eval_out, "output path");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "exact optimum by exhaustive search");
  std::string exact_instance, exact_out;
  std::size_t exact_cap = kDefaultExactCap;
  exact_cmd->add_option("--instance", exact_instance, "instance file")->required();
  exact_cmd->add_option("--exact-cap", exact_cap, "largest n the search accepts");
  exact_cmd->add_option("--out", exact_out, "output path");

  // enum-ptas
  auto* ptas_cmd = app.add_subcommand("enum-ptas", "best Jackson schedule over all placements");
  std::string ptas_instance, ptas_eps, ptas_out;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  ptas_cmd->add_option("--instance", ptas_instance, "instance file")->required();
  ptas_cmd->add_option("--eps", ptas_eps, "approximation parameter a/b")->required();
  ptas_cmd->add_option("--enum-cap", enum_cap, "largest placement count accepted");
  ptas_cmd->add_option("--out", ptas_out, "output path");

  // ea
  auto* ea_cmd = app.add_subcommand("ea", "run the hybrid mutation EA");
  std::string ea_instance, ea_trace, ea_out;
  std::int64_t ea_target = -1;
  EAFlags ea_flags;
  ea_cmd->add_option("--instance", ea_instance, "instance file")->required();
  ea_flags.add_to(ea_cmd);
  ea_cmd->add_option("--target", ea_target, "lateness target for first_success_step");
  ea_cmd->add_option("--trace", ea_trace, "per-step CSV trace path");
  ea_cmd->add_option("--out", ea_out, "output path");

  // absorb
  auto* absorb_cmd = app.add_subcommand("absorb", "local-only absorption experiment");
  std::string ab_instance, ab_eps, ab_phi, ab_format = "object", ab_out;
  std::uint64_t ab_runs = 200, ab_seed = 0;
  std::int64_t ab_cap = -1;
  absorb_cmd->add_option("--instance", ab_instance, "instance file")->required();
  absorb_cmd->add_option("--eps", ab_eps, "approximation parameter a/b")->required();
  absorb_cmd->add_option("--runs", ab_runs, "independent runs");
  absorb_cmd->add_option("--step-cap", ab_cap, "per-run step cap (default n^4)");
  absorb_cmd->add_option("--seed", ab_seed, "master seed; run r uses seed+r");
  absorb_cmd->add_option("--phi", ab_phi, "placement JSON [[pos,job],...]");
  absorb_cmd->add_option("--format", ab_format, "object or csv")
      ->check(CLI::IsMember({"object", "csv"}));
  absorb_cmd->add_option("--out", ab_out, "output path");

  // hit
  auto* hit_cmd = app.add_subcommand("hit", "placement hitting-time experiment");
  std::string hit_instance, hit_phi, hit_format = "object", hit_out;
  std::uint64_t hit_runs = 50;
  EAFlags hit_flags;
  hit_cmd->add_option("--instance", hit_instance, "instance file")->required();
  hit_flags.add_to(hit_cmd);
  hit_cmd->add_option("--runs", hit_runs, "independent runs");
  hit_cmd->add_option("--phi", hit_phi, "target placement JSON (default: enum-ptas best)");
  hit_cmd->add_option("--format", hit_format, "object or csv")
      ->check(CLI::IsMember({"object", "csv"}));
  hit_cmd->add_option("--out", hit_out, "output path");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "replicated EA runs against the exact oracle");
  std::vector<std::string> bench_instances, bench_eps;
  std::string bench_format = "object", bench_out;
  std::uint64_t bench_replicas = 100;
  std::size_t bench_exact_cap = kDefaultExactCap;
  EAFlags bench_flags;
  bench_cmd->add_option("--instance", bench_instances, "instance file (repeatable)")
      ->required();
  bench_flags.add_to(bench_cmd, /*with_init=*/false);
  bench_cmd->get_option("--eps")->required(false);
  bench_cmd->add_option("--eps-list", bench_eps, "approximation parameters (repeatable)");
  bench_cmd->add_option("--replicas", bench_replicas, "EA runs per (instance, eps)");
  bench_cmd->add_option("--exact-cap", bench_exact_cap, "largest n the exact oracle accepts");
  bench_cmd->add_option("--format", bench_format, "object or csv")
      ->check(CLI::IsMember({"object", "csv"}));
  bench_cmd->add_option("--out", bench_out, "output path");

  // replay
  auto* replay_cmd = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  std::string replay_file, replay_out;
  replay_cmd->add_option("file", replay_file, "result file with a manifest")->required();
  replay_cmd->add_option("--out", replay_out, "output path for the replayed run");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      spec.allow_offset_fallback = !no_fallback;
      return cmd_gen(argv, spec, gen_out);
    }
    if (*eval_cmd) return cmd_eval(argv, eval_instance, eval_schedule, eval_out);
    if (*exact_cmd) return cmd_exact(argv, exact_instance, exact_cap, exact_out);
    if (*ptas_cmd) return cmd_enum_ptas(argv, ptas_instance, ptas_eps, enum_cap, ptas_out);
    if (*ea_cmd) return cmd_ea(argv, ea_instance, ea_flags, ea_target, ea_trace, ea_out);
    if (*absorb_cmd)
      return cmd_absorb(argv, ab_instance, ab_eps, ab_runs, ab_cap, ab_seed, ab_phi, ab_format,
                        ab_out);
    if (*hit_cmd)
      return cmd_hit(argv, hit_instance, hit_flags, hit_runs, hit_phi, hit_format, hit_out);
    if (*bench_cmd) {
      std::vector<std::string> eps_list = bench_eps;
      if (!bench_flags.eps_text.empty()) eps_list.insert(eps_list.begin(), bench_flags.eps_text);
      if (eps_list.empty()) throw Error::parse("bench needs --eps or --eps-list");
      if (bench_flags.eps_text.empty()) bench_flags.eps_text = eps_list.front();
      return cmd_bench(argv, bench_instances, eps_list, bench_replicas, bench_flags,
                       bench_exact_cap, bench_format, bench_out);
    }
    if (*replay_cmd) return cmd_replay(replay_file, replay_out);
  } catch (const Error& e) {
    nlohmann::ordered_json err;
    err["error"] = e.code();
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return e.exit_status();
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"Internal\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args);
}
