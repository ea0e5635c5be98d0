#include "lmax/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lmax {

Instance::Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {
  if (jobs_.empty()) throw Error::contract("an instance needs at least one job");
  if (jobs_.size() > kMaxJobs)
    throw Error::contract("instance exceeds the job-count cap of " + std::to_string(kMaxJobs));
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const Job& j = jobs_[i];
    const std::string where = " (job " + std::to_string(i + 1) + ")";
    if (j.processing < 1) throw Error::contract("processing time must be at least 1" + where);
    if (j.release < 0 || j.delivery < 0) throw Error::contract("negative time value" + where);
    if (j.release > kMaxTimeValue || j.processing > kMaxTimeValue || j.delivery > kMaxTimeValue)
      throw Error::contract("time value above the cap of " + std::to_string(kMaxTimeValue) + where);
    total_processing_ += j.processing;
  }
}

Schedule::Schedule(std::vector<JobIndex> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (JobIndex j : order_) {
    if (j < 1 || j > order_.size() || seen[j - 1])
      throw Error::contract("schedule is not a permutation of 1.." + std::to_string(order_.size()));
    seen[j - 1] = true;
  }
}

Schedule Schedule::identity(std::size_t n) {
  Schedule s;
  s.order_.resize(n);
  std::iota(s.order_.begin(), s.order_.end(), JobIndex{1});
  return s;
}

void Schedule::swap_positions(Position i, Position j) {
  std::swap(order_[i - 1], order_[j - 1]);
}

Epsilon::Epsilon(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (num_ == 0 || den_ == 0) throw Error::contract("epsilon components must be positive");
  if (num_ > kMaxEpsilonComponent || den_ > kMaxEpsilonComponent)
    throw Error::contract("epsilon components above the cap of " +
                          std::to_string(kMaxEpsilonComponent));
  const std::uint64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

namespace {

std::uint64_t parse_component(const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw Error::parse("epsilon must be a positive rational \"a/b\" or integer, got \"" + text +
                       "\"");
  return value;
}

}  // namespace

Epsilon Epsilon::parse(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw Error::parse("decimal epsilon is rejected; pass an exact rational like 1/3");
  const auto slash = text.find('/');
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  if (slash == std::string::npos) {
    num = parse_component(text);
  } else {
    num = parse_component(text.substr(0, slash));
    den = parse_component(text.substr(slash + 1));
  }
  if (num == 0 || den == 0) throw Error::parse("epsilon must be positive");
  if (num > kMaxEpsilonComponent || den > kMaxEpsilonComponent)
    throw Error::parse("epsilon components above the cap of " +
                       std::to_string(kMaxEpsilonComponent));
  return Epsilon(num, den);
}

std::string Epsilon::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

void check_lengths(const Instance& instance, const Schedule& schedule) {
  if (instance.size() != schedule.size())
    throw Error::contract("schedule length " + std::to_string(schedule.size()) +
                          " does not match instance size " + std::to_string(instance.size()));
}

}  // namespace

EvaluationReport evaluate(const Instance& instance, const Schedule& schedule) {
  check_lengths(instance, schedule);
  const std::size_t n = instance.size();
  EvaluationReport report;
  report.starts.resize(n);
  report.completions.resize(n);
  report.delivered.resize(n);
  Time machine_free = 0;
  Time worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Job& job = instance.job(schedule.order()[i]);
    const Time start = std::max(machine_free, job.release);
    report.starts[i] = start;
    report.completions[i] = start + job.processing;
    report.delivered[i] = report.completions[i] + job.delivery;
    worst = std::max(worst, report.delivered[i]);
    machine_free = report.completions[i];
  }
  report.max_lateness = worst;
  return report;
}

Time max_lateness(const Instance& instance, const Schedule& schedule) {
  check_lengths(instance, schedule);
  Time machine_free = 0;
  Time worst = 0;
  for (JobIndex index : schedule.order()) {
    const Job& job = instance.job(index);
    const Time done = std::max(machine_free, job.release) + job.processing;
    worst = std::max(worst, done + job.delivery);
    machine_free = done;
  }
  return worst;
}

StartCondition start_condition(const Instance& instance, const Schedule& schedule,
                               Position position) {
  check_lengths(instance, schedule);
  if (position < 1 || position > instance.size())
    throw Error::contract("position " + std::to_string(position) + " out of range");
  Time machine_free = 0;
  for (Position i = 1; i < position; ++i) {
    const Job& job = instance.job(schedule.at(i));
    machine_free = std::max(machine_free, job.release) + job.processing;
  }
  const Time release = instance.job(schedule.at(position)).release;
  if (machine_free < release) return StartCondition::MachineWaits;
  if (machine_free > release) return StartCondition::JobWaits;
  return StartCondition::Exact;
}

bool is_generic(const Instance& instance) {
  std::vector<Time> deliveries;
  deliveries.reserve(instance.size());
  for (const Job& job : instance.jobs()) deliveries.push_back(job.delivery);
  std::sort(deliveries.begin(), deliveries.end());
  return std::adjacent_find(deliveries.begin(), deliveries.end()) == deliveries.end();
}

bool delivery_precedes(const Instance& instance, JobIndex a, JobIndex b) {
  const Time qa = instance.job(a).delivery;
  const Time qb = instance.job(b).delivery;
  return qa > qb || (qa == qb && a < b);
}

bool is_long(const Instance& instance, const Epsilon& eps, JobIndex job) {
  using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(eps.denominator()) *
                   static_cast<u128>(instance.job(job).processing);
  const u128 rhs = static_cast<u128>(eps.numerator()) *
                   static_cast<u128>(instance.total_processing());
  return lhs >= rhs;
}

}  // namespace lmax
