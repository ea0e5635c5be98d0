#include "lmax/jackson.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lmax {

DeltaPartition classify(const Instance& instance, const Epsilon& eps) {
  DeltaPartition part;
  for (JobIndex j = 1; j <= instance.size(); ++j) {
    (is_long(instance, eps, j) ? part.long_jobs : part.short_jobs).push_back(j);
  }
  // |long_jobs| * delta <= P, i.e. |long_jobs| * a <= b after cancelling P
  assert(static_cast<unsigned __int128>(part.long_jobs.size()) * eps.numerator() <=
         eps.denominator());
  return part;
}

Placement::Placement(std::vector<Position> positions, std::vector<JobIndex> jobs)
    : positions_(std::move(positions)), jobs_(std::move(jobs)) {
  if (positions_.size() != jobs_.size())
    throw Error::contract("placement positions and jobs differ in length");
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] < 1) throw Error::contract("placement positions are 1-based");
    if (k > 0 && positions_[k] <= positions_[k - 1])
      throw Error::contract("placement positions must be strictly increasing");
  }
  std::vector<JobIndex> sorted = jobs_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error::contract("placement assigns a job twice");
}

std::optional<JobIndex> Placement::job_at(Position position) const {
  const auto it = std::lower_bound(positions_.begin(), positions_.end(), position);
  if (it == positions_.end() || *it != position) return std::nullopt;
  return jobs_[static_cast<std::size_t>(it - positions_.begin())];
}

Placement extract_placement(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule) {
  std::vector<Position> positions;
  std::vector<JobIndex> jobs;
  for (Position i = 1; i <= schedule.size(); ++i) {
    const JobIndex job = schedule.at(i);
    if (is_long(instance, eps, job)) {
      positions.push_back(i);
      jobs.push_back(job);
    }
  }
  return Placement(std::move(positions), std::move(jobs));
}

const char* to_string(PrefixViolationKind kind) {
  switch (kind) {
    case PrefixViolationKind::WrongLongJob: return "wrong_long_job";
    case PrefixViolationKind::ReleaseOrder: return "release_order";
    case PrefixViolationKind::ReleaseTie: return "release_tie";
    case PrefixViolationKind::DeliveryOrder: return "delivery_order";
  }
  return "unknown";
}

namespace {

// Single left-to-right scan. A position passes when it is a pinned position
// holding its assigned job, or a free position whose job beats everything
// scheduled after it: on an idle gap the job must have the earliest release
// (delivery priority breaking ties); with no gap every later job released by
// the start time must have lower delivery priority.
PrefixReport prefix_scan(const Instance& instance, const Epsilon& eps,
                         const Schedule& schedule, const Placement* placement) {
  const std::size_t n = instance.size();
  if (schedule.size() != n)
    throw Error::contract("schedule length does not match instance size");

  std::vector<Time> free_before(n + 1, 0);
  std::vector<Time> start(n + 1, 0);
  Time machine_free = 0;
  for (Position i = 1; i <= n; ++i) {
    const Job& job = instance.job(schedule.at(i));
    free_before[i] = machine_free;
    start[i] = std::max(machine_free, job.release);
    machine_free = start[i] + job.processing;
  }

  for (Position j = 1; j <= n; ++j) {
    const JobIndex here = schedule.at(j);
    if (placement != nullptr) {
      if (const auto pinned = placement->job_at(j)) {
        if (*pinned != here)
          return {j - 1, PrefixViolation{j, PrefixViolationKind::WrongLongJob}};
        continue;
      }
    } else if (is_long(instance, eps, here)) {
      continue;  // a long job always matches its own extracted slot
    }
    const Job& job = instance.job(here);
    if (free_before[j] < job.release) {
      for (Position l = j + 1; l <= n; ++l) {
        const JobIndex later = schedule.at(l);
        const Time later_release = instance.job(later).release;
        if (later_release < job.release)
          return {j - 1, PrefixViolation{j, PrefixViolationKind::ReleaseOrder}};
        if (later_release == job.release && delivery_precedes(instance, later, here))
          return {j - 1, PrefixViolation{j, PrefixViolationKind::ReleaseTie}};
      }
    } else {
      for (Position l = j + 1; l <= n; ++l) {
        const JobIndex later = schedule.at(l);
        if (instance.job(later).release <= start[j] && delivery_precedes(instance, later, here))
          return {j - 1, PrefixViolation{j, PrefixViolationKind::DeliveryOrder}};
      }
    }
  }
  return {n, std::nullopt};
}

}  // namespace

PrefixReport jackson_prefix(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule) {
  return prefix_scan(instance, eps, schedule, nullptr);
}

PrefixReport jackson_prefix(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule, const Placement& placement) {
  return prefix_scan(instance, eps, schedule, &placement);
}

namespace {

JobIndex pick_short(const Instance& instance, const std::vector<JobIndex>& pending,
                    Time machine_free) {
  JobIndex released = 0;
  for (JobIndex j : pending) {
    if (instance.job(j).release <= machine_free &&
        (released == 0 || delivery_precedes(instance, j, released)))
      released = j;
  }
  if (released != 0) return released;
  JobIndex earliest = 0;
  for (JobIndex j : pending) {
    if (earliest == 0) {
      earliest = j;
      continue;
    }
    const Time rj = instance.job(j).release;
    const Time re = instance.job(earliest).release;
    if (rj < re || (rj == re && delivery_precedes(instance, j, earliest))) earliest = j;
  }
  return earliest;
}

}  // namespace

JacksonBuild build_jackson(const Instance& instance, const Epsilon& eps,
                           const Placement& placement) {
  const std::size_t n = instance.size();
  const DeltaPartition part = classify(instance, eps);
  if (placement.size() != part.long_jobs.size())
    throw Error::contract("placement does not cover the long jobs");
  std::vector<JobIndex> assigned = placement.jobs();
  std::sort(assigned.begin(), assigned.end());
  if (assigned != part.long_jobs)
    throw Error::contract("placement assigns jobs that are not exactly the long jobs");
  if (!placement.empty() && placement.positions().back() > n)
    throw Error::contract("placement position beyond the schedule length");

  std::vector<JobIndex> order(n, 0);
  for (std::size_t k = 0; k < placement.size(); ++k)
    order[placement.positions()[k] - 1] = placement.jobs()[k];

  std::vector<JobIndex> pending = part.short_jobs;
  Time machine_free = 0;
  for (Position i = 1; i <= n; ++i) {
    JobIndex pick = order[i - 1];
    if (pick == 0) {
      pick = pick_short(instance, pending, machine_free);
      pending.erase(std::find(pending.begin(), pending.end(), pick));
      order[i - 1] = pick;
    }
    const Job& job = instance.job(pick);
    machine_free = std::max(machine_free, job.release) + job.processing;
  }

  Schedule schedule(std::move(order));
  const bool valid = jackson_prefix(instance, eps, schedule).prefix_length == n;
  return {std::move(schedule), valid};
}

PlacementEnumerator::PlacementEnumerator(const Instance& instance, const Epsilon& eps,
                                         std::uint64_t cap)
    : n_(instance.size()), long_jobs_(classify(instance, eps).long_jobs) {
  using u128 = unsigned __int128;
  u128 count = 1;
  for (std::size_t i = 0; i < long_jobs_.size(); ++i) count *= (n_ - i);
  if (count > cap)
    throw Error::capacity("EnumerationTooLarge",
                          "placement count exceeds the cap of " + std::to_string(cap) +
                              "; reduce n or raise eps");
  count_ = static_cast<std::uint64_t>(count);

  // count <= n^(ceil(1/eps)); saturating power keeps the comparison exact
  const std::uint64_t exponent =
      (eps.denominator() + eps.numerator() - 1) / eps.numerator();
  u128 bound = 1;
  bool saturated = false;
  for (std::uint64_t e = 0; e < exponent && !saturated; ++e) {
    const u128 next = bound * n_;
    if (n_ != 0 && next / n_ != bound) saturated = true;
    else bound = next;
  }
  if (!saturated && count > bound)
    throw std::logic_error("placement count exceeds its theoretical bound");

  reset();
}

void PlacementEnumerator::reset() {
  positions_.resize(long_jobs_.size());
  for (std::size_t k = 0; k < positions_.size(); ++k)
    positions_[k] = static_cast<Position>(k + 1);
  image_ = long_jobs_;
  exhausted_ = long_jobs_.size() > n_;
}

bool PlacementEnumerator::advance_positions() {
  const std::size_t b = positions_.size();
  for (std::size_t k = b; k-- > 0;) {
    if (positions_[k] < n_ - (b - 1 - k)) {
      ++positions_[k];
      for (std::size_t m = k + 1; m < b; ++m) positions_[m] = positions_[m - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Placement> PlacementEnumerator::next() {
  if (exhausted_) return std::nullopt;
  Placement result(positions_, image_);
  if (long_jobs_.empty()) {
    exhausted_ = true;
    return result;
  }
  if (!std::next_permutation(image_.begin(), image_.end())) {
    image_ = long_jobs_;
    if (!advance_positions()) exhausted_ = true;
  }
  return result;
}

}  // namespace lmax
