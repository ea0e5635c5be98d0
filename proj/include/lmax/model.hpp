#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmax/errors.hpp"

namespace lmax {

using Time = std::int64_t;
using JobIndex = std::uint32_t;  // 1-based job identifier
using Position = std::uint32_t;  // 1-based schedule position

// Input caps. Together with the job-count cap they keep every lateness value
// representable in signed 64-bit arithmetic.
inline constexpr Time kMaxTimeValue = 1'000'000'000;
inline constexpr std::size_t kMaxJobs = 1'000'000;

// A job is released, occupies the machine without interruption, and is then
// delivered. Deliveries overlap freely, so only the delivery lag matters.
struct Job {
  Time release = 0;
  Time processing = 1;
  Time delivery = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

// Immutable 1-indexed job list with the cached processing-time sum.
class Instance {
 public:
  explicit Instance(std::vector<Job> jobs);

  std::size_t size() const { return jobs_.size(); }
  const Job& job(JobIndex index) const { return jobs_[index - 1]; }
  const std::vector<Job>& jobs() const { return jobs_; }
  Time total_processing() const { return total_processing_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Job> jobs_;
  Time total_processing_ = 0;
};

// A processing order: at(i) is the job index placed at position i.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<JobIndex> order);  // must be a permutation of 1..n
  static Schedule identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  JobIndex at(Position position) const { return order_[position - 1]; }
  const std::vector<JobIndex>& order() const { return order_; }

  // Transposition of two positions; keeps the permutation invariant intact.
  void swap_positions(Position i, Position j);

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<JobIndex> order_;
};

inline constexpr std::uint64_t kMaxEpsilonComponent = 1'000'000'000;

// Exact rational approximation parameter a/b, gcd-reduced on construction.
// Every comparison against the derived threshold delta = (a/b) * P is done by
// cross-multiplication, so delta itself is never rounded or materialized.
class Epsilon {
 public:
  Epsilon(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

  // Accepts "a/b" or a bare integer "a". Decimal notation is rejected.
  static Epsilon parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

// Per-position timing of a schedule plus the maximum delivered time.
struct EvaluationReport {
  std::vector<Time> starts;       // starts[i-1] = start time at position i
  std::vector<Time> completions;  // start + processing
  std::vector<Time> delivered;    // completion + delivery
  Time max_lateness = 0;
};

// How the machine-free time before a position compares with the release of
// the job placed there.
enum class StartCondition {
  MachineWaits,  // machine idles until the job is released
  JobWaits,      // job was already released while the machine was busy
  Exact,         // release coincides with the machine becoming free
};

// Start-time recursion and objective. Position 1 starts at max(0, release);
// afterwards each job starts when both it and the machine are available.
EvaluationReport evaluate(const Instance& instance, const Schedule& schedule);

// The objective only; allocation-free variant of evaluate().
Time max_lateness(const Instance& instance, const Schedule& schedule);

StartCondition start_condition(const Instance& instance, const Schedule& schedule,
                               Position position);

// True when all delivery times are pairwise distinct.
bool is_generic(const Instance& instance);

// Strict total order "a has higher delivery priority than b": larger delivery
// time first, smaller index on ties. Every delivery comparison in the library
// goes through this order, so instances with duplicate delivery times behave
// exactly like generic ones.
bool delivery_precedes(const Instance& instance, JobIndex a, JobIndex b);

// Exact integer form of processing(job) >= (a/b) * total_processing.
bool is_long(const Instance& instance, const Epsilon& eps, JobIndex job);

}  // namespace lmax
