#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lmax/model.hpp"

namespace lmax {

// Job indices split by the processing-time threshold delta = eps * P.
struct DeltaPartition {
  std::vector<JobIndex> short_jobs;  // ascending, processing < delta
  std::vector<JobIndex> long_jobs;   // ascending, processing >= delta
};

DeltaPartition classify(const Instance& instance, const Epsilon& eps);

// Pins each long job to one schedule position: jobs()[k] sits at
// positions()[k]. Positions are strictly increasing.
class Placement {
 public:
  Placement() = default;
  Placement(std::vector<Position> positions, std::vector<JobIndex> jobs);

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  const std::vector<Position>& positions() const { return positions_; }
  const std::vector<JobIndex>& jobs() const { return jobs_; }

  // Job pinned at the given position, if any.
  std::optional<JobIndex> job_at(Position position) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<Position> positions_;
  std::vector<JobIndex> jobs_;
};

// The unique placement a schedule belongs to: where its long jobs sit.
Placement extract_placement(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule);

enum class PrefixViolationKind {
  WrongLongJob,   // a pinned position holds a different job
  ReleaseOrder,   // idle-gap position followed by an earlier release
  ReleaseTie,     // idle-gap position loses a release tie on delivery priority
  DeliveryOrder,  // busy position followed by a released higher-priority job
};

struct PrefixViolation {
  Position position;
  PrefixViolationKind kind;
};

const char* to_string(PrefixViolationKind kind);

// Longest prefix that follows the placement-pinned extended Jackson order.
struct PrefixReport {
  std::size_t prefix_length = 0;              // maximal k, 0..n
  std::optional<PrefixViolation> violation;   // absent iff prefix_length == n
};

// Checks against the schedule's own extracted placement.
PrefixReport jackson_prefix(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule);
// Checks against an explicitly supplied placement.
PrefixReport jackson_prefix(const Instance& instance, const Epsilon& eps,
                            const Schedule& schedule, const Placement& placement);

struct JacksonBuild {
  Schedule schedule;
  bool valid;  // true when the built schedule has full prefix length n
};

// Deterministic left-to-right construction: pinned positions take their long
// job; every other position takes the released short job with the highest
// delivery priority, or the earliest-released short job when none is ready.
// Some placements admit no full-prefix schedule, hence the validity flag.
JacksonBuild build_jackson(const Instance& instance, const Epsilon& eps,
                           const Placement& placement);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Streams every placement of the long jobs in a fixed order: position sets in
// lexicographic order, then assignment images in lexicographic order. The
// total count is the falling factorial n * (n-1) * ... over |long_jobs| terms.
class PlacementEnumerator {
 public:
  PlacementEnumerator(const Instance& instance, const Epsilon& eps,
                      std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t total_count() const { return count_; }
  const std::vector<JobIndex>& long_jobs() const { return long_jobs_; }

  std::optional<Placement> next();
  void reset();

 private:
  bool advance_positions();

  std::size_t n_ = 0;
  std::vector<JobIndex> long_jobs_;
  std::vector<Position> positions_;
  std::vector<JobIndex> image_;
  bool exhausted_ = false;
  std::uint64_t count_ = 0;
};

}  // namespace lmax
