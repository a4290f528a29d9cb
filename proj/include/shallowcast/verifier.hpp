#pragma once

#include "shallowcast/planner.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace shallowcast {

enum class CheckKind {
  valid_partition,
  uplink_capacity,
  downlink_capacity,
  tree_height,
  trace_lemma2,
  trace_prop1,
  trace_prop2,
  throughput,
};

std::string_view check_name(CheckKind kind);

/// Where a check failed and the exact values that broke it.
struct CheckFailure {
  std::string locus;     // e.g. "site 2", "iteration 1", "tree 3"
  std::string relation;  // the relation that should have held, e.g. "<=" or "=="
  Rate lhs;
  Rate rhs;

  std::string to_string() const;
};

struct CheckResult {
  CheckKind kind;
  bool passed = true;
  std::vector<CheckFailure> failures;

  std::string_view name() const { return check_name(kind); }
};

struct VerificationReport {
  bool passed = true;
  std::vector<CheckResult> checks;

  const CheckResult& check(CheckKind kind) const;
};

/**
 * Re-derives feasibility of a plan without trusting the planner.
 *
 * Capacity, delivery and throughput checks are recomputed from the tree
 * list only; the matrix is read just for the partition and trace checks,
 * so a mismatch between matrix and trees is caught. Failures are reported,
 * never thrown.
 */
VerificationReport verify_plan(const TransmissionPlan& plan);

/// Largest network the exhaustive search accepts.
inline constexpr std::size_t kBruteForceMaxSites = 4;

/**
 * Exhaustive existence check: is there a sub-stream matrix with entries in
 * steps of 1/granularity, rows summing to the stream rates, whose two-level
 * trees respect every uplink and downlink capacity?
 *
 * Throws std::invalid_argument when n > kBruteForceMaxSites, granularity is
 * zero, or a stream rate is not a multiple of 1/granularity. The search is
 * split across OpenMP threads over the first row's choices.
 */
bool brute_force_feasibility(const NetworkSpec& spec, unsigned granularity);

/// Single-threaded reference for brute_force_feasibility.
bool brute_force_feasibility_serial(const NetworkSpec& spec, unsigned granularity);

}  // namespace shallowcast
