#pragma once

#include "shallowcast/model.hpp"
#include "shallowcast/sustainability.hpp"

#include <stdexcept>
#include <vector>

namespace shallowcast {

/**
 * Per-iteration state of the greedy rate assignment.
 *
 * Residual uplink of a site is its uplink minus its own stream rate; the
 * stream rate itself stays reserved for the site's single copy of each of
 * its sub-streams.
 */
struct AlgorithmTrace {
  std::vector<Rate> u_initial;
  /// u_snapshots[a] is the residual vector at the start of outer iteration a
  /// (0-based); the last entry is the state after the final iteration.
  std::vector<std::vector<Rate>> u_snapshots;
  /// r_prime_history[i] lists the unassigned remainder of stream i after each inner step.
  std::vector<std::vector<Rate>> r_prime_history;

  friend bool operator==(const AlgorithmTrace&, const AlgorithmTrace&) = default;
};

struct Assignment {
  SubstreamMatrix matrix;
  AlgorithmTrace trace;
};

struct TransmissionPlan {
  NetworkSpec spec;
  SubstreamMatrix matrix;
  std::vector<OverlayTree> trees;
  std::vector<Rate> uplink_usage;
  std::vector<Rate> downlink_usage;
  AlgorithmTrace trace;

  bool empty() const { return trees.empty(); }
};

/// Thrown when planning is requested for rates the network cannot sustain.
class UnsustainableError : public std::runtime_error {
 public:
  explicit UnsustainableError(SustainabilityReport report);
  const SustainabilityReport& report() const { return report_; }

 private:
  SustainabilityReport report_;
};

/// Relay fan-out multiplier: a relay forwards to n - 2 peers. Zero for n < 3.
std::uint64_t relay_fanout(std::size_t n);

/**
 * Greedy sub-stream rate assignment.
 *
 * Sites are visited in index order. For stream i and candidate relay j, as
 * much of stream i as site j's residual uplink can fan out is routed
 * through j; stream i stops once fully assigned. The diagonal entry (i, i)
 * is broadcast directly by the source.
 *
 * Throws UnsustainableError unless is_sustainable(spec) holds.
 */
Assignment assign_substream_rates(const NetworkSpec& spec);

/// One tree per positive entry, in row-major order. With n == 2 relay trees
/// have no leaves and are emitted as direct trees; with n == 1 there are no
/// receivers and no trees.
std::vector<OverlayTree> build_overlay_trees(const SubstreamMatrix& matrix);

/// Uplink each site spends under the two-level tree layout for `matrix`.
std::vector<Rate> uplink_usage(const SubstreamMatrix& matrix);
/// Downlink each site spends receiving every peer stream once.
std::vector<Rate> downlink_usage(const NetworkSpec& spec);

/// Full pipeline: assignment, trees and usage. Throws UnsustainableError.
TransmissionPlan plan(const NetworkSpec& spec);

}  // namespace shallowcast
