#pragma once

#include "shallowcast/planner.hpp"

#include <stdexcept>
#include <vector>

namespace shallowcast {

struct SimConfig {
  /// At least 2: a relayed batch needs two rounds to reach its leaves.
  std::size_t rounds = 10;
  /// Length of one round; a source emits rate * batch_unit per tree per round.
  Rate batch_unit = Rate(1);
};

/// Throws std::invalid_argument on rounds < 2 or a zero batch unit.
void validate_config(const SimConfig& config);

struct SimMetrics {
  std::size_t rounds = 0;
  Rate batch_unit;
  /// [round][site] volume sent / received in that round (round index 0 is round 1).
  std::vector<std::vector<Rate>> per_round_uplink;
  std::vector<std::vector<Rate>> per_round_downlink;
  int max_delivery_hops = 0;
  /// [source][destination] share of the source's injected volume that reached
  /// the destination by the horizon. 1 on the diagonal and for idle sources.
  std::vector<std::vector<Rate>> delivered_fraction;
  /// [source][destination] round in which the first batch fully arrived; 0 when nothing is sent.
  std::vector<std::vector<std::size_t>> first_batch_round;
  /// Volume delivered per unit time in the last round (steady state).
  Rate aggregate_goodput;
  /// Volume received by all sites over the horizon.
  Rate total_received;

  friend bool operator==(const SimMetrics&, const SimMetrics&) = default;
};

/// A round in which a site sent or received more than its capacity allows.
class CapacityExceeded : public std::runtime_error {
 public:
  CapacityExceeded(std::size_t round, SiteId site, bool uplink, Rate used, Rate capacity);

  std::size_t round() const { return round_; }
  SiteId site() const { return site_; }
  bool uplink() const { return uplink_; }
  const Rate& used() const { return used_; }
  const Rate& capacity() const { return capacity_; }
  Rate overage() const { return used_ - capacity_; }

 private:
  std::size_t round_;
  SiteId site_;
  bool uplink_;
  Rate used_;
  Rate capacity_;
};

/**
 * Round-based fluid execution of a plan.
 *
 * Every round each tree's source injects one batch. The first hop (to the
 * relay, or to every leaf of a direct tree) completes in the injection
 * round; the relay forwards to its leaves in the next round. Per-site
 * accounting is spread over OpenMP threads, one site per iteration.
 *
 * Throws CapacityExceeded on the first (round, site) over capacity, uplink
 * before downlink, lowest site first.
 */
SimMetrics simulate(const TransmissionPlan& plan, const SimConfig& config);

/// Event-driven single-threaded reference; produces identical metrics.
SimMetrics simulate_serial(const TransmissionPlan& plan, const SimConfig& config);

/// Steady-state aggregate goodput per unit time; 0 when n <= 1.
Rate compare_aggregate_throughput(const SimMetrics& metrics, const NetworkSpec& spec);

}  // namespace shallowcast
