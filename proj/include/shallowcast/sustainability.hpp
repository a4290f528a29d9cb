#pragma once

#include "shallowcast/model.hpp"

#include <optional>
#include <vector>

namespace shallowcast {

/// One breached sustainability condition. lhs > rhs always holds.
struct Violation {
  /// 1: own stream exceeds uplink, 2: peers' streams exceed downlink,
  /// 3: total fan-out demand exceeds total uplink.
  int condition = 0;
  std::optional<SiteId> site;  // absent for condition 3
  Rate lhs;
  Rate rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SustainabilityReport {
  bool sustainable = true;
  std::vector<Violation> violations;
  /// Both sides of the aggregate condition, kept so callers can spot a tight bound.
  Rate aggregate_demand;
  Rate aggregate_uplink;
};

/// Checks every condition for every site and reports all breaches, not just the first.
/// A single-site network has no receivers and is always sustainable.
SustainabilityReport is_sustainable(const NetworkSpec& spec);

/// Largest theta such that theta * rates is sustainable. Unbounded when no
/// stream has a positive rate (or n == 1).
Bound max_sustainable_scale(const NetworkSpec& spec);

/// Copy of `spec` with every stream rate multiplied by `factor`.
NetworkSpec scale_rates(const NetworkSpec& spec, const Rate& factor);

}  // namespace shallowcast
