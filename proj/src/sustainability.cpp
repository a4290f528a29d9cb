#include "shallowcast/sustainability.hpp"

namespace shallowcast {

namespace {

Rate total(const std::vector<Rate>& values) {
  Rate sum;
  for (const auto& v : values) sum += v;
  return sum;
}

}  // namespace

SustainabilityReport is_sustainable(const NetworkSpec& spec) {
  SustainabilityReport report;
  const std::size_t n = spec.size();
  const Rate total_rate = total(spec.rates);
  report.aggregate_demand = total_rate * (n - 1);
  report.aggregate_uplink = total(spec.uplink);
  if (n <= 1) return report;

  for (std::size_t i = 0; i < n; ++i) {
    if (spec.rates[i] > spec.uplink[i]) report.violations.push_back({1, SiteId{i}, spec.rates[i], spec.uplink[i]});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rate incoming = total_rate - spec.rates[i];
    if (!spec.downlink[i].admits(incoming)) {
      report.violations.push_back({2, SiteId{i}, incoming, spec.downlink[i].finite()});
    }
  }
  if (report.aggregate_demand > report.aggregate_uplink) {
    report.violations.push_back({3, std::nullopt, report.aggregate_demand, report.aggregate_uplink});
  }
  report.sustainable = report.violations.empty();
  return report;
}

Bound max_sustainable_scale(const NetworkSpec& spec) {
  const std::size_t n = spec.size();
  if (n <= 1) return Bound::unbounded();
  const Rate total_rate = total(spec.rates);
  if (total_rate.is_zero()) return Bound::unbounded();

  // Every condition is linear in the rates, so each contributes capacity / demand.
  std::optional<Rate> best;
  auto consider = [&](const Rate& candidate) {
    if (!best || candidate < *best) best = candidate;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!spec.rates[i].is_zero()) consider(spec.uplink[i] / spec.rates[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rate incoming = total_rate - spec.rates[i];
    if (spec.downlink[i].is_finite() && !incoming.is_zero()) consider(spec.downlink[i].finite() / incoming);
  }
  consider(total(spec.uplink) / (total_rate * (n - 1)));
  return *best;
}

NetworkSpec scale_rates(const NetworkSpec& spec, const Rate& factor) {
  NetworkSpec out = spec;
  for (auto& r : out.rates) r = r * factor;
  return out;
}

}  // namespace shallowcast
