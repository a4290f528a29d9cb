#include "shallowcast/simulator.hpp"

#include <algorithm>

namespace shallowcast {

namespace {

std::string describe_overage(std::size_t round, SiteId site, bool uplink, const Rate& used, const Rate& capacity) {
  return std::string(uplink ? "uplink" : "downlink") + " of site " + std::to_string(site.index) + " exceeded in round " +
         std::to_string(round) + ": " + used.to_string() + " > " + capacity.to_string() + " (over by " +
         (used - capacity).to_string() + ")";
}

void enforce_capacity(const NetworkSpec& spec, const Rate& unit, std::size_t round, const std::vector<Rate>& up,
                      const std::vector<Rate>& down) {
  for (std::size_t s = 0; s < spec.size(); ++s) {
    const Rate cap = spec.uplink[s] * unit;
    if (up[s] > cap) throw CapacityExceeded(round, SiteId{s}, true, up[s], cap);
    if (spec.downlink[s].is_finite()) {
      const Rate dcap = spec.downlink[s].finite() * unit;
      if (down[s] > dcap) throw CapacityExceeded(round, SiteId{s}, false, down[s], dcap);
    }
  }
}

SimMetrics empty_metrics(const TransmissionPlan& plan, const SimConfig& config) {
  const std::size_t n = plan.spec.size();
  SimMetrics m;
  m.rounds = config.rounds;
  m.batch_unit = config.batch_unit;
  m.delivered_fraction.assign(n, std::vector<Rate>(n));
  m.first_batch_round.assign(n, std::vector<std::size_t>(n, 0));
  return m;
}

// delivered[s][d] is the volume of stream s that reached d over the horizon.
void finish_metrics(const TransmissionPlan& plan, const std::vector<std::vector<Rate>>& delivered, SimMetrics& m) {
  const std::size_t n = plan.spec.size();
  for (std::size_t s = 0; s < n; ++s) {
    const Rate injected = plan.spec.rates[s] * m.batch_unit * m.rounds;
    for (std::size_t d = 0; d < n; ++d) {
      m.delivered_fraction[s][d] = (s == d || injected.is_zero()) ? Rate(1) : delivered[s][d] / injected;
    }
  }
  m.total_received = Rate::zero();
  for (const auto& row : m.per_round_downlink) {
    for (const auto& v : row) m.total_received += v;
  }
  m.aggregate_goodput = Rate::zero();
  if (!m.per_round_downlink.empty()) {
    for (const auto& v : m.per_round_downlink.back()) m.aggregate_goodput += v;
    m.aggregate_goodput = m.aggregate_goodput / m.batch_unit;
  }
}

}  // namespace

CapacityExceeded::CapacityExceeded(std::size_t round, SiteId site, bool uplink, Rate used, Rate capacity)
    : std::runtime_error(describe_overage(round, site, uplink, used, capacity)),
      round_(round),
      site_(site),
      uplink_(uplink),
      used_(std::move(used)),
      capacity_(std::move(capacity)) {}

void validate_config(const SimConfig& config) {
  if (config.rounds < 2) {
    throw std::invalid_argument("simulation needs at least 2 rounds, got " + std::to_string(config.rounds));
  }
  if (config.batch_unit.is_zero()) throw std::invalid_argument("batch unit must be positive");
}

SimMetrics simulate(const TransmissionPlan& plan, const SimConfig& config) {
  validate_config(config);
  const std::size_t n = plan.spec.size();
  const auto& trees = plan.trees;
  SimMetrics m = empty_metrics(plan, config);

  std::vector<Rate> volume;
  volume.reserve(trees.size());
  for (const auto& tree : trees) volume.push_back(tree.rate * config.batch_unit);

  for (std::size_t round = 1; round <= config.rounds; ++round) {
    std::vector<Rate> up(n), down(n);
    const bool relays_active = round >= 2;
    const auto sites = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t si = 0; si < sites; ++si) {
      const SiteId site{static_cast<std::size_t>(si)};
      auto& u = up[site.index];
      auto& d = down[site.index];
      for (std::size_t t = 0; t < trees.size(); ++t) {
        const auto& tree = trees[t];
        if (tree.source == site) {
          u += volume[t] * tree.children_of(site);
        } else if (tree.relay && *tree.relay == site) {
          d += volume[t];
          if (relays_active) u += volume[t] * tree.leaves.size();
        } else if (tree.receives(site) && (!tree.relay || relays_active)) {
          d += volume[t];
        }
      }
    }
    enforce_capacity(plan.spec, config.batch_unit, round, up, down);
    m.per_round_uplink.push_back(std::move(up));
    m.per_round_downlink.push_back(std::move(down));
  }

  std::vector<std::vector<Rate>> delivered(n, std::vector<Rate>(n));
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& tree = trees[t];
    const std::size_t s = tree.source.index;
    const int hops = tree.height();
    m.max_delivery_hops = std::max(m.max_delivery_hops, hops);
    if (tree.relay) {
      delivered[s][tree.relay->index] += volume[t] * config.rounds;
      m.first_batch_round[s][tree.relay->index] = std::max<std::size_t>(m.first_batch_round[s][tree.relay->index], 1);
    }
    const std::size_t leaf_round = tree.relay ? 2 : 1;
    for (auto leaf : tree.leaves) {
      delivered[s][leaf.index] += volume[t] * (config.rounds + 1 - leaf_round);
      m.first_batch_round[s][leaf.index] = std::max(m.first_batch_round[s][leaf.index], leaf_round);
    }
  }
  finish_metrics(plan, delivered, m);
  return m;
}

SimMetrics simulate_serial(const TransmissionPlan& plan, const SimConfig& config) {
  validate_config(config);
  const std::size_t n = plan.spec.size();
  const auto& trees = plan.trees;
  SimMetrics m = empty_metrics(plan, config);
  std::vector<std::vector<Rate>> delivered(n, std::vector<Rate>(n));

  struct Forward {
    std::size_t tree;
    std::size_t injected;
  };
  std::vector<Forward> due;

  auto arrive = [&](std::size_t tree, std::size_t injected, std::size_t round, SiteId at, const Rate& v,
                    std::vector<Rate>& down) {
    const std::size_t s = trees[tree].source.index;
    down[at.index] += v;
    delivered[s][at.index] += v;
    m.max_delivery_hops = std::max(m.max_delivery_hops, static_cast<int>(round - injected + 1));
    if (injected == 1) m.first_batch_round[s][at.index] = std::max(m.first_batch_round[s][at.index], round);
  };

  for (std::size_t round = 1; round <= config.rounds; ++round) {
    std::vector<Rate> up(n), down(n);
    std::vector<Forward> next;

    for (const auto& f : due) {
      const auto& tree = trees[f.tree];
      const Rate v = tree.rate * config.batch_unit;
      up[tree.relay->index] += v * tree.leaves.size();
      for (auto leaf : tree.leaves) arrive(f.tree, f.injected, round, leaf, v, down);
    }

    for (std::size_t t = 0; t < trees.size(); ++t) {
      const auto& tree = trees[t];
      const Rate v = tree.rate * config.batch_unit;
      up[tree.source.index] += v * tree.children_of(tree.source);
      if (tree.relay) {
        arrive(t, round, round, *tree.relay, v, down);
        if (!tree.leaves.empty()) next.push_back({t, round});
      } else {
        for (auto leaf : tree.leaves) arrive(t, round, round, leaf, v, down);
      }
    }

    enforce_capacity(plan.spec, config.batch_unit, round, up, down);
    m.per_round_uplink.push_back(std::move(up));
    m.per_round_downlink.push_back(std::move(down));
    due = std::move(next);
  }
  finish_metrics(plan, delivered, m);
  return m;
}

Rate compare_aggregate_throughput(const SimMetrics& metrics, const NetworkSpec& spec) {
  if (spec.size() <= 1 || metrics.per_round_downlink.empty()) return Rate::zero();
  Rate received;
  for (const auto& v : metrics.per_round_downlink.back()) received += v;
  return received / metrics.batch_unit;
}

}  // namespace shallowcast
