#include "shallowcast/planner.hpp"

namespace shallowcast {

namespace {

std::string describe(const SustainabilityReport& report) {
  std::string msg = "rates are not sustainable:";
  for (const auto& v : report.violations) {
    msg += " condition " + std::to_string(v.condition);
    if (v.site) msg += " at site " + std::to_string(v.site->index);
    msg += " (" + v.lhs.to_string() + " > " + v.rhs.to_string() + ");";
  }
  return msg;
}

}  // namespace

UnsustainableError::UnsustainableError(SustainabilityReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

std::uint64_t relay_fanout(std::size_t n) { return n >= 2 ? n - 2 : 0; }

Assignment assign_substream_rates(const NetworkSpec& spec) {
  auto report = is_sustainable(spec);
  if (!report.sustainable) throw UnsustainableError(std::move(report));

  const std::size_t n = spec.size();
  const std::uint64_t fanout = relay_fanout(n);
  Assignment out{SubstreamMatrix(n), {}};
  auto& r = out.matrix;
  auto& trace = out.trace;

  std::vector<Rate> residual(n);
  for (std::size_t i = 0; i < n; ++i) {
    // A lone site has nobody to send to, so none of its uplink is reserved.
    residual[i] = n == 1 ? spec.uplink[i] : spec.uplink[i] - spec.rates[i];
  }
  trace.u_initial = residual;
  trace.r_prime_history.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    trace.u_snapshots.push_back(residual);
    Rate remaining = spec.rates[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (remaining * fanout > residual[j]) {
        r.at(i, j) = residual[j] / fanout;
      } else {
        r.at(i, j) = remaining;
      }
      residual[j] -= r.at(i, j) * fanout;
      remaining -= r.at(i, j);
      trace.r_prime_history[i].push_back(remaining);
      if (remaining.is_zero()) break;
    }
  }
  trace.u_snapshots.push_back(residual);
  return out;
}

std::vector<OverlayTree> build_overlay_trees(const SubstreamMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<OverlayTree> trees;
  if (n < 2) return trees;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rate& rate = matrix.at(i, j);
      if (rate.is_zero()) continue;
      OverlayTree tree;
      tree.source = SiteId{i};
      tree.rate = rate;
      if (i != j) tree.relay = SiteId{j};
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j) tree.leaves.push_back(SiteId{k});
      }
      if (tree.relay && tree.leaves.empty()) {
        tree.leaves.push_back(*tree.relay);
        tree.relay.reset();
      }
      trees.push_back(std::move(tree));
    }
  }
  return trees;
}

std::vector<Rate> uplink_usage(const SubstreamMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Rate> usage(n);
  if (n < 2) return usage;
  const std::uint64_t fanout = relay_fanout(n);
  for (std::size_t i = 0; i < n; ++i) {
    usage[i] += matrix.at(i, i) * (n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      usage[i] += matrix.at(i, j);
      usage[i] += matrix.at(j, i) * fanout;
    }
  }
  return usage;
}

std::vector<Rate> downlink_usage(const NetworkSpec& spec) {
  const std::size_t n = spec.size();
  std::vector<Rate> usage(n);
  if (n < 2) return usage;
  Rate total;
  for (const auto& r : spec.rates) total += r;
  for (std::size_t i = 0; i < n; ++i) usage[i] = total - spec.rates[i];
  return usage;
}

TransmissionPlan plan(const NetworkSpec& spec) {
  auto assignment = assign_substream_rates(spec);
  TransmissionPlan out;
  out.spec = spec;
  out.trees = build_overlay_trees(assignment.matrix);
  out.uplink_usage = uplink_usage(assignment.matrix);
  out.downlink_usage = downlink_usage(spec);
  out.matrix = std::move(assignment.matrix);
  out.trace = std::move(assignment.trace);
  return out;
}

}  // namespace shallowcast
