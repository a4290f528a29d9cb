#include "shallowcast/verifier.hpp"

#include <stdexcept>

namespace shallowcast {

namespace {

std::string site_locus(std::size_t i) { return "site " + std::to_string(i); }

class ReportBuilder {
 public:
  // Checks are handed out by reference; never reallocate.
  ReportBuilder() { report_.checks.reserve(8); }

  CheckResult& open(CheckKind kind) {
    report_.checks.push_back(CheckResult{kind, true, {}});
    return report_.checks.back();
  }

  static void fail(CheckResult& check, std::string locus, std::string relation, Rate lhs, Rate rhs) {
    check.passed = false;
    check.failures.push_back({std::move(locus), std::move(relation), std::move(lhs), std::move(rhs)});
  }

  VerificationReport finish() {
    for (const auto& c : report_.checks) report_.passed = report_.passed && c.passed;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

Rate from_count(std::size_t k) { return Rate(static_cast<std::uint64_t>(k)); }

void check_partition(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& check = rb.open(CheckKind::valid_partition);
  const std::size_t n = plan.spec.size();
  if (plan.matrix.size() != n) {
    ReportBuilder::fail(check, "matrix shape", "==", from_count(plan.matrix.size()), from_count(n));
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rate row = plan.matrix.row_sum(i);
    if (row != plan.spec.rates[i]) ReportBuilder::fail(check, "matrix row " + std::to_string(i), "==", row, plan.spec.rates[i]);
  }
  // A lone site has no receivers, hence no trees.
  if (n < 2) return;
  std::vector<Rate> per_source(n);
  for (const auto& tree : plan.trees) {
    if (tree.source.index < n) per_source[tree.source.index] += tree.rate;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (per_source[i] != plan.spec.rates[i]) {
      ReportBuilder::fail(check, "trees of " + site_locus(i), "==", per_source[i], plan.spec.rates[i]);
    }
  }
}

void check_tree_shape(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& check = rb.open(CheckKind::tree_height);
  const std::size_t n = plan.spec.size();
  for (std::size_t t = 0; t < plan.trees.size(); ++t) {
    const auto& tree = plan.trees[t];
    const std::string locus = "tree " + std::to_string(t);
    const int height = tree.height();
    if (height > 2) ReportBuilder::fail(check, locus + " height", "<=", from_count(height), Rate(2));
    // Source, relay and leaves must partition the site set.
    std::vector<int> seen(n, 0);
    bool in_range = tree.source.index < n && (!tree.relay || tree.relay->index < n);
    for (auto leaf : tree.leaves) in_range = in_range && leaf.index < n;
    if (!in_range) {
      ReportBuilder::fail(check, locus + " site index", "<", from_count(n), from_count(n));
      continue;
    }
    ++seen[tree.source.index];
    if (tree.relay) ++seen[tree.relay->index];
    for (auto leaf : tree.leaves) ++seen[leaf.index];
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s] != 1) ReportBuilder::fail(check, locus + " covers " + site_locus(s), "==", from_count(seen[s]), Rate(1));
    }
    if (tree.rate.is_zero()) ReportBuilder::fail(check, locus + " rate", ">", tree.rate, Rate(0));
  }
}

void check_uplink(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& check = rb.open(CheckKind::uplink_capacity);
  const std::size_t n = plan.spec.size();
  for (std::size_t s = 0; s < n; ++s) {
    Rate used;
    for (const auto& tree : plan.trees) used += tree.rate * tree.children_of(SiteId{s});
    if (used > plan.spec.uplink[s]) ReportBuilder::fail(check, site_locus(s), "<=", used, plan.spec.uplink[s]);
  }
}

void check_downlink(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& check = rb.open(CheckKind::downlink_capacity);
  const std::size_t n = plan.spec.size();
  if (n < 2) return;
  // received[d][s]: volume of stream s reaching site d.
  std::vector<std::vector<Rate>> received(n, std::vector<Rate>(n));
  for (const auto& tree : plan.trees) {
    if (tree.source.index >= n) continue;
    for (std::size_t d = 0; d < n; ++d) {
      if (tree.receives(SiteId{d})) received[d][tree.source.index] += tree.rate;
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    Rate total;
    for (std::size_t s = 0; s < n; ++s) {
      total += received[d][s];
      const Rate& expected = s == d ? Rate::zero() : plan.spec.rates[s];
      if (received[d][s] != expected) {
        ReportBuilder::fail(check, site_locus(d) + " receives stream " + std::to_string(s), "==", received[d][s],
                            expected);
      }
    }
    if (!plan.spec.downlink[d].admits(total)) {
      ReportBuilder::fail(check, site_locus(d), "<=", total, plan.spec.downlink[d].finite());
    }
  }
}

void check_throughput(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& check = rb.open(CheckKind::throughput);
  const std::size_t n = plan.spec.size();
  Rate delivered;
  for (const auto& tree : plan.trees) delivered += tree.rate * tree.receiver_count();
  Rate total;
  for (const auto& r : plan.spec.rates) total += r;
  const Rate target = n < 2 ? Rate::zero() : total * (n - 1);
  if (delivered != target) ReportBuilder::fail(check, "aggregate", "==", delivered, target);
}

void check_trace(const TransmissionPlan& plan, ReportBuilder& rb) {
  auto& lemma2 = rb.open(CheckKind::trace_lemma2);
  auto& prop1 = rb.open(CheckKind::trace_prop1);
  auto& prop2 = rb.open(CheckKind::trace_prop2);
  const std::size_t n = plan.spec.size();
  const auto& trace = plan.trace;
  const std::uint64_t fanout = relay_fanout(n);

  bool shape_ok = trace.u_initial.size() == n && trace.u_snapshots.size() == n + 1 && plan.matrix.size() == n;
  for (const auto& snap : trace.u_snapshots) shape_ok = shape_ok && snap.size() == n;
  if (!shape_ok) {
    ReportBuilder::fail(lemma2, "trace shape", "==", from_count(trace.u_snapshots.size()), from_count(n + 1));
    prop1.passed = prop2.passed = false;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (trace.u_snapshots.front()[i] != trace.u_initial[i]) {
      ReportBuilder::fail(lemma2, "initial snapshot " + site_locus(i), "==", trace.u_snapshots.front()[i],
                          trace.u_initial[i]);
    }
  }

  // Suffix sums of stream rates.
  std::vector<Rate> suffix(n + 1);
  for (std::size_t a = n; a-- > 0;) suffix[a] = suffix[a + 1] + plan.spec.rates[a];

  for (std::size_t a = 0; a <= n; ++a) {
    const auto& snap = trace.u_snapshots[a];
    const std::string locus = "iteration " + std::to_string(a);
    Rate sum;
    for (std::size_t i = 0; i < n; ++i) {
      // Rate is non-negative by construction; also confirm each snapshot
      // follows from the previous one and the matrix row.
      if (a > 0) {
        const Rate spent = plan.matrix.at(a - 1, i) * fanout;
        const auto& prev = trace.u_snapshots[a - 1][i];
        if (spent > prev || prev - spent != snap[i]) {
          ReportBuilder::fail(lemma2, locus + " " + site_locus(i), "==", snap[i], spent > prev ? Rate(0) : prev - spent);
        }
      }
      sum += snap[i];
    }
    if (sum < suffix[a] * fanout) ReportBuilder::fail(prop2, locus, ">=", sum, suffix[a] * fanout);
    if (a < n && sum >= plan.spec.rates[a] * fanout) {
      const Rate row = plan.matrix.row_sum(a);
      if (row != plan.spec.rates[a]) ReportBuilder::fail(prop1, locus + " row " + std::to_string(a), "==", row, plan.spec.rates[a]);
    }
  }
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::valid_partition: return "valid_partition";
    case CheckKind::uplink_capacity: return "uplink_capacity";
    case CheckKind::downlink_capacity: return "downlink_capacity";
    case CheckKind::tree_height: return "tree_height";
    case CheckKind::trace_lemma2: return "trace_lemma2";
    case CheckKind::trace_prop1: return "trace_prop1";
    case CheckKind::trace_prop2: return "trace_prop2";
    case CheckKind::throughput: return "throughput";
  }
  return "unknown";
}

std::string CheckFailure::to_string() const {
  return locus + ": expected " + lhs.to_string() + " " + relation + " " + rhs.to_string();
}

const CheckResult& VerificationReport::check(CheckKind kind) const {
  for (const auto& c : checks) {
    if (c.kind == kind) return c;
  }
  throw std::out_of_range("no such check: " + std::string(check_name(kind)));
}

VerificationReport verify_plan(const TransmissionPlan& plan) {
  ReportBuilder rb;
  check_partition(plan, rb);
  check_uplink(plan, rb);
  check_downlink(plan, rb);
  check_tree_shape(plan, rb);
  check_trace(plan, rb);
  check_throughput(plan, rb);
  return rb.finish();
}

}  // namespace shallowcast
