// Acceptance suite: one PASS/FAIL line per criterion. Exact arithmetic
// throughout, so every comparison is at zero tolerance.

#include "shallowcast/planner.hpp"
#include "shallowcast/simulator.hpp"
#include "shallowcast/sustainability.hpp"
#include "shallowcast/verifier.hpp"

#include "support/spec_gen.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

namespace {

using namespace shallowcast;
using testing::figure1_spec;
using testing::SpecGen;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kTheoremSpecs = 1000;
constexpr std::size_t kMaxSites = 50;
constexpr std::size_t kOracleFeasibleSpecs = 200;
constexpr std::size_t kOracleViolatingSpecs = 60;
constexpr std::size_t kScaleSpecs = 200;
constexpr double kFigure1BudgetMs = 1.0;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr std::size_t kSimRounds = 5;

// Integer inputs yield matrix entries with denominators dividing n - 2.
std::uint64_t grid_for(const NetworkSpec& spec) { return spec.n > 3 ? spec.n - 2 : 1; }

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Shared by criteria 2, 3 and 6.
std::vector<TransmissionPlan> theorem_plans;

Outcome figure1_reproduction() {
  Outcome o;
  const auto spec = figure1_spec();
  const auto expected = SubstreamMatrix::from_rows({{1, 0, 0}, {0, 3, 0}, {0, 4, 1}});
  (void)assign_substream_rates(spec);  // warm-up
  const auto start = Clock::now();
  const auto result = assign_substream_rates(spec);
  const double ms = elapsed_ms(start);
  if (!(result.matrix == expected)) o.fail("matrix differs from [[1,0,0],[0,3,0],[0,4,1]]");
  if (ms >= kFigure1BudgetMs) o.fail("runtime " + std::to_string(ms) + " ms");
  o.detail << (o.passed ? "matrix exact, " : "; ") << ms << " ms";
  return o;
}

Outcome theorem_property_suite() {
  Outcome o;
  SpecGen gen(20240101);
  std::size_t tight = 0, tiny = 0;
  for (std::size_t k = 0; k < kTheoremSpecs; ++k) {
    std::size_t n = gen.uniform(1, kMaxSites);
    if (k % 50 == 0) n = 1;
    if (k % 50 == 1) n = 2;
    const bool tight_case = k % 3 == 0;
    const auto spec = gen.sustainable(n, tight_case);
    if (!is_sustainable(spec).sustainable) {
      o.fail("generator produced unsustainable spec #" + std::to_string(k));
      continue;
    }
    tight += tight_case && n >= 2;
    tiny += n <= 2;
    auto p = plan(spec);
    const auto report = verify_plan(p);
    for (auto kind : {CheckKind::valid_partition, CheckKind::uplink_capacity, CheckKind::downlink_capacity,
                      CheckKind::tree_height, CheckKind::throughput}) {
      const auto& c = report.check(kind);
      if (!c.passed) o.fail("spec #" + std::to_string(k) + " " + std::string(c.name()) + ": " + c.failures[0].to_string());
    }
    theorem_plans.push_back(std::move(p));
  }
  o.detail << (o.passed ? "" : "; ") << theorem_plans.size() << " specs, n in [1, " << kMaxSites << "], " << tight
           << " with aggregate equality, " << tiny << " with n <= 2";
  return o;
}

Outcome appendix_invariants() {
  Outcome o;
  std::size_t snapshots = 0;
  for (std::size_t k = 0; k < theorem_plans.size(); ++k) {
    const auto report = verify_plan(theorem_plans[k]);
    for (auto kind : {CheckKind::trace_lemma2, CheckKind::trace_prop1, CheckKind::trace_prop2}) {
      const auto& c = report.check(kind);
      if (!c.passed) o.fail("spec #" + std::to_string(k) + " " + std::string(c.name()) + ": " + c.failures[0].to_string());
    }
    snapshots += theorem_plans[k].trace.u_snapshots.size();
  }
  if (theorem_plans.size() < kTheoremSpecs) o.fail("fewer traces than specs");
  o.detail << (o.passed ? "" : "; ") << theorem_plans.size() << " traces, " << snapshots << " snapshots";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  SpecGen gen(777);
  const auto start = Clock::now();
  for (std::size_t k = 0; k < kOracleFeasibleSpecs; ++k) {
    const auto spec = gen.small_integer_sustainable(gen.uniform(1, kBruteForceMaxSites));
    if (!verify_plan(plan(spec)).passed) o.fail("planner output failed verification on feasible spec #" + std::to_string(k));
    if (!brute_force_feasibility(spec, grid_for(spec))) o.fail("brute force found no plan for sustainable spec #" + std::to_string(k));
  }
  std::size_t per_condition[4] = {0, 0, 0, 0};
  for (std::size_t k = 0; k < kOracleViolatingSpecs; ++k) {
    const int condition = static_cast<int>(k % 3) + 1;
    const std::size_t n = gen.uniform(condition == 3 ? 3 : 2, kBruteForceMaxSites);
    const auto spec = gen.violating(n, condition);
    const auto report = is_sustainable(spec);
    bool one_condition = !report.sustainable;
    for (const auto& v : report.violations) one_condition = one_condition && v.condition == condition;
    if (!one_condition) o.fail("violating spec #" + std::to_string(k) + " breaches other conditions");
    bool rejected = false;
    try {
      (void)plan(spec);
    } catch (const UnsustainableError&) {
      rejected = true;
    }
    if (!rejected) o.fail("planner accepted violating spec #" + std::to_string(k));
    if (brute_force_feasibility(spec, grid_for(spec))) o.fail("brute force found a plan for violating spec #" + std::to_string(k));
    ++per_condition[condition];
  }
  const double seconds = elapsed_ms(start) / 1000.0;
  if (seconds >= kOracleBudgetSeconds) o.fail("runtime " + std::to_string(seconds) + " s");
  o.detail << (o.passed ? "" : "; ") << kOracleFeasibleSpecs << " feasible, " << kOracleViolatingSpecs
           << " violating (" << per_condition[1] << "/" << per_condition[2] << "/" << per_condition[3]
           << " by condition), " << seconds << " s";
  return o;
}

Outcome scaling_correctness() {
  Outcome o;
  SpecGen gen(4242);
  const Rate nudge(1001, 1000);
  for (std::size_t k = 0; k < kScaleSpecs; ++k) {
    const std::size_t n = gen.uniform(2, kMaxSites);
    const auto spec = k % 4 == 0 ? gen.sustainable(n, gen.coin()) : gen.arbitrary(n);
    const Bound theta = max_sustainable_scale(spec);
    if (theta.is_unbounded()) {
      // Only possible when every rate is zero.
      for (const auto& r : spec.rates) {
        if (!r.is_zero()) o.fail("unbounded scale with a positive rate, spec #" + std::to_string(k));
      }
      continue;
    }
    if (!is_sustainable(scale_rates(spec, theta.finite())).sustainable) {
      o.fail("theta*R unsustainable for spec #" + std::to_string(k));
    }
    if (is_sustainable(scale_rates(spec, theta.finite() * nudge)).sustainable) {
      o.fail("theta*(1+1/1000)*R still sustainable for spec #" + std::to_string(k));
    }
  }
  o.detail << (o.passed ? "" : "; ") << kScaleSpecs << " specs";
  return o;
}

Outcome simulation_consistency() {
  Outcome o;
  const auto fig = plan(figure1_spec());
  SimConfig config;
  config.rounds = 10;
  const auto m = simulate(fig, config);
  for (std::size_t t = 1; t < m.rounds; ++t) {
    if (m.per_round_uplink[t] != std::vector<Rate>{2, 10, 6}) o.fail("Figure 1 steady-state uplink is not [2, 10, 6]");
  }
  if (m.max_delivery_hops != 2) o.fail("Figure 1 max hops " + std::to_string(m.max_delivery_hops));
  if (compare_aggregate_throughput(m, fig.spec) != Rate(18)) o.fail("Figure 1 goodput not 18");

  config.rounds = kSimRounds;
  std::size_t runs = 0;
  for (std::size_t k = 0; k < theorem_plans.size(); ++k) {
    try {
      const auto metrics = simulate(theorem_plans[k], config);
      if (metrics.max_delivery_hops > 2) o.fail("spec #" + std::to_string(k) + " needs more than 2 hops");
      ++runs;
    } catch (const CapacityExceeded& e) {
      o.fail("spec #" + std::to_string(k) + ": " + e.what());
    }
  }
  o.detail << (o.passed ? "" : "; ") << "Figure 1 uplink [2, 10, 6], 2 hops, goodput 18/round; " << runs
           << " plans x " << kSimRounds << " rounds without capacity assertion";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 Figure 1 reproduction", figure1_reproduction},
      {"AC2 Theorem 1 property suite", theorem_property_suite},
      {"AC3 Appendix invariant suite", appendix_invariants},
      {"AC4 Oracle equivalence", oracle_equivalence},
      {"AC5 Scaling correctness", scaling_correctness},
      {"AC6 Simulation consistency", simulation_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.str().c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
