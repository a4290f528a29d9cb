#include "shallowcast/cli.hpp"

#include "shallowcast/planner.hpp"
#include "shallowcast/render.hpp"
#include "shallowcast/simulator.hpp"
#include "shallowcast/spec_file.hpp"
#include "shallowcast/sustainability.hpp"
#include "shallowcast/verifier.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

namespace shallowcast::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string spec_path;
  bool json = false;
  std::string dot_dir;
  std::string csv_path;
  bool trace = false;
  std::size_t rounds = 10;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecFileError("cannot write " + path.string());
  out << content;
  if (!out) throw SpecFileError("failed writing " + path.string());
}

int report_unsustainable(const SustainabilityReport& report, const render::Names& names, std::ostream& out) {
  out << render::sustainability_text(report, names);
  out << "hint: run 'scale' to compute the largest sustainable uniform scaling of the rates\n";
  return kUnsustainable;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto doc = load_spec_file(opt.spec_path);
  const auto report = is_sustainable(doc.spec);
  out << (opt.json ? render::sustainability_json(report, doc.names) : render::sustainability_text(report, doc.names));
  return report.sustainable ? kOk : kUnsustainable;
}

// Plans and self-verifies; returns an exit code when the caller should stop.
std::optional<int> plan_and_verify(const SpecDocument& doc, TransmissionPlan& result, std::ostream& out,
                                   std::ostream& err) {
  const auto report = is_sustainable(doc.spec);
  if (!report.sustainable) return report_unsustainable(report, doc.names, out);
  result = plan(doc.spec);
  const auto verification = verify_plan(result);
  if (!verification.passed) {
    err << "internal error: the generated plan failed verification\n" << render::verification_text(verification);
    return kVerificationFailed;
  }
  return std::nullopt;
}

int cmd_plan(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto doc = load_spec_file(opt.spec_path);
  TransmissionPlan result;
  if (auto code = plan_and_verify(doc, result, out, err)) return *code;

  out << "sub-stream rates:\n" << render::matrix_text(result.matrix, doc.names);
  if (result.empty()) {
    out << "empty plan (no receivers)\n";
  } else {
    out << result.trees.size() << " overlay tree" << (result.trees.size() == 1 ? "" : "s") << ":\n";
    for (const auto& tree : result.trees) out << "  " << render::tree_line(tree, doc.names) << "\n";
  }
  out << "uplink usage:";
  for (std::size_t i = 0; i < doc.spec.size(); ++i) {
    out << " " << doc.names[i] << "=" << result.uplink_usage[i] << "/" << doc.spec.uplink[i];
  }
  out << "\n";
  if (opt.trace) out << render::trace_text(result.trace, doc.names);

  if (!opt.dot_dir.empty()) {
    const fs::path dir(opt.dot_dir);
    fs::create_directories(dir);
    for (std::size_t t = 0; t < result.trees.size(); ++t) {
      const auto stem = render::tree_file_stem(result.trees[t], t, doc.names);
      write_file(dir / (stem + ".dot"), render::tree_dot(result.trees[t], doc.names, stem));
    }
    write_file(dir / "plan.dot", render::plan_dot(result, doc.names));
  }
  if (!opt.csv_path.empty()) write_file(opt.csv_path, render::matrix_csv(result.matrix));
  return kOk;
}

int cmd_scale(const Options& opt, std::ostream& out) {
  const auto doc = load_spec_file(opt.spec_path);
  const Bound theta = max_sustainable_scale(doc.spec);
  out << "theta* = " << theta << "\n";
  if (theta.is_finite()) {
    const auto scaled = scale_rates(doc.spec, theta.finite());
    out << "scaled rates:\n";
    for (std::size_t i = 0; i < doc.spec.size(); ++i) out << "  " << doc.names[i] << " " << scaled.rates[i] << "\n";
  }
  return kOk;
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  SimConfig config;
  config.rounds = opt.rounds;
  try {
    validate_config(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const auto doc = load_spec_file(opt.spec_path);
  TransmissionPlan result;
  if (auto code = plan_and_verify(doc, result, out, err)) return *code;

  SimMetrics metrics;
  try {
    metrics = simulate(result, config);
  } catch (const CapacityExceeded& e) {
    err << "simulation assertion: " << e.what() << "\n";
    return kSimulationFailed;
  }

  out << "rounds: " << metrics.rounds << "\n";
  out << "steady-state uplink per round:";
  for (std::size_t i = 0; i < doc.spec.size(); ++i) {
    out << " " << doc.names[i] << "=" << metrics.per_round_uplink.back()[i] << "/" << doc.spec.uplink[i];
  }
  out << "\n";
  out << "steady-state downlink per round:";
  for (std::size_t i = 0; i < doc.spec.size(); ++i) out << " " << doc.names[i] << "=" << metrics.per_round_downlink.back()[i];
  out << "\n";
  out << "max delivery hops: " << metrics.max_delivery_hops << "\n";
  out << "aggregate goodput: " << compare_aggregate_throughput(metrics, doc.spec) << "/round\n";
  if (!opt.csv_path.empty()) write_file(opt.csv_path, render::simulation_csv(metrics, doc.names));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plans and checks height-2 overlay multicast for all-to-all streams", "shallowcast"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Check whether the stream rates are sustainable");
  check->add_option("spec", opt.spec_path, "Network spec (JSON)")->required();
  check->add_flag("--json", opt.json, "Print the report as JSON");

  auto* plan_cmd = app.add_subcommand("plan", "Compute sub-stream rates and overlay trees");
  plan_cmd->add_option("spec", opt.spec_path, "Network spec (JSON)")->required();
  plan_cmd->add_option("--dot", opt.dot_dir, "Directory for one DOT file per tree plus plan.dot");
  plan_cmd->add_option("--csv", opt.csv_path, "Write the rate matrix as CSV");
  plan_cmd->add_flag("--trace", opt.trace, "Print residual uplink snapshots");

  auto* scale = app.add_subcommand("scale", "Largest uniform scaling of the rates that is sustainable");
  scale->add_option("spec", opt.spec_path, "Network spec (JSON)")->required();

  auto* sim = app.add_subcommand("simulate", "Plan, verify and run a round-based fluid simulation");
  sim->add_option("spec", opt.spec_path, "Network spec (JSON)")->required();
  sim->add_option("--rounds", opt.rounds, "Number of rounds (at least 2)");
  sim->add_option("--csv", opt.csv_path, "Write per-round per-site usage as CSV");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(opt, out);
    if (*plan_cmd) return cmd_plan(opt, out, err);
    if (*scale) return cmd_scale(opt, out);
    if (*sim) return cmd_simulate(opt, out, err);
  } catch (const SpecFileError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace shallowcast::cli
