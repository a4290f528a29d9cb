#include "shallowcast/render.hpp"

#include <json.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>

namespace shallowcast::render {

namespace {

const std::string& name_of(const Names& names, SiteId id) { return names.at(id.index); }

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string file_safe(const std::string& text) {
  std::string out;
  for (unsigned char c : text) out += std::isalnum(c) || c == '-' ? static_cast<char>(c) : '_';
  return out;
}

std::string tree_title(const OverlayTree& tree, const Names& names) {
  return "s(" + name_of(names, tree.source) + "," + (tree.relay ? name_of(names, *tree.relay) : name_of(names, tree.source)) +
         ")";
}

void dot_nodes(std::ostream& os, const std::vector<SiteId>& sites, const Names& names) {
  for (auto s : sites) os << "  n" << s.index << " [label=" << quoted(name_of(names, s)) << "];\n";
}

}  // namespace

std::string sustainability_text(const SustainabilityReport& report, const Names& names) {
  std::ostringstream os;
  for (const auto& v : report.violations) {
    os << "condition " << v.condition << " violated";
    if (v.site) os << " at " << name_of(names, *v.site);
    os << ": " << v.lhs << " > " << v.rhs << "\n";
  }
  if (report.sustainable) {
    os << "sustainable\n";
    os << "aggregate fan-out demand " << report.aggregate_demand << " <= total uplink " << report.aggregate_uplink;
    if (report.aggregate_demand == report.aggregate_uplink && names.size() > 1) os << " (condition 3 tight)";
    os << "\n";
  } else {
    os << "not sustainable (" << report.violations.size() << " violation"
       << (report.violations.size() == 1 ? "" : "s") << ")\n";
  }
  return os.str();
}

std::string sustainability_json(const SustainabilityReport& report, const Names& names) {
  nlohmann::ordered_json out;
  out["sustainable"] = report.sustainable;
  out["aggregate_demand"] = report.aggregate_demand.to_string();
  out["aggregate_uplink"] = report.aggregate_uplink.to_string();
  out["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json item;
    item["condition"] = v.condition;
    item["site"] = v.site ? nlohmann::ordered_json(name_of(names, *v.site)) : nlohmann::ordered_json(nullptr);
    item["lhs"] = v.lhs.to_string();
    item["rhs"] = v.rhs.to_string();
    out["violations"].push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string matrix_text(const SubstreamMatrix& matrix, const Names& names) {
  const std::size_t n = matrix.size();
  std::size_t width = 1;
  for (const auto& name : names) width = std::max(width, name.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) width = std::max(width, matrix.at(i, j).to_string().size());
  }
  std::ostringstream os;
  os << std::setw(static_cast<int>(width)) << "";
  for (std::size_t j = 0; j < n; ++j) os << "  " << std::setw(static_cast<int>(width)) << names.at(j);
  os << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << std::setw(static_cast<int>(width)) << names.at(i);
    for (std::size_t j = 0; j < n; ++j) os << "  " << std::setw(static_cast<int>(width)) << matrix.at(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

std::string tree_line(const OverlayTree& tree, const Names& names) {
  std::ostringstream os;
  os << "source " << name_of(names, tree.source);
  if (tree.relay) {
    os << " via " << name_of(names, *tree.relay);
  } else {
    os << " direct";
  }
  os << " -> leaves {";
  for (std::size_t k = 0; k < tree.leaves.size(); ++k) os << (k ? ", " : "") << name_of(names, tree.leaves[k]);
  os << "} rate " << tree.rate << " (height " << tree.height() << ")";
  return os.str();
}

std::string trace_text(const AlgorithmTrace& trace, const Names& names) {
  std::ostringstream os;
  os << "residual uplink snapshots:\n";
  for (std::size_t a = 0; a < trace.u_snapshots.size(); ++a) {
    os << (a + 1 < trace.u_snapshots.size() ? "  start of iteration " + std::to_string(a + 1) : std::string("  final"))
       << ":";
    for (std::size_t i = 0; i < trace.u_snapshots[a].size(); ++i) {
      os << " " << names.at(i) << "=" << trace.u_snapshots[a][i];
    }
    os << "\n";
  }
  os << "unassigned remainder per inner step:\n";
  for (std::size_t i = 0; i < trace.r_prime_history.size(); ++i) {
    os << "  " << names.at(i) << ":";
    for (const auto& r : trace.r_prime_history[i]) os << " " << r;
    os << "\n";
  }
  return os.str();
}

std::string verification_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& check : report.checks) {
    os << (check.passed ? "ok   " : "FAIL ") << check.name() << "\n";
    for (const auto& f : check.failures) os << "       " << f.to_string() << "\n";
  }
  return os.str();
}

std::string tree_dot(const OverlayTree& tree, const Names& names, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  label=" << quoted(tree_title(tree, names) + " rate " + tree.rate.to_string()) << ";\n";
  std::vector<SiteId> sites{tree.source};
  if (tree.relay) sites.push_back(*tree.relay);
  sites.insert(sites.end(), tree.leaves.begin(), tree.leaves.end());
  dot_nodes(os, sites, names);
  const SiteId hub = tree.relay ? *tree.relay : tree.source;
  const std::string label = quoted(tree.rate.to_string());
  if (tree.relay) os << "  n" << tree.source.index << " -> n" << tree.relay->index << " [label=" << label << "];\n";
  for (auto leaf : tree.leaves) os << "  n" << hub.index << " -> n" << leaf.index << " [label=" << label << "];\n";
  os << "}\n";
  return os.str();
}

std::string plan_dot(const TransmissionPlan& plan, const Names& names) {
  std::ostringstream os;
  os << "digraph \"plan\" {\n";
  std::vector<SiteId> sites;
  for (std::size_t i = 0; i < plan.spec.size(); ++i) sites.push_back(SiteId{i});
  dot_nodes(os, sites, names);
  for (const auto& tree : plan.trees) {
    const std::string label = quoted(tree_title(tree, names) + " " + tree.rate.to_string());
    const SiteId hub = tree.relay ? *tree.relay : tree.source;
    if (tree.relay) os << "  n" << tree.source.index << " -> n" << tree.relay->index << " [label=" << label << "];\n";
    for (auto leaf : tree.leaves) os << "  n" << hub.index << " -> n" << leaf.index << " [label=" << label << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_file_stem(const OverlayTree& tree, std::size_t index, const Names& names) {
  std::ostringstream os;
  os << "tree_" << std::setw(2) << std::setfill('0') << index << "_" << file_safe(name_of(names, tree.source));
  if (tree.relay) {
    os << "_via_" << file_safe(name_of(names, *tree.relay));
  } else {
    os << "_direct";
  }
  return os.str();
}

std::string matrix_csv(const SubstreamMatrix& matrix) {
  std::ostringstream os;
  os << "i,j,rate\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) os << i << "," << j << "," << matrix.at(i, j) << "\n";
  }
  return os.str();
}

namespace {

// Quotes a field holding a separator, quote or newline.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string simulation_csv(const SimMetrics& metrics, const Names& names) {
  std::ostringstream os;
  os << "site,round,uplink_used,downlink_used\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t t = 0; t < metrics.per_round_uplink.size(); ++t) {
      os << csv_field(names[i]) << "," << (t + 1) << "," << metrics.per_round_uplink[t][i] << "," << metrics.per_round_downlink[t][i]
         << "\n";
    }
  }
  return os.str();
}

}  // namespace shallowcast::render
