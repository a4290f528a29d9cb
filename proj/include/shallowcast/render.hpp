#pragma once

#include "shallowcast/planner.hpp"
#include "shallowcast/simulator.hpp"
#include "shallowcast/sustainability.hpp"
#include "shallowcast/verifier.hpp"

#include <string>
#include <vector>

// Text, DOT, CSV and JSON renderings. Every number is printed as an exact
// integer or "a/b" fraction.
namespace shallowcast::render {

using Names = std::vector<std::string>;

std::string sustainability_text(const SustainabilityReport& report, const Names& names);
std::string sustainability_json(const SustainabilityReport& report, const Names& names);

std::string matrix_text(const SubstreamMatrix& matrix, const Names& names);
/// e.g. "source v3 via v2 -> leaves {v1} rate 4"
std::string tree_line(const OverlayTree& tree, const Names& names);
std::string trace_text(const AlgorithmTrace& trace, const Names& names);
std::string verification_text(const VerificationReport& report);

/// One digraph per tree: node labels are site names, edge labels the rate.
std::string tree_dot(const OverlayTree& tree, const Names& names, const std::string& graph_name);
/// All trees in one digraph, one edge per tree hop.
std::string plan_dot(const TransmissionPlan& plan, const Names& names);
/// File stem for tree number `index`, e.g. "tree_03_v3_via_v2".
std::string tree_file_stem(const OverlayTree& tree, std::size_t index, const Names& names);

/// Header "i,j,rate"; one line per matrix entry, zeros included.
std::string matrix_csv(const SubstreamMatrix& matrix);
/// Header "site,round,uplink_used,downlink_used"; rounds are 1-based.
std::string simulation_csv(const SimMetrics& metrics, const Names& names);

}  // namespace shallowcast::render
