#pragma once

#include "shallowcast/rate.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shallowcast {

/// Dense site index in [0, n). Index order is the iteration order of the planner.
struct SiteId {
  std::size_t index = 0;

  friend auto operator<=>(const SiteId&, const SiteId&) = default;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sites with their uplink capacity, downlink capacity and client stream rate.
struct NetworkSpec {
  std::size_t n = 0;
  std::vector<Rate> uplink;
  std::vector<Bound> downlink;
  std::vector<Rate> rates;

  std::size_t size() const { return n; }

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Returns the spec unchanged if n >= 1 and every vector has length n,
/// throws SpecError otherwise.
NetworkSpec validate_spec(NetworkSpec spec);

/// Convenience constructor; every downlink unbounded when `downlink` is empty.
NetworkSpec make_spec(std::vector<Rate> uplink, std::vector<Rate> rates, std::vector<Bound> downlink = {});

/// n x n matrix of sub-stream rates; entry (i, j) is the slice of stream i
/// relayed through site j (or broadcast directly when i == j).
class SubstreamMatrix {
 public:
  SubstreamMatrix() = default;
  explicit SubstreamMatrix(std::size_t n) : n_(n), cells_(n * n) {}
  /// Throws SpecError if `rows` is not square.
  static SubstreamMatrix from_rows(const std::vector<std::vector<Rate>>& rows);

  std::size_t size() const { return n_; }
  const Rate& at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }
  Rate& at(std::size_t i, std::size_t j) { return cells_.at(i * n_ + j); }

  Rate row_sum(std::size_t i) const;
  std::vector<std::vector<Rate>> rows() const;

  friend bool operator==(const SubstreamMatrix&, const SubstreamMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rate> cells_;
};

/**
 * Broadcast tree carrying one sub-stream.
 *
 * Without a relay the source sends straight to every leaf (height 1). With a
 * relay the source sends once to the relay, which fans out to the leaves
 * (height 2). {source} + {relay} + leaves partitions the site set.
 */
struct OverlayTree {
  SiteId source;
  std::optional<SiteId> relay;
  std::vector<SiteId> leaves;  // ascending
  Rate rate;

  int height() const;
  /// Number of sites `site` forwards this tree's data to.
  std::size_t children_of(SiteId site) const;
  /// Relay (if any) plus leaves.
  std::size_t receiver_count() const { return leaves.size() + (relay ? 1 : 0); }
  bool receives(SiteId site) const;

  friend bool operator==(const OverlayTree&, const OverlayTree&) = default;
};

}  // namespace shallowcast
