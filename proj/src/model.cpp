#include "shallowcast/model.hpp"

#include <algorithm>

namespace shallowcast {

NetworkSpec validate_spec(NetworkSpec spec) {
  if (spec.n == 0) throw SpecError("network must contain at least one site");
  auto check = [&](std::size_t len, const char* what) {
    if (len != spec.n) {
      throw SpecError(std::string(what) + " has " + std::to_string(len) + " entries, expected " +
                      std::to_string(spec.n));
    }
  };
  check(spec.uplink.size(), "uplink");
  check(spec.downlink.size(), "downlink");
  check(spec.rates.size(), "rates");
  return spec;
}

NetworkSpec make_spec(std::vector<Rate> uplink, std::vector<Rate> rates, std::vector<Bound> downlink) {
  NetworkSpec spec;
  spec.n = rates.size();
  if (downlink.empty()) downlink.assign(spec.n, Bound::unbounded());
  spec.uplink = std::move(uplink);
  spec.downlink = std::move(downlink);
  spec.rates = std::move(rates);
  return validate_spec(std::move(spec));
}

SubstreamMatrix SubstreamMatrix::from_rows(const std::vector<std::vector<Rate>>& rows) {
  SubstreamMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw SpecError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rate SubstreamMatrix::row_sum(std::size_t i) const {
  Rate sum;
  for (std::size_t j = 0; j < n_; ++j) sum += at(i, j);
  return sum;
}

std::vector<std::vector<Rate>> SubstreamMatrix::rows() const {
  std::vector<std::vector<Rate>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(cells_.begin() + i * n_, cells_.begin() + (i + 1) * n_);
  return out;
}

int OverlayTree::height() const {
  if (relay) return leaves.empty() ? 1 : 2;
  return leaves.empty() ? 0 : 1;
}

std::size_t OverlayTree::children_of(SiteId site) const {
  if (site == source) return relay ? 1 : leaves.size();
  if (relay && site == *relay) return leaves.size();
  return 0;
}

bool OverlayTree::receives(SiteId site) const {
  if (relay && site == *relay) return true;
  return std::binary_search(leaves.begin(), leaves.end(), site);
}

}  // namespace shallowcast
