#include "shallowcast/verifier.hpp"

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace shallowcast {

namespace {

// Everything is measured in integer units of 1/granularity.
struct Instance {
  std::size_t n = 0;
  std::int64_t fanout = 0;
  std::vector<std::int64_t> demand;  // stream rate in units
  std::vector<std::int64_t> cap;     // floor(uplink in units); usage is integral
};

Instance discretize(const NetworkSpec& spec, unsigned granularity) {
  if (spec.size() > kBruteForceMaxSites) {
    throw std::invalid_argument("exhaustive search limited to " + std::to_string(kBruteForceMaxSites) + " sites, got " +
                                std::to_string(spec.size()));
  }
  if (granularity == 0) throw std::invalid_argument("granularity must be positive");
  Instance inst;
  inst.n = spec.size();
  inst.fanout = static_cast<std::int64_t>(relay_fanout(inst.n));
  const Rate g(granularity);
  for (std::size_t i = 0; i < inst.n; ++i) {
    Rate units = spec.rates[i] * g;
    if (!units.is_integer()) {
      throw std::invalid_argument("rate of site " + std::to_string(i) + " is not a multiple of 1/" +
                                  std::to_string(granularity));
    }
    inst.demand.push_back(units.numerator().convert_to<std::int64_t>());
    Rational cap_units = spec.uplink[i].value() * granularity;
    BigInt floor_units = boost::multiprecision::numerator(cap_units) / boost::multiprecision::denominator(cap_units);
    inst.cap.push_back(floor_units.convert_to<std::int64_t>());
  }
  return inst;
}

// Under the two-level layout every site receives each peer stream exactly
// once whatever the split, so downlink feasibility does not depend on the matrix.
bool downlinks_hold(const NetworkSpec& spec) {
  Rate total;
  for (const auto& r : spec.rates) total += r;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!spec.downlink[i].admits(total - spec.rates[i])) return false;
  }
  return true;
}

class Search {
 public:
  Search(const Instance& inst, const std::atomic<bool>* stop) : inst_(inst), stop_(stop), usage_(inst.n, 0) {
    slack_ = 0;
    for (auto c : inst.cap) slack_ += c;
    for (auto d : inst.demand) pending_ += d;
  }

  // Adds `units` of stream i relayed through j (direct when i == j).
  bool place(std::size_t i, std::size_t j, std::int64_t units) {
    const auto self = i == j ? static_cast<std::int64_t>(inst_.n - 1) : 1;
    usage_[i] += self * units;
    if (i != j) usage_[j] += inst_.fanout * units;
    const auto total = (self + (i != j ? inst_.fanout : 0)) * units;
    slack_ -= total;
    pending_ -= units;
    return usage_[i] <= inst_.cap[i] && usage_[j] <= inst_.cap[j] && bound_ok();
  }

  void unplace(std::size_t i, std::size_t j, std::int64_t units) {
    const auto self = i == j ? static_cast<std::int64_t>(inst_.n - 1) : 1;
    usage_[i] -= self * units;
    if (i != j) usage_[j] -= inst_.fanout * units;
    slack_ += (self + (i != j ? inst_.fanout : 0)) * units;
    pending_ += units;
  }

  /// Depth-first over (row, column); `left` is what remains of the current row.
  bool run(std::size_t row, std::size_t col, std::int64_t left) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (row == inst_.n) return true;
    if (col + 1 == inst_.n) {
      bool ok = place(row, col, left);
      bool found = ok && run(row + 1, 0, row + 1 < inst_.n ? inst_.demand[row + 1] : 0);
      unplace(row, col, left);
      return found;
    }
    for (std::int64_t x = left; x >= 0; --x) {
      bool ok = place(row, col, x);
      bool found = ok && run(row, col + 1, left - x);
      unplace(row, col, x);
      if (found) return true;
    }
    return false;
  }

  bool run_from_start() { return run(0, 0, inst_.demand[0]); }

  /// Applies a whole first row and searches the rest.
  bool run_with_first_row(const std::vector<std::int64_t>& first) {
    bool ok = true;
    for (std::size_t j = 0; j < inst_.n; ++j) ok = place(0, j, first[j]) && ok;
    bool found = ok && run(1, 0, inst_.n > 1 ? inst_.demand[1] : 0);
    for (std::size_t j = 0; j < inst_.n; ++j) unplace(0, j, first[j]);
    return found;
  }

 private:
  // Each unit of any sub-stream costs n - 1 units of uplink in total.
  bool bound_ok() const { return pending_ * static_cast<std::int64_t>(inst_.n - 1) <= slack_; }

  const Instance& inst_;
  const std::atomic<bool>* stop_;
  std::vector<std::int64_t> usage_;
  std::int64_t slack_ = 0;
  std::int64_t pending_ = 0;
};

void compositions(std::int64_t total, std::size_t parts, std::vector<std::int64_t>& current,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::int64_t x = total; x >= 0; --x) {
    current.push_back(x);
    compositions(total - x, parts, current, out);
    current.pop_back();
  }
}

}  // namespace

bool brute_force_feasibility_serial(const NetworkSpec& spec, unsigned granularity) {
  const Instance inst = discretize(spec, granularity);
  if (inst.n < 2) return true;
  if (!downlinks_hold(spec)) return false;
  Search search(inst, nullptr);
  return search.run_from_start();
}

bool brute_force_feasibility(const NetworkSpec& spec, unsigned granularity) {
  const Instance inst = discretize(spec, granularity);
  if (inst.n < 2) return true;
  if (!downlinks_hold(spec)) return false;

  std::vector<std::vector<std::int64_t>> first_rows;
  std::vector<std::int64_t> scratch;
  compositions(inst.demand[0], inst.n, scratch, first_rows);

  std::atomic<bool> found{false};
  const auto count = static_cast<std::int64_t>(first_rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    if (found.load(std::memory_order_relaxed)) continue;
    Search search(inst, &found);
    if (search.run_with_first_row(first_rows[static_cast<std::size_t>(k)])) found.store(true);
  }
  return found.load();
}

}  // namespace shallowcast
