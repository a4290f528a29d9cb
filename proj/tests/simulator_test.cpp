#include "shallowcast/simulator.hpp"

#include "support/spec_gen.hpp"

#include <gtest/gtest.h>

namespace shallowcast {
namespace {

using testing::figure1_spec;
using testing::SpecGen;

SimConfig rounds(std::size_t r) {
  SimConfig c;
  c.rounds = r;
  return c;
}

TEST(Simulate, Figure1SaturatesEveryUplink) {
  const auto p = plan(figure1_spec());
  const auto m = simulate(p, rounds(10));
  ASSERT_EQ(m.per_round_uplink.size(), 10u);
  // Round 1 has no relay traffic yet: v2 only sends its own stream.
  EXPECT_EQ(m.per_round_uplink[0], (std::vector<Rate>{2, 6, 6}));
  for (std::size_t t = 1; t < 10; ++t) {
    EXPECT_EQ(m.per_round_uplink[t], (std::vector<Rate>{2, 10, 6}));
    EXPECT_EQ(m.per_round_uplink[t], p.uplink_usage);
    EXPECT_EQ(m.per_round_downlink[t], p.downlink_usage);
  }
  EXPECT_EQ(m.max_delivery_hops, 2);
  EXPECT_EQ(m.aggregate_goodput, Rate(18));
  EXPECT_EQ(compare_aggregate_throughput(m, p.spec), Rate(18));
}

TEST(Simulate, DiagonalPlanNeedsOneHop) {
  const auto m = simulate(plan(make_spec({2, 2, 2}, {1, 1, 1})), rounds(5));
  EXPECT_EQ(m.max_delivery_hops, 1);
  for (const auto& row : m.delivered_fraction) {
    for (const auto& f : row) EXPECT_EQ(f, Rate(1));
  }
}

TEST(Simulate, PipelineDepthAtTwoRounds) {
  const auto p = plan(figure1_spec());
  const auto m = simulate(p, rounds(2));
  // v1 hears v3 partly through v2 (4 of 5 per round): first batch lands in round 2.
  EXPECT_EQ(m.first_batch_round[2][0], 2u);
  EXPECT_EQ(m.first_batch_round[2][1], 1u);
  EXPECT_EQ(m.first_batch_round[0][1], 1u);
  // Direct-only pairs are complete at the horizon; the relayed pair misses one batch.
  EXPECT_EQ(m.delivered_fraction[0][1], Rate(1));
  EXPECT_EQ(m.delivered_fraction[1][2], Rate(1));
  EXPECT_EQ(m.delivered_fraction[2][1], Rate(1));
  // v1 got 1+1 direct and 4 relayed out of 10 injected.
  EXPECT_EQ(m.delivered_fraction[2][0], Rate(6, 10));
}

TEST(Simulate, BatchUnitScalesVolumes) {
  const auto p = plan(figure1_spec());
  SimConfig c = rounds(4);
  c.batch_unit = Rate(1, 2);
  const auto m = simulate(p, c);
  EXPECT_EQ(m.per_round_uplink.back(), (std::vector<Rate>{1, 5, 3}));
  EXPECT_EQ(compare_aggregate_throughput(m, p.spec), Rate(18));
}

TEST(Simulate, RejectsShortHorizon) {
  const auto p = plan(figure1_spec());
  EXPECT_THROW(simulate(p, rounds(1)), std::invalid_argument);
  SimConfig c;
  c.batch_unit = Rate(0);
  EXPECT_THROW(simulate(p, c), std::invalid_argument);
}

TEST(Simulate, OverCapacityPlanAborts) {
  auto p = plan(figure1_spec());
  p.spec.uplink[1] = Rate(9);
  try {
    simulate(p, rounds(5));
    FAIL() << "expected CapacityExceeded";
  } catch (const CapacityExceeded& e) {
    EXPECT_EQ(e.round(), 2u);
    EXPECT_EQ(e.site(), SiteId{1});
    EXPECT_TRUE(e.uplink());
    EXPECT_EQ(e.overage(), Rate(1));
  }
  EXPECT_THROW(simulate_serial(p, rounds(5)), CapacityExceeded);
}

TEST(Simulate, EmptyPlanAndIdleStreams) {
  const auto single = plan(make_spec({3}, {5}));
  const auto m = simulate(single, rounds(3));
  EXPECT_EQ(compare_aggregate_throughput(m, single.spec), Rate(0));
  EXPECT_EQ(m.max_delivery_hops, 0);

  const auto idle = plan(make_spec({2, 10, 6}, {0, 0, 0}));
  EXPECT_EQ(compare_aggregate_throughput(simulate(idle, rounds(3)), idle.spec), Rate(0));
}

TEST(SimulateProperties, ParallelMatchesEventDrivenReference) {
  SpecGen gen(51);
  for (int trial = 0; trial < 80; ++trial) {
    const auto p = plan(gen.sustainable(gen.uniform(1, 20), gen.coin()));
    const auto cfg = rounds(gen.uniform(2, 6));
    EXPECT_EQ(simulate(p, cfg), simulate_serial(p, cfg)) << "trial " << trial;
  }
}

TEST(SimulateProperties, SteadyStateAndConservation) {
  SpecGen gen(52);
  for (int trial = 0; trial < 80; ++trial) {
    const auto spec = gen.sustainable(gen.uniform(1, 20), gen.coin());
    const auto p = plan(spec);
    const std::size_t horizon = gen.uniform(2, 6);
    const auto m = simulate(p, rounds(horizon));

    for (std::size_t t = 1; t < horizon; ++t) {
      EXPECT_EQ(m.per_round_uplink[t], p.uplink_usage);
      EXPECT_EQ(m.per_round_downlink[t], p.downlink_usage);
    }
    EXPECT_LE(m.max_delivery_hops, 2);

    // Relays receive every batch; leaves of relay trees miss the last one.
    Rate expected;
    for (const auto& tree : p.trees) {
      if (tree.relay) {
        expected += tree.rate * horizon;
        expected += tree.rate * tree.leaves.size() * (horizon - 1);
      } else {
        expected += tree.rate * tree.leaves.size() * horizon;
      }
    }
    EXPECT_EQ(m.total_received, expected);

    Rate total;
    for (const auto& r : spec.rates) total += r;
    EXPECT_EQ(compare_aggregate_throughput(m, spec), spec.size() < 2 ? Rate(0) : total * (spec.size() - 1));
  }
}

}  // namespace
}  // namespace shallowcast
