#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "ling/builders.hpp"
#include "ling/evaluate.hpp"
#include "ling/io.hpp"
#include "ling/metrics.hpp"
#include "ling/transform.hpp"
#include "ling/verify.hpp"
#include "support/oracles.hpp"

namespace ling {
namespace {

constexpr int kTrials = 200;

unsigned ceil_log2(std::size_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

TEST(Property, DecomposePreservesFunction) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < kTrials; ++trial) {
    const unsigned inputs = 1 + rng() % 12;
    const Netlist n = oracle::random_netlist(rng, inputs, 5 + rng() % 60, 7);
    const Netlist d = decompose_fanin2(n);
    EXPECT_LE(depth_profile(d).max_fanin, 2u);
    EXPECT_TRUE(equivalence_check(n, d).passed()) << to_json(n);
    // Taps keep their function too.
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << inputs); v += 1 + rng() % 7) {
      BitVector bits;
      for (unsigned i = 0; i < inputs; ++i) bits.push_back((v >> i) & 1);
      EXPECT_EQ(evaluate_taps(n, bits), evaluate_taps(d, bits));
    }
  }
}

TEST(Property, DecomposePreservesFunctionBeyondExhaustiveCap) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Netlist n = oracle::random_netlist(rng, 21 + rng() % 20, 80, 9);
    EXPECT_TRUE(equivalence_check(n, decompose_fanin2(n), {SweepMode::random, 100000, 1}).passed());
  }
}

TEST(Property, DecomposedDepthBound) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Netlist n = oracle::random_netlist(rng, 1 + rng() % 8, 5 + rng() % 60, 9);
    const Metrics before = depth_profile(n);
    const Metrics after = depth_profile(decompose_fanin2(n));
    const unsigned per_level = std::max(1u, ceil_log2(before.max_fanin));
    for (std::size_t k = 0; k < before.depth_per_output.size(); ++k) {
      EXPECT_LE(after.depth_per_output[k].second, before.depth_per_output[k].second * per_level);
    }
  }
}

TEST(Property, JsonRoundTripIsIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Netlist n = oracle::random_netlist(rng, 1 + rng() % 8, rng() % 40, 6);
    EXPECT_EQ(netlist_from_json(to_json(n)), n);
  }
  for (const AdderSpec& s : {AdderSpec{Family::ling_grouped, 12, 3, true, SumForm::mux_form},
                             AdderSpec{Family::cla_flat, 5, 4, false, SumForm::xor_form}}) {
    const Netlist n = build(s);
    EXPECT_EQ(netlist_from_json(to_json(n)), n);
  }
}

TEST(Property, PackedEvaluationMatchesScalar) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned inputs = 1 + rng() % 10;
    const Netlist n = oracle::random_netlist(rng, inputs, 40, 5);
    std::vector<std::uint64_t> lanes(inputs);
    for (auto& lane : lanes) lane = rng();
    const auto packed = evaluate_packed(n, lanes);
    for (unsigned k = 0; k < 64; ++k) {
      BitVector bits;
      for (unsigned i = 0; i < inputs; ++i) bits.push_back((lanes[i] >> k) & 1);
      const BitVector nets = evaluate_nets(n, bits);
      for (std::size_t id = 0; id < n.size(); ++id) ASSERT_EQ(nets[id], (packed[id] >> k) & 1);
    }
  }
}

TEST(Property, BuildersAreDeterministic) {
  const AdderSpec s{Family::ling_grouped, 16, 4, true, SumForm::mux_form};
  EXPECT_EQ(to_json(build(s)), to_json(build(s)));
}

TEST(Property, GeneratePropagateAndCarryTaps) {
  // g[i] implies p[i]; c[i] taps match integer carries for every family.
  std::mt19937_64 rng(31);
  for (const AdderSpec& s : {AdderSpec{Family::rca, 9, 4, true, SumForm::xor_form},
                             AdderSpec{Family::cla_flat, 9, 4, true, SumForm::xor_form},
                             AdderSpec{Family::ling_flat, 9, 4, true, SumForm::mux_form},
                             AdderSpec{Family::cla_grouped, 9, 3, true, SumForm::xor_form},
                             AdderSpec{Family::ling_grouped, 9, 3, true, SumForm::xor_form}}) {
    const Netlist n = build(s);
    for (int t = 0; t < 500; ++t) {
      const OperandVector v{rng() & 0x1FF, rng() & 0x1FF, (rng() & 1) != 0};
      const BitVector nets = evaluate_nets(n, adder_assignment(n, v));
      for (unsigned i = 0; i < 9; ++i) {
        EXPECT_LE(nets[n.tap_or_throw(oracle::lit("g", i))], nets[n.tap_or_throw(oracle::lit("p", i))]);
        EXPECT_EQ(bool(nets[n.tap_or_throw(oracle::lit("c", i))]), oracle::carry_out_of(i, v.a, v.b, v.cin))
            << describe(s) << " bit " << i;
      }
    }
  }
}

}  // namespace
}  // namespace ling
