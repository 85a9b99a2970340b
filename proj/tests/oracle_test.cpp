#include "qaoa1/oracle.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qaoa1/error.hpp"
#include "qaoa1/random.hpp"
#include "test_util.hpp"

using namespace qaoa1;

namespace {

constexpr double kPi = std::numbers::pi;

Angles random_angles(SplitMix64& rng) {
  return {kPi * (2 * rng.uniform() - 1), kPi * (2 * rng.uniform() - 1)};
}

}  // namespace

TEST(Simulate, SingleSpinField) {
  const auto inst = IsingInstance::build(1, {}, {1.0});
  EXPECT_NEAR(simulate_qaoa_p1(inst, {kPi / 4, kPi / 4}), 1.0, 1e-15);
  EXPECT_NEAR(simulate_qaoa_p1(inst, {kPi / 4, kPi / 4}), expect_vertex(inst, 0, {kPi / 4, kPi / 4}),
              1e-15);
}

TEST(Simulate, SingleEdgeOptimum) {
  EXPECT_NEAR(simulate_qaoa_p1(IsingInstance::build(2, {{0, 1, 1.0}}), {-kPi / 8, kPi / 4}), -1.0,
              1e-15);
}

TEST(Simulate, MatchesAnalyticOnRandomInstances) {
  SplitMix64 rng(31337);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto inst = test::random_instance(k, 2 + k % 11);
    const Angles a = random_angles(rng);
    EXPECT_NEAR(simulate_qaoa_p1(inst, a), expect_total(inst, a).total, 1e-9) << k;
  }
}

TEST(Simulate, NotBelowGroundEnergy) {
  SplitMix64 rng(5);
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto inst = test::random_instance(500 + k, 7);
    const double e0 = ground_state(inst).energy;
    for (int j = 0; j < 5; ++j) EXPECT_GE(simulate_qaoa_p1(inst, random_angles(rng)), e0 - 1e-12);
  }
}

TEST(Simulate, Capacity) {
  const auto inst = IsingInstance::build(21, {{0, 20, 1.0}});
  EXPECT_THROW(simulate_qaoa_p1(inst, {0.1, 0.2}), CapacityError);
  const auto big = IsingInstance::build(25, {{0, 24, 1.0}});
  EXPECT_THROW(simulate_qaoa_p1(big, {0.1, 0.2}, 30), CapacityError);
}

TEST(StateVector, NormPreserved) {
  const auto inst = test::random_instance(9, 10);
  const auto energies = energy_table(inst);
  StateVector psi(10);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  psi.apply_phase(energies, 0.731);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  psi.apply_mixer(-0.412);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
}

TEST(StateVector, MixerOnBasisState) {
  // Uniform state is an X eigenstate: the mixer adds the phase exp(-i beta).
  StateVector psi(1);
  psi.apply_mixer(kPi / 4);
  const auto& a = psi.amplitudes();
  EXPECT_NEAR(std::norm(a[0]), 0.5, 1e-15);
  EXPECT_NEAR(std::arg(a[0]), -kPi / 4, 1e-15);
}

TEST(EnergyTable, BitConvention) {
  const auto inst = IsingInstance::build(2, {{0, 1, 1.0}}, {2.0, 0.0});
  const auto e = energy_table(inst);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], 3.0);   // (+1, +1)
  EXPECT_EQ(e[1], -3.0);  // (-1, +1)
  EXPECT_EQ(e[2], 1.0);   // (+1, -1)
  EXPECT_EQ(e[3], -1.0);  // (-1, -1)
}

// ---------------------------------------------------------------------------

TEST(GroundState, SingleEdge) {
  const auto g = ground_state(IsingInstance::build(2, {{0, 1, 1.0}}));
  EXPECT_EQ(g.energy, -1.0);
  EXPECT_EQ(g.spins, (std::vector<int>{1, -1}));
}

TEST(GroundState, FrustratedTriangle) {
  const auto g = ground_state(IsingInstance::build(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}));
  EXPECT_EQ(g.energy, -1.0);
  EXPECT_EQ(g.spins, (std::vector<int>{1, 1, -1}));
}

TEST(GroundState, FerromagneticPath) {
  const auto g = ground_state(IsingInstance::build(3, {{0, 1, -1.0}, {1, 2, -1.0}}));
  EXPECT_EQ(g.energy, -2.0);
  EXPECT_EQ(g.spins, (std::vector<int>{1, 1, 1}));
}

TEST(GroundState, MatchesEnumeration) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto inst = test::random_instance(900 + k, 9);
    double best = INFINITY;
    for (std::uint64_t z = 0; z < (1u << 9); ++z) best = std::min(best, inst.energy(z));
    const auto g = ground_state(inst);
    EXPECT_NEAR(g.energy, best, 1e-12);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      if (g.spins[i] < 0) bits |= std::uint64_t{1} << i;
    }
    EXPECT_EQ(inst.energy(bits), g.energy);
  }
}

TEST(GroundState, Capacity) {
  EXPECT_THROW(ground_state(IsingInstance::build(31, {{0, 30, 1.0}})), CapacityError);
}

// ---------------------------------------------------------------------------

TEST(Histogram, BetaZeroIsUniform) {
  const auto inst = IsingInstance::build(3, {{0, 1, 1.0}, {1, 2, 2.0}}, {0.5, 0.0, 0.0});
  const auto h = sample_energy_histogram(inst, {0.0, 0.37}, 1000);
  const auto e = energy_table(inst);
  double total = 0;
  for (double m : h.mass) total += m;
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (double m : h.mass) {
    const double k = std::round(m * 8);
    EXPECT_NEAR(m, k / 8, 1e-15);
  }
  double mean = 0;
  for (double x : e) mean += x / 8;
  EXPECT_NEAR(h.mean, mean, 1e-12);
}

TEST(Histogram, SingleEdgeOptimumIsPointMass) {
  const auto h = sample_energy_histogram(IsingInstance::build(2, {{0, 1, 1.0}}), {-kPi / 8, kPi / 4}, 4);
  EXPECT_EQ(h.lower, -1.0);
  EXPECT_EQ(h.upper, 1.0);
  EXPECT_NEAR(h.mass.front(), 1.0, 1e-15);
  EXPECT_NEAR(h.mass.back(), 0.0, 1e-15);
}

TEST(Histogram, MeanIsExpectation) {
  SplitMix64 rng(77);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto inst = test::random_instance(1200 + k, 3 + k % 8);
    const Angles a = random_angles(rng);
    const auto h = sample_energy_histogram(inst, a, 16);
    EXPECT_NEAR(h.mean, simulate_qaoa_p1(inst, a), 1e-12);
    EXPECT_EQ(h.mass.size(), 16u);
  }
}

TEST(Histogram, Errors) {
  const auto inst = IsingInstance::build(2, {{0, 1, 1.0}});
  EXPECT_THROW(sample_energy_histogram(inst, {0.1, 0.1}, 0), ParameterError);
  EXPECT_THROW(sample_energy_histogram(inst, {0.1, 0.1}, 4, 1), CapacityError);
}

// ---------------------------------------------------------------------------

TEST(Verify, DefaultSweepPasses) {
  const auto r = verify_equivalence({});
  EXPECT_EQ(r.cases, 50u);
  EXPECT_EQ(r.passed, 50u);
  EXPECT_LT(r.max_error, 1e-9);
}

TEST(Verify, CasesAreReproducible) {
  VerifyOptions o;
  o.seed = 12;
  o.n_max = 6;
  for (std::size_t k = 0; k < 10; ++k) {
    const auto inst = verify_case_instance(o, k);
    EXPECT_EQ(verify_case_instance(o, k), inst);
    EXPECT_GE(inst.num_vertices(), 2u);
    EXPECT_LE(inst.num_vertices(), 6u);
    EXPECT_TRUE(inst.integer_weights());
  }
  EXPECT_EQ(verify_equivalence(o).max_error, verify_equivalence(o).max_error);
}
