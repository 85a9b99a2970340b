#include "qaoa1/analytic.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qaoa1/error.hpp"
#include "qaoa1/oracle.hpp"
#include "qaoa1/random.hpp"
#include "test_util.hpp"

using namespace qaoa1;

namespace {

constexpr double pi = std::numbers::pi;

IsingInstance single_edge(double j, double hi = 0.0, double hj = 0.0) {
  return IsingInstance::build(2, {{0, 1, j}}, {hi, hj});
}

}  // namespace

TEST(ExpectVertex, IsolatedUnitField) {
  const auto inst = IsingInstance::build(1, {}, {1.0});
  EXPECT_NEAR(expect_vertex(inst, 0, {pi / 4, pi / 4}), 1.0, 1e-15);
}

TEST(ExpectVertex, ZeroAtBetaZero) {
  const auto inst = test::random_instance(7, 3);
  for (Vertex i = 0; i < inst.num_vertices(); ++i) {
    EXPECT_EQ(expect_vertex(inst, i, {0.0, 0.7}), 0.0);
  }
}

TEST(ExpectVertex, IncidentEdgeAtQuarterPiVanishes) {
  const auto inst = single_edge(1.0, 1.0, 0.0);
  EXPECT_NEAR(expect_vertex(inst, 0, {pi / 4, pi / 4}), 0.0, 1e-15);
}

TEST(ExpectVertex, OutOfRange) {
  const auto inst = single_edge(1.0);
  EXPECT_THROW(expect_vertex(inst, 2, {0.1, 0.2}), RangeError);
}

TEST(ExpectEdge, SingleEdgeMaximum) {
  EXPECT_NEAR(expect_edge(single_edge(1.0), 0, {pi / 8, pi / 4}), 1.0, 1e-15);
}

TEST(ExpectEdge, ZeroAtGammaZero) {
  const auto inst = test::random_instance(11, 6);
  for (std::size_t e = 0; e < inst.num_edges(); ++e) {
    EXPECT_EQ(expect_edge(inst, e, {0.4, 0.0}), 0.0);
  }
}

TEST(ExpectEdge, TriangleMatchesOracle) {
  const auto tri = IsingInstance::build(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  const Angles a{pi / 8, pi / 8};
  const auto bd = expect_total(tri, a);
  // Symmetric instance: every edge carries a third of the energy.
  const double sim = simulate_qaoa_p1(tri, a);
  for (std::size_t e = 0; e < 3; ++e) {
    EXPECT_NEAR(expect_edge(tri, e, a), sim / 3.0, 1e-12);
  }
  EXPECT_NEAR(bd.total, sim, 1e-12);
}

TEST(ExpectEdge, OutOfRange) {
  EXPECT_THROW(expect_edge(single_edge(1.0), 1, {0.1, 0.2}), RangeError);
}

TEST(ExpectTotal, GroundEnergyOfSingleEdge) {
  EXPECT_NEAR(expect_total(single_edge(1.0), {-pi / 8, pi / 4}).total, -1.0, 1e-15);
}

TEST(ExpectTotal, BreakdownSumsToTotal) {
  const auto inst = test::random_instance(3, 9);
  const auto bd = expect_total(inst, {0.3, 0.9});
  double s = 0.0;
  for (double x : bd.vertex_terms) s += x;
  for (double x : bd.edge_terms) s += x;
  EXPECT_EQ(s, bd.total);
  EXPECT_EQ(bd.vertex_terms.size(), inst.num_vertices());
  EXPECT_EQ(bd.edge_terms.size(), inst.num_edges());
}

TEST(ExpectTotal, ScalarAndBatchPathsAgreeBitwise) {
  const auto inst = test::random_instance(5, 10);
  const Angles a{-0.37, 1.21};
  const auto bd = expect_total(inst, a);
  for (Vertex i = 0; i < inst.num_vertices(); ++i) {
    EXPECT_EQ(bd.vertex_terms[i], expect_vertex(inst, i, a));
  }
  for (std::size_t e = 0; e < inst.num_edges(); ++e) {
    EXPECT_EQ(bd.edge_terms[e], expect_edge(inst, e, a));
  }
}

TEST(ExpectTotal, TermsAreBounded) {
  SplitMix64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto inst = test::random_instance(100 + t, 8);
    const Angles a{(rng.uniform() - 0.5) * 2 * pi, (rng.uniform() - 0.5) * 2 * pi};
    const auto bd = expect_total(inst, a);
    for (Vertex i = 0; i < inst.num_vertices(); ++i) {
      EXPECT_LE(std::fabs(bd.vertex_terms[i]), std::fabs(inst.field(i)) + 1e-12);
    }
    for (std::size_t e = 0; e < inst.num_edges(); ++e) {
      EXPECT_LE(std::fabs(bd.edge_terms[e]), std::fabs(inst.edge(e).coupling) + 1e-12);
    }
  }
}

TEST(ExpectTotal, MatchesStateVectorOracle) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(9);
    const auto inst = test::random_instance(500 + t, n);
    for (int k = 0; k < 5; ++k) {
      const Angles a{(rng.uniform() - 0.5) * pi, (rng.uniform() - 0.5) * 2 * pi};
      EXPECT_NEAR(expect_total(inst, a).total, simulate_qaoa_p1(inst, a), 1e-9);
    }
  }
}

TEST(ExpectTotal, CompensatedSumOnLargeInstances) {
  // Above 10^4 edges the total is a compensated sum; compare with a long
  // double reference.
  GeneratorSpec spec;
  spec.structure = gen::ErdosLike{12000};
  spec.couplings = gen::Gaussian{1.0};
  spec.fields = gen::Gaussian{1.0};
  spec.seed = 3;
  const auto inst = generate(spec, 400);
  const auto bd = expect_total(inst, {0.2, 0.15});
  long double ref = 0.0L;
  for (double x : bd.vertex_terms) ref += x;
  for (double x : bd.edge_terms) ref += x;
  EXPECT_NEAR(bd.total, static_cast<double>(ref), 1e-12 * std::fabs(static_cast<double>(ref)) + 1e-12);
}

TEST(ReduceAngle, OnlyHugeArgumentsAreReduced) {
  EXPECT_EQ(reduce_angle(12.5), 12.5);
  EXPECT_EQ(reduce_angle(-1e7), -1e7);
  const double big = 1e9 + 0.25;
  const double r = reduce_angle(big);
  EXPECT_LE(std::fabs(r), pi);
  EXPECT_NEAR(std::cos(r), std::cos(big), 1e-6);
}

// ---------------------------------------------------------------------------
// Special cases

TEST(MaxCut, SingleEdge) {
  EXPECT_NEAR(expect_edge_maxcut(single_edge(-1.0), 0, {-pi / 8, pi / 4}), -1.0, 1e-15);
}

TEST(MaxCut, TriangleMatchesGeneral) {
  const auto tri = IsingInstance::build(3, {{0, 1, -1.0}, {0, 2, -1.0}, {1, 2, -1.0}});
  SplitMix64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const Angles a{rng.uniform() * pi - pi / 2, rng.uniform() * pi};
    for (std::size_t e = 0; e < 3; ++e) {
      EXPECT_NEAR(expect_edge_maxcut(tri, e, a), expect_edge(tri, e, a), 1e-14);
    }
  }
}

TEST(MaxCut, ZeroAtGammaZero) {
  EXPECT_EQ(expect_edge_maxcut(single_edge(-1.0), 0, {0.3, 0.0}), 0.0);
}

TEST(MaxCut, RejectsOtherInstances) {
  EXPECT_THROW(expect_edge_maxcut(single_edge(1.0), 0, {0.1, 0.1}), PreconditionError);
  EXPECT_THROW(expect_edge_maxcut(single_edge(-1.0, 1.0), 0, {0.1, 0.1}), PreconditionError);
}

TEST(P5, SingleVertex) {
  const auto inst = IsingInstance::build(1, {}, {1.0});
  EXPECT_NEAR(expect_p5(inst, {pi / 4, pi / 4}).vertex_terms[0], 1.0, 1e-15);
}

TEST(P5, PathMatchesGeneral) {
  const auto p3 = IsingInstance::build(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {1.0, 1.0, 1.0});
  SplitMix64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Angles a{rng.uniform() * pi - pi / 2, rng.uniform() * pi};
    const auto fast = expect_p5(p3, a);
    const auto full = expect_total(p3, a);
    EXPECT_NEAR(fast.total, full.total, 1e-13);
  }
}

TEST(P5, ZeroAtBetaZero) {
  const auto p3 = IsingInstance::build(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {1.0, 1.0, 1.0});
  EXPECT_EQ(expect_p5(p3, {0.0, 0.8}).total, 0.0);
}

TEST(P5, RejectsOtherInstances) {
  EXPECT_THROW(expect_p5(single_edge(1.0), {0.1, 0.1}), PreconditionError);
  EXPECT_THROW(expect_p5(single_edge(-1.0, 1.0, 1.0), {0.1, 0.1}), PreconditionError);
}

TEST(FieldOnly, SingleSpin) {
  const auto inst = IsingInstance::build(1, {}, {2.0});
  EXPECT_NEAR(expect_field_only(inst, {pi / 4, pi / 8}).total, 2.0, 1e-15);
}

TEST(FieldOnly, EvenInField) {
  const auto inst = IsingInstance::build(2, {}, {1.0, -1.0});
  const auto bd = expect_field_only(inst, {0.3, 1.1});
  EXPECT_EQ(bd.vertex_terms[0], bd.vertex_terms[1]);
}

TEST(FieldOnly, MatchesGeneral) {
  const auto inst = IsingInstance::build(3, {}, {1.0, 2.0, 3.0});
  const Angles a{-pi / 4, 0.3};
  EXPECT_NEAR(expect_field_only(inst, a).total, expect_total(inst, a).total, 1e-15);
}

TEST(FieldOnly, RejectsCouplings) {
  EXPECT_THROW(expect_field_only(single_edge(1.0), {0.1, 0.1}), PreconditionError);
}

TEST(TriangleFree, SingleEdgeWithFields) {
  const auto inst = single_edge(1.0, 1.0, 1.0);
  for (double g : {0.1, 0.7, 2.3}) {
    EXPECT_NEAR(expect_edge_triangle_free(inst, 0, {pi / 4, g}),
                expect_edge(inst, 0, {pi / 4, g}), 1e-15);
  }
}

TEST(TriangleFree, StarMatchesGeneral) {
  const auto star = IsingInstance::build(
      5, {{0, 1, 1.0}, {0, 2, -2.0}, {0, 3, 0.5}, {0, 4, 1.5}}, {0.3, -1.0, 2.0, 0.0, 1.0});
  SplitMix64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const Angles a{rng.uniform() * pi - pi / 2, rng.uniform() * pi};
    for (std::size_t e = 0; e < star.num_edges(); ++e) {
      EXPECT_NEAR(expect_edge_triangle_free(star, e, a), expect_edge(star, e, a), 1e-14);
    }
  }
}

TEST(TriangleFree, ZeroAtGammaZero) {
  EXPECT_EQ(expect_edge_triangle_free(single_edge(1.0, 1.0, 1.0), 0, {0.5, 0.0}), 0.0);
}

TEST(TriangleFree, RejectsTriangle) {
  const auto tri = IsingInstance::build(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  EXPECT_THROW(expect_edge_triangle_free(tri, 0, {0.1, 0.1}), PreconditionError);
}

TEST(Complete, PaddedEdgeMatchesGeneral) {
  const auto inst = IsingInstance::build(5, {{1, 3, 1.5}}, {0.0, 0.5, 0.0, -1.0, 2.0});
  SplitMix64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const Angles a{rng.uniform() * pi - pi / 2, rng.uniform() * pi};
    EXPECT_NEAR(expect_edge_complete(inst, 0, a), expect_edge(inst, 0, a), 1e-15);
  }
}

TEST(Complete, K4MatchesGeneral) {
  const auto k4 = IsingInstance::build(
      4, {{0, 1, 1.0}, {0, 2, -1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, -1.0}, {2, 3, -1.0}});
  SplitMix64 rng(6);
  for (int k = 0; k < 20; ++k) {
    const Angles a{rng.uniform() * pi - pi / 2, rng.uniform() * pi};
    for (std::size_t e = 0; e < 6; ++e) {
      EXPECT_NEAR(expect_edge_complete(k4, e, a), expect_edge(k4, e, a), 1e-14);
    }
  }
}

TEST(Complete, ZeroAtBetaZero) {
  const auto inst = test::random_instance(31, 6);
  for (std::size_t e = 0; e < inst.num_edges(); ++e) {
    EXPECT_EQ(expect_edge_complete(inst, e, {0.0, 0.9}), 0.0);
  }
}

TEST(ExpectTotalVia, AllPathsAgreeOnMaxCut) {
  const auto inst = IsingInstance::build(
      4, {{0, 1, -1.0}, {1, 2, -1.0}, {2, 3, -1.0}, {0, 3, -1.0}});
  const Angles a{0.4, 0.6};
  const double ref = expect_total(inst, a).total;
  EXPECT_NEAR(expect_total_via(inst, a, EdgePath::kMaxCut).total, ref, 1e-14);
  EXPECT_NEAR(expect_total_via(inst, a, EdgePath::kTriangleFree).total, ref, 1e-14);
  EXPECT_NEAR(expect_total_via(inst, a, EdgePath::kComplete).total, ref, 1e-14);
}
