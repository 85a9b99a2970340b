#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qaoa1/instance.hpp"

namespace qaoa1 {

// QAOA angles in radians: beta for the mixer, gamma for the cost unitary.
struct Angles {
  double beta = 0.0;
  double gamma = 0.0;
};

struct ExpectationBreakdown {
  std::vector<double> vertex_terms;  // <C_i>, vertex order
  std::vector<double> edge_terms;    // <C_ij>, canonical edge order
  double total = 0.0;                // F(beta, gamma)
};

// Sums vertex terms then edge terms in index order. Uses Neumaier
// compensation once the instance has more than 10^4 edges.
double sum_terms(std::span<const double> vertex_terms,
                 std::span<const double> edge_terms);

// Trigonometric argument with reduction modulo 2*pi for |x| > 1e8.
double reduce_angle(double x) noexcept;

// Single-layer expectation for an arbitrary Ising instance.
//
// F factors in beta as
//   F = sin(2b) * sum_i a_i(g) + sum_e [sin(4b) * l_e(g) - sin^2(2b) * q_e(g)]
// so Evaluator computes the gamma-dependent coefficients once per gamma and
// then evaluates any number of betas. expect_total and landscape scans both go
// through this class, so their values agree bit for bit.
class Evaluator {
 public:
  explicit Evaluator(const IsingInstance& instance);

  void prepare(double gamma);
  double gamma() const noexcept { return gamma_; }

  double total(double beta) const;
  ExpectationBreakdown breakdown(double beta) const;

  std::span<const double> vertex_coefficients() const noexcept { return vertex_; }
  std::span<const double> edge_linear() const noexcept { return linear_; }
  std::span<const double> edge_quadratic() const noexcept { return quadratic_; }

 private:
  const IsingInstance* instance_;
  double gamma_ = 0.0;
  std::vector<double> cos_;  // cos(2 g J) per adjacency entry
  std::vector<double> sin_;  // sin(2 g J) per adjacency entry
  std::vector<double> vertex_;
  std::vector<double> linear_;
  std::vector<double> quadratic_;
  mutable std::vector<double> vertex_scratch_;
  mutable std::vector<double> edge_scratch_;
};

double expect_vertex(const IsingInstance& instance, Vertex i, const Angles& angles);
double expect_edge(const IsingInstance& instance, std::size_t e, const Angles& angles);
ExpectationBreakdown expect_total(const IsingInstance& instance, const Angles& angles);

// Closed form for Max-Cut instances (h = 0, every J = -1) in terms of the
// degrees and common-neighbor count of the edge endpoints.
double expect_edge_maxcut(const IsingInstance& instance, std::size_t e,
                          const Angles& angles);

// Closed form for the P5 problem (every h = 1, every J = 1).
ExpectationBreakdown expect_p5(const IsingInstance& instance, const Angles& angles);

// Instances without couplings.
ExpectationBreakdown expect_field_only(const IsingInstance& instance,
                                       const Angles& angles);

// Edge term when the endpoints share no neighbor.
double expect_edge_triangle_free(const IsingInstance& instance, std::size_t e,
                                 const Angles& angles);

// Edge term with products over every k != i, j, treating absent couplings as
// 0. O(n) per edge; a cross-check path.
double expect_edge_complete(const IsingInstance& instance, std::size_t e,
                            const Angles& angles);

enum class EdgePath { kGeneral, kMaxCut, kTriangleFree, kComplete };

// Total with vertex terms from the general formula and edge terms from the
// chosen path.
ExpectationBreakdown expect_total_via(const IsingInstance& instance,
                                      const Angles& angles, EdgePath path);

}  // namespace qaoa1
