#include "qaoa1/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qaoa1/error.hpp"

namespace qaoa1 {

namespace {

constexpr std::size_t kCompensationThreshold = 10000;
constexpr double kReductionThreshold = 1e8;

struct Trig {
  double cos;
  double sin;
};

Trig trig_of(double x) {
  const double r = reduce_angle(x);
  return {std::cos(r), std::sin(r)};
}

double cos_of(double x) { return std::cos(reduce_angle(x)); }
double sin_of(double x) { return std::sin(reduce_angle(x)); }

// gamma-dependent part of a vertex term: h sin(2 g h) prod_k cos(2 g J_ik).
template <typename TrigAt>
double vertex_coefficient(const IsingInstance& inst, Vertex i, double gamma,
                          TrigAt&& trig_at) {
  const double h = inst.field(i);
  if (h == 0.0) return 0.0;
  double prod = 1.0;
  const std::size_t base = inst.adjacency_offset(i);
  const auto adj = inst.neighbors(i);
  for (std::size_t k = 0; k < adj.size(); ++k) {
    prod *= trig_at(base + k, adj[k].coupling).cos;
  }
  return h * sin_of(2.0 * gamma * h) * prod;
}

struct EdgeCoefficients {
  double linear;     // multiplies sin(4 beta)
  double quadratic;  // multiplies -sin^2(2 beta)
};

// One merge pass over the sorted adjacency lists of i and j splits the
// neighborhood into i-only, j-only and shared vertices.
template <typename TrigAt>
EdgeCoefficients edge_coefficients(const IsingInstance& inst, const Edge& edge,
                                   double gamma, TrigAt&& trig_at) {
  const Vertex i = edge.u;
  const Vertex j = edge.v;
  const double jij = edge.coupling;
  const auto a = inst.neighbors(i);
  const auto b = inst.neighbors(j);
  const std::size_t base_a = inst.adjacency_offset(i);
  const std::size_t base_b = inst.adjacency_offset(j);

  double only_i = 1.0;  // prod over (ik) in E, (jk) not in E, k != j
  double only_j = 1.0;
  double shared_i = 1.0;  // prod over shared k of cos(2 g J_ik)
  double shared_j = 1.0;
  double shared_plus = 1.0;   // prod cos(2 g (J_ik + J_jk))
  double shared_minus = 1.0;  // prod cos(2 g (J_ik - J_jk))

  std::size_t p = 0;
  std::size_t q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].vertex < b[q].vertex)) {
      if (a[p].vertex != j) only_i *= trig_at(base_a + p, a[p].coupling).cos;
      ++p;
    } else if (p == a.size() || b[q].vertex < a[p].vertex) {
      if (b[q].vertex != i) only_j *= trig_at(base_b + q, b[q].coupling).cos;
      ++q;
    } else {
      const Trig ti = trig_at(base_a + p, a[p].coupling);
      const Trig tj = trig_at(base_b + q, b[q].coupling);
      shared_i *= ti.cos;
      shared_j *= tj.cos;
      shared_plus *= ti.cos * tj.cos - ti.sin * tj.sin;
      shared_minus *= ti.cos * tj.cos + ti.sin * tj.sin;
      ++p;
      ++q;
    }
  }

  const double hi = inst.field(i);
  const double hj = inst.field(j);
  const double linear =
      0.5 * jij * sin_of(2.0 * gamma * jij) *
      (cos_of(2.0 * gamma * hi) * only_i * shared_i +
       cos_of(2.0 * gamma * hj) * only_j * shared_j);
  const double quadratic =
      0.5 * jij * only_i * only_j *
      (cos_of(2.0 * gamma * (hi + hj)) * shared_plus -
       cos_of(2.0 * gamma * (hi - hj)) * shared_minus);
  return {linear, quadratic};
}

auto direct_trig(double gamma) {
  return [gamma](std::size_t, double coupling) { return trig_of(2.0 * gamma * coupling); };
}

struct BetaFactors {
  double s2;   // sin(2 beta)
  double s4;   // sin(4 beta)
  double s2s;  // sin^2(2 beta)
};

BetaFactors beta_factors(double beta) {
  const double s2 = sin_of(2.0 * beta);
  return {s2, sin_of(4.0 * beta), s2 * s2};
}

void check_edge_index(const IsingInstance& inst, std::size_t e) {
  if (e >= inst.num_edges()) {
    throw RangeError("edge index " + std::to_string(e) + " out of range");
  }
}

ExpectationBreakdown finish(std::vector<double> vertex_terms,
                            std::vector<double> edge_terms) {
  ExpectationBreakdown out;
  out.total = sum_terms(vertex_terms, edge_terms);
  out.vertex_terms = std::move(vertex_terms);
  out.edge_terms = std::move(edge_terms);
  return out;
}

}  // namespace

double reduce_angle(double x) noexcept {
  if (std::fabs(x) > kReductionThreshold) {
    return std::remainder(x, 2.0 * std::numbers::pi);
  }
  return x;
}

double sum_terms(std::span<const double> vertex_terms,
                 std::span<const double> edge_terms) {
  if (edge_terms.size() <= kCompensationThreshold) {
    double s = 0.0;
    for (double x : vertex_terms) s += x;
    for (double x : edge_terms) s += x;
    return s;
  }
  double s = 0.0;
  double c = 0.0;
  auto add = [&](double x) {
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  };
  for (double x : vertex_terms) add(x);
  for (double x : edge_terms) add(x);
  return s + c;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const IsingInstance& instance)
    : instance_(&instance),
      cos_(instance.adjacency_size()),
      sin_(instance.adjacency_size()),
      vertex_(instance.num_vertices()),
      linear_(instance.num_edges()),
      quadratic_(instance.num_edges()),
      vertex_scratch_(instance.num_vertices()),
      edge_scratch_(instance.num_edges()) {}

void Evaluator::prepare(double gamma) {
  gamma_ = gamma;
  const IsingInstance& inst = *instance_;
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    const std::size_t base = inst.adjacency_offset(v);
    const auto adj = inst.neighbors(v);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      const Trig t = trig_of(2.0 * gamma * adj[k].coupling);
      cos_[base + k] = t.cos;
      sin_[base + k] = t.sin;
    }
  }
  auto table = [this](std::size_t offset, double) {
    return Trig{cos_[offset], sin_[offset]};
  };
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    vertex_[v] = vertex_coefficient(inst, v, gamma, table);
  }
  const auto edges = inst.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const EdgeCoefficients c = edge_coefficients(inst, edges[e], gamma, table);
    linear_[e] = c.linear;
    quadratic_[e] = c.quadratic;
  }
}

double Evaluator::total(double beta) const {
  const BetaFactors f = beta_factors(beta);
  for (std::size_t i = 0; i < vertex_.size(); ++i) vertex_scratch_[i] = f.s2 * vertex_[i];
  for (std::size_t e = 0; e < linear_.size(); ++e) {
    edge_scratch_[e] = f.s4 * linear_[e] - f.s2s * quadratic_[e];
  }
  return sum_terms(vertex_scratch_, edge_scratch_);
}

ExpectationBreakdown Evaluator::breakdown(double beta) const {
  const BetaFactors f = beta_factors(beta);
  std::vector<double> vt(vertex_.size());
  std::vector<double> et(linear_.size());
  for (std::size_t i = 0; i < vt.size(); ++i) vt[i] = f.s2 * vertex_[i];
  for (std::size_t e = 0; e < et.size(); ++e) et[e] = f.s4 * linear_[e] - f.s2s * quadratic_[e];
  return finish(std::move(vt), std::move(et));
}

// ---------------------------------------------------------------------------
// General formula

double expect_vertex(const IsingInstance& instance, Vertex i, const Angles& angles) {
  if (i >= instance.num_vertices()) {
    throw RangeError("vertex " + std::to_string(i) + " out of range");
  }
  const double a = vertex_coefficient(instance, i, angles.gamma, direct_trig(angles.gamma));
  return beta_factors(angles.beta).s2 * a;
}

double expect_edge(const IsingInstance& instance, std::size_t e, const Angles& angles) {
  check_edge_index(instance, e);
  const EdgeCoefficients c = edge_coefficients(instance, instance.edge(e), angles.gamma,
                                               direct_trig(angles.gamma));
  const BetaFactors f = beta_factors(angles.beta);
  return f.s4 * c.linear - f.s2s * c.quadratic;
}

ExpectationBreakdown expect_total(const IsingInstance& instance, const Angles& angles) {
  Evaluator ev(instance);
  ev.prepare(angles.gamma);
  return ev.breakdown(angles.beta);
}

// ---------------------------------------------------------------------------
// Special cases

double expect_edge_maxcut(const IsingInstance& instance, std::size_t e,
                          const Angles& angles) {
  if (instance.has_fields() || instance.uniform_coupling() != -1.0) {
    throw PreconditionError("Max-Cut path needs h = 0 and every J = -1");
  }
  check_edge_index(instance, e);
  const Edge& edge = instance.edge(e);
  const double di = static_cast<double>(instance.degree(edge.u));
  const double dj = static_cast<double>(instance.degree(edge.v));
  const double f = static_cast<double>(common_neighbors(instance, edge.u, edge.v).size());
  const double g = angles.gamma;
  const BetaFactors b = beta_factors(angles.beta);
  const double c2 = cos_of(2.0 * g);
  return 0.5 * b.s4 * sin_of(2.0 * g) * (std::pow(c2, di - 1.0) + std::pow(c2, dj - 1.0)) -
         0.5 * b.s2s * std::pow(c2, di + dj - 2.0 * f - 2.0) *
             (1.0 - std::pow(cos_of(4.0 * g), f));
}

ExpectationBreakdown expect_p5(const IsingInstance& instance, const Angles& angles) {
  if (instance.uniform_field() != 1.0 ||
      (instance.num_edges() > 0 && instance.uniform_coupling() != 1.0)) {
    throw PreconditionError("P5 path needs every h = 1 and every J = 1");
  }
  const double g = angles.gamma;
  const BetaFactors b = beta_factors(angles.beta);
  const double c2 = cos_of(2.0 * g);
  const double s2g = sin_of(2.0 * g);
  const double c4 = cos_of(4.0 * g);
  std::vector<double> vt(instance.num_vertices());
  for (Vertex i = 0; i < vt.size(); ++i) {
    vt[i] = b.s2 * s2g * std::pow(c2, static_cast<double>(instance.degree(i)));
  }
  std::vector<double> et(instance.num_edges());
  const auto edges = instance.edges();
  for (std::size_t e = 0; e < et.size(); ++e) {
    const double di = static_cast<double>(instance.degree(edges[e].u));
    const double dj = static_cast<double>(instance.degree(edges[e].v));
    const double f =
        static_cast<double>(common_neighbors(instance, edges[e].u, edges[e].v).size());
    et[e] = 0.5 * b.s4 * s2g * (std::pow(c2, di) + std::pow(c2, dj)) +
            0.5 * b.s2s * std::pow(c2, di + dj - 2.0 * f - 2.0) *
                (1.0 - std::pow(c4, f + 1.0));
  }
  return finish(std::move(vt), std::move(et));
}

ExpectationBreakdown expect_field_only(const IsingInstance& instance,
                                       const Angles& angles) {
  if (instance.num_edges() != 0) {
    throw PreconditionError("field-only path needs an instance without couplings");
  }
  const BetaFactors b = beta_factors(angles.beta);
  std::vector<double> vt(instance.num_vertices());
  for (Vertex i = 0; i < vt.size(); ++i) {
    const double h = instance.field(i);
    vt[i] = h * b.s2 * sin_of(2.0 * angles.gamma * h);
  }
  return finish(std::move(vt), {});
}

double expect_edge_triangle_free(const IsingInstance& instance, std::size_t e,
                                 const Angles& angles) {
  check_edge_index(instance, e);
  const Edge& edge = instance.edge(e);
  if (!common_neighbors(instance, edge.u, edge.v).empty()) {
    throw PreconditionError("edge " + std::to_string(e) + " closes a triangle");
  }
  const double g = angles.gamma;
  auto prod_without = [&](Vertex x, Vertex skip) {
    double p = 1.0;
    for (const Neighbor& nb : instance.neighbors(x)) {
      if (nb.vertex != skip) p *= cos_of(2.0 * g * nb.coupling);
    }
    return p;
  };
  const double pi = prod_without(edge.u, edge.v);
  const double pj = prod_without(edge.v, edge.u);
  const double hi = instance.field(edge.u);
  const double hj = instance.field(edge.v);
  const double jij = edge.coupling;
  const BetaFactors b = beta_factors(angles.beta);
  return 0.5 * jij * b.s4 * sin_of(2.0 * g * jij) *
             (cos_of(2.0 * g * hi) * pi + cos_of(2.0 * g * hj) * pj) +
         jij * b.s2s * sin_of(2.0 * g * hi) * sin_of(2.0 * g * hj) * pi * pj;
}

double expect_edge_complete(const IsingInstance& instance, std::size_t e,
                            const Angles& angles) {
  check_edge_index(instance, e);
  const Edge& edge = instance.edge(e);
  const std::size_t n = instance.num_vertices();
  std::vector<double> row_i(n, 0.0);
  std::vector<double> row_j(n, 0.0);
  for (const Neighbor& nb : instance.neighbors(edge.u)) row_i[nb.vertex] = nb.coupling;
  for (const Neighbor& nb : instance.neighbors(edge.v)) row_j[nb.vertex] = nb.coupling;

  const double g = angles.gamma;
  double pi = 1.0, pj = 1.0, plus = 1.0, minus = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == edge.u || k == edge.v) continue;
    pi *= cos_of(2.0 * g * row_i[k]);
    pj *= cos_of(2.0 * g * row_j[k]);
    plus *= cos_of(2.0 * g * (row_i[k] + row_j[k]));
    minus *= cos_of(2.0 * g * (row_i[k] - row_j[k]));
  }
  const double hi = instance.field(edge.u);
  const double hj = instance.field(edge.v);
  const double jij = edge.coupling;
  const BetaFactors b = beta_factors(angles.beta);
  return 0.5 * jij * b.s4 * sin_of(2.0 * g * jij) *
             (cos_of(2.0 * g * hi) * pi + cos_of(2.0 * g * hj) * pj) -
         0.5 * jij * b.s2s *
             (cos_of(2.0 * g * (hi + hj)) * plus - cos_of(2.0 * g * (hi - hj)) * minus);
}

ExpectationBreakdown expect_total_via(const IsingInstance& instance,
                                      const Angles& angles, EdgePath path) {
  if (path == EdgePath::kGeneral) return expect_total(instance, angles);
  std::vector<double> vt(instance.num_vertices());
  for (Vertex i = 0; i < vt.size(); ++i) vt[i] = expect_vertex(instance, i, angles);
  std::vector<double> et(instance.num_edges());
  for (std::size_t e = 0; e < et.size(); ++e) {
    switch (path) {
      case EdgePath::kMaxCut:
        et[e] = expect_edge_maxcut(instance, e, angles);
        break;
      case EdgePath::kTriangleFree:
        et[e] = expect_edge_triangle_free(instance, e, angles);
        break;
      default:
        et[e] = expect_edge_complete(instance, e, angles);
        break;
    }
  }
  return finish(std::move(vt), std::move(et));
}

}  // namespace qaoa1
