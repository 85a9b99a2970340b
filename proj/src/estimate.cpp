#include "qaoa1/estimate.hpp"

#include <cmath>
#include <numbers>

#include "qaoa1/error.hpp"

namespace qaoa1 {

namespace {

std::optional<double> safe_ratio(double num, std::optional<double> den) {
  if (!den || *den == 0.0 || !std::isfinite(*den)) return std::nullopt;
  return num / *den;
}

}  // namespace

double estimate_informal(std::size_t n, double ssq) {
  if (ssq < 0.0) throw ParameterError("sum of squares must be non-negative");
  return kInformalCoefficient * std::sqrt(static_cast<double>(n) * ssq);
}

double estimate_informal_exact(std::size_t n, double ssq) {
  if (ssq < 0.0) throw ParameterError("sum of squares must be non-negative");
  return std::sqrt(2.0 * static_cast<double>(n) * std::numbers::ln2) * std::sqrt(ssq);
}

double estimate_montanari(std::size_t v, std::size_t e) {
  if (v < 2) throw ParameterError("Montanari estimate needs at least 2 vertices");
  const double vv = static_cast<double>(v);
  const double ee = static_cast<double>(e);
  if (ee > vv * (vv - 1.0) / 2.0) throw ParameterError("more edges than vertex pairs");
  return 2.0 * kParisiConstant * std::sqrt(vv * ee * (1.0 - 2.0 * ee / (vv * vv)));
}

double estimate_parisi(std::size_t v, std::size_t e) {
  return kParisiConstant * std::sqrt(2.0 * static_cast<double>(v) * static_cast<double>(e));
}

EstimateResult estimate(const IsingInstance& instance, EstimateMethod method) {
  EstimateResult r;
  r.method = method;
  r.vertices = instance.num_vertices();
  r.edges = instance.num_edges();
  r.sum_of_squares = sum_of_squares(instance);
  switch (method) {
    case EstimateMethod::kInformal:
      r.value = estimate_informal(r.vertices, r.sum_of_squares);
      break;
    case EstimateMethod::kMontanari:
      r.value = estimate_montanari(r.vertices, r.edges);
      break;
    case EstimateMethod::kParisi:
      r.value = estimate_parisi(r.vertices, r.edges);
      break;
  }
  return r;
}

RatioReport ratio_report(const IsingInstance& instance, const OptResult& result,
                         std::optional<double> best_known,
                         std::optional<double> best_known_cut) {
  RatioReport r;
  r.qaoa_expectation = result.qaoa_expectation;
  r.estimate = estimate(instance).value;
  r.ratio_exp = safe_ratio(r.qaoa_expectation, r.estimate);
  r.ratio_ising = safe_ratio(r.qaoa_expectation, best_known);
  if (!instance.has_fields()) {
    r.cut = result.cut_value ? *result.cut_value
                             : cut_from_energy(sum_of_weights(instance), result.f_min);
    r.ratio_cut = safe_ratio(*r.cut, best_known_cut);
  }
  return r;
}

}  // namespace qaoa1
