#pragma once

#include <cstddef>
#include <optional>

#include "qaoa1/instance.hpp"
#include "qaoa1/landscape.hpp"

namespace qaoa1 {

// Estimates of the optimal Ising energy magnitude, used to normalize QAOA
// expectations when the true optimum is unknown.

inline constexpr double kParisiConstant = 0.76321;
// Rounded sqrt(2 ln 2); the published benchmark columns use this value.
inline constexpr double kInformalCoefficient = 1.18;

enum class EstimateMethod { kInformal, kMontanari, kParisi };

// 1.18 * sqrt(n * ssq), ssq the sum of squared coefficients.
double estimate_informal(std::size_t n, double ssq);
// sqrt(2 n ln 2) * sqrt(ssq), the unrounded expected maximum of 2^n Gaussian
// samples with variance ssq.
double estimate_informal_exact(std::size_t n, double ssq);
// 2 P* sqrt(v e (1 - 2e / v^2)), for {0,1} couplings.
double estimate_montanari(std::size_t v, std::size_t e);
// P* sqrt(2 v e), for balanced {-1,0,1} couplings.
double estimate_parisi(std::size_t v, std::size_t e);

struct EstimateResult {
  EstimateMethod method = EstimateMethod::kInformal;
  double value = 0.0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double sum_of_squares = 0.0;
};

EstimateResult estimate(const IsingInstance& instance,
                        EstimateMethod method = EstimateMethod::kInformal);

struct RatioReport {
  double qaoa_expectation = 0.0;
  double estimate = 0.0;
  std::optional<double> ratio_exp;    // qaoa_expectation / estimate
  std::optional<double> ratio_ising;  // qaoa_expectation / best_known
  std::optional<double> cut;
  std::optional<double> ratio_cut;    // cut / best_known_cut
};

// Ratios are empty when the denominator is zero or not supplied.
RatioReport ratio_report(const IsingInstance& instance, const OptResult& result,
                         std::optional<double> best_known,
                         std::optional<double> best_known_cut = std::nullopt);

}  // namespace qaoa1
