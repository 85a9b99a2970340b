#include "qaoa1/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qaoa1/error.hpp"
#include "qaoa1/landscape.hpp"

namespace qaoa1 {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

void check_sigma(double sigma) {
  require(std::isfinite(sigma) && sigma > 0.0, "sigma must be positive");
}

void check_size(std::uint64_t n) { require(n >= 2, "n must be at least 2"); }

void check_degree(double d, std::uint64_t n) {
  require(std::isfinite(d) && d >= 1.0 && d <= static_cast<double>(n - 1),
          "degree must satisfy 1 <= d <= n-1");
}

// sin(4b) * g * s^2 * exp(-2 g^2 s^2)
double gaussian_core(double beta, double gamma, double sigma) {
  return std::sin(4.0 * beta) * gamma * sigma * sigma *
         std::exp(-2.0 * gamma * gamma * sigma * sigma);
}

double search_scale(const EnsembleModel& m) {
  return std::visit(
      overloaded{
          [](const model::SkTrimodal&) { return 1.0; },
          [](const model::SkTrimodalLimit&) { return 1.0; },
          [](const model::SkConstantField& x) { return std::max(x.sigma, std::fabs(x.h)); },
          [](const auto& x) { return x.sigma; },
      },
      m);
}

EnsembleOptimum numeric_optimum(const EnsembleModel& m) {
  const double scale = search_scale(m);
  const AngleGrid grid{-pi / 2, pi / 2, 0.0, pi / (2.0 * scale), kDefaultBetaSteps,
                       kDefaultGammaSteps};
  const OptResult r = minimize_function(
      [&m](double beta, double gamma) { return ensemble_energy_per_spin(m, {beta, gamma}); },
      grid);
  return {r.beta_min, r.gamma_min, r.f_min};
}

}  // namespace

void validate(const EnsembleModel& m) {
  std::visit(overloaded{
                 [](const model::SkGaussian& x) { check_sigma(x.sigma); },
                 [](const model::SkBimodal& x) {
                   check_sigma(x.sigma);
                   check_size(x.n);
                 },
                 [](const model::SkTrimodal& x) {
                   check_size(x.n);
                   check_degree(x.d, x.n);
                 },
                 [](const model::SkTrimodalLimit& x) {
                   require(std::isfinite(x.d) && x.d >= 1.0, "degree must be at least 1");
                 },
                 [](const model::SkConstantField& x) {
                   check_sigma(x.sigma);
                   require(std::isfinite(x.h), "field must be finite");
                 },
                 [](const model::SkNormalField& x) { check_sigma(x.sigma); },
                 [](const model::RegularGaussian& x) {
                   check_sigma(x.sigma);
                   check_size(x.n);
                   check_degree(x.d, x.n);
                 },
                 [](const model::RegularGaussianField& x) {
                   check_sigma(x.sigma);
                   check_size(x.n);
                   check_degree(x.d, x.n);
                 },
             },
             m);
}

double ensemble_energy_per_spin(const EnsembleModel& m, const Angles& angles) {
  validate(m);
  const double b = angles.beta;
  const double g = angles.gamma;
  return std::visit(
      overloaded{
          [&](const model::SkGaussian& x) { return gaussian_core(b, g, x.sigma); },
          [&](const model::SkBimodal& x) {
            const double root = std::sqrt(static_cast<double>(x.n - 1));
            const double a = 2.0 * g * x.sigma / root;
            return 0.5 * std::sin(4.0 * b) * x.sigma * root * std::sin(a) *
                   std::pow(std::cos(a), static_cast<double>(x.n - 2));
          },
          [&](const model::SkTrimodal& x) {
            const double p = x.d / static_cast<double>(x.n - 1);
            return 0.5 * std::sin(4.0 * b) * x.d * std::sin(2.0 * g) *
                   std::pow(1.0 - p + p * std::cos(2.0 * g), static_cast<double>(x.n - 2));
          },
          [&](const model::SkTrimodalLimit& x) {
            const double s = std::sin(g);
            return 0.5 * std::sin(4.0 * b) * x.d * std::sin(2.0 * g) *
                   std::exp(-2.0 * x.d * s * s);
          },
          [&](const model::SkConstantField& x) {
            const double s2 = x.sigma * x.sigma;
            return (g * s2 * std::cos(2.0 * x.h * g) * std::sin(4.0 * b) +
                    x.h * std::sin(2.0 * b) * std::sin(2.0 * x.h * g)) *
                   std::exp(-2.0 * g * g * s2);
          },
          [&](const model::SkNormalField& x) {
            const double s2 = x.sigma * x.sigma;
            return (2.0 * std::sin(2.0 * b) + std::sin(4.0 * b)) * g * s2 *
                   std::exp(-4.0 * g * g * s2);
          },
          [&](const model::RegularGaussian& x) {
            return static_cast<double>(x.n - 1) / x.d * gaussian_core(b, g, x.sigma);
          },
          [&](const model::RegularGaussianField& x) {
            const double s2 = x.sigma * x.sigma;
            return (2.0 * std::sin(2.0 * b) +
                    static_cast<double>(x.n - 1) / x.d * std::sin(4.0 * b)) *
                   g * s2 * std::exp(-4.0 * g * g * s2);
          },
      },
      m);
}

EnsembleOptimum ensemble_optimal(const EnsembleModel& m) {
  validate(m);
  if (const auto* x = std::get_if<model::SkGaussian>(&m)) {
    return {-pi / 8, 1.0 / (2.0 * x->sigma), -x->sigma / (2.0 * std::sqrt(std::numbers::e))};
  }
  if (const auto* x = std::get_if<model::SkNormalField>(&m)) {
    return {-pi / 6, 1.0 / (2.0 * std::sqrt(2.0) * x->sigma),
            -0.75 * std::sqrt(3.0 / (2.0 * std::numbers::e)) * x->sigma};
  }
  if (const auto* x = std::get_if<model::RegularGaussian>(&m)) {
    return regular_optimal(x->sigma, x->d, x->n);
  }
  return numeric_optimum(m);
}

EnsembleOptimum regular_optimal(double sigma, double d, std::uint64_t n) {
  check_sigma(sigma);
  check_size(n);
  check_degree(d, n);
  return {-pi / 8, 1.0 / (2.0 * sigma),
          -(static_cast<double>(n - 1) / d) * sigma / (2.0 * std::sqrt(std::numbers::e))};
}

// ---------------------------------------------------------------------------
// gamma_min approximations

std::vector<double> gamma_min_heuristic(const HeuristicCase& c) {
  return std::visit(
      overloaded{
          [](const heuristic::EqualScale& x) {
            require(x.h > 0.0 && std::isfinite(x.h), "h must be positive");
            require(x.d >= 1, "degree must be at least 1");
            const double a = std::atan(1.0 / std::sqrt(static_cast<double>(x.d)));
            return std::vector<double>{a / (2.0 * x.h), (pi - a) / (2.0 * x.h)};
          },
          [](const heuristic::FieldDominant& x) {
            require(x.j > 0.0 && std::isfinite(x.j), "J must be positive");
            require(x.d >= 1 && x.r >= 1, "degree and ratio must be at least 1");
            const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(x.d));
            if (x.r <= 5) {
              return std::vector<double>{
                  std::atan(inv_sqrt_d * (1.0 - 0.15 * (x.r - 1.0))) / (2.0 * x.j)};
            }
            return std::vector<double>{std::atan(inv_sqrt_d) /
                                       (2.0 * std::pow(static_cast<double>(x.r), 0.6) * x.j)};
          },
          [](const heuristic::CouplingDominant& x) {
            require(x.h > 0.0 && std::isfinite(x.h), "h must be positive");
            require(x.d >= 1 && x.r >= 1, "degree and ratio must be at least 1");
            return std::vector<double>{std::atan(1.0 / std::sqrt(static_cast<double>(x.d))) /
                                       (2.0 * x.r * x.h)};
          },
      },
      c);
}

double ci_at_heuristic_optimum(const HeuristicCase& c) {
  return std::visit(
      overloaded{
          [](const heuristic::EqualScale& x) {
            require(x.d >= 1, "degree must be at least 1");
            const double d = x.d;
            return std::sqrt(d) / (d + 1.0) * std::pow(1.0 + 1.0 / d, -(d - 1.0) / 2.0);
          },
          [](const heuristic::CouplingDominant& x) {
            require(x.d >= 1 && x.r >= 1, "degree and ratio must be at least 1");
            const double d = x.d;
            return std::pow(1.0 + 1.0 / d, -d / 2.0) *
                   std::sin(std::atan(1.0 / std::sqrt(d)) / x.r);
          },
          [](const heuristic::FieldDominant&) -> double {
            throw UnsupportedCaseError("no single-vertex optimum formula for the field-dominant case");
          },
      },
      c);
}

// ---------------------------------------------------------------------------
// Moment condition

MomentFunction moments_of(std::function<DiscreteLaw(double n)> law) {
  return [law = std::move(law)](int order, double n) {
    const DiscreteLaw d = law(n);
    if (d.values.size() != d.probabilities.size()) {
      throw ParameterError("law needs one probability per value");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < d.values.size(); ++k) {
      m += d.probabilities[k] * std::pow(d.values[k], order);
    }
    return n * m;
  };
}

bool moment_condition_check(const MomentFunction& moments, std::span<const double> sizes,
                            const MomentCheckOptions& options) {
  if (sizes.size() < 2) throw ParameterError("need at least two sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw ParameterError("sizes must be increasing");
  }
  const double last = sizes[sizes.size() - 1];
  const double prev = sizes[sizes.size() - 2];
  const double m2 = moments(2, last);
  if (!(m2 > 0.0)) return false;
  if (std::fabs(m2 - moments(2, prev)) > options.tolerance * std::max(1.0, m2)) return false;
  for (int r = 3; r <= options.max_order; ++r) {
    if (std::fabs(moments(r, last)) > options.tolerance) return false;
  }
  return true;
}

}  // namespace qaoa1
