#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "qaoa1/analytic.hpp"

namespace qaoa1 {

// Disorder-averaged energy per spin <C/n> of random Ising ensembles at p = 1.
//
// SK variants live on the complete graph with couplings J = J'/sqrt(n-1);
// regular variants on d-regular graphs with J ~ N(0, sigma^2/d).
namespace model {

struct SkGaussian {
  double sigma;
};
struct SkBimodal {  // J' = +-sigma with probability 1/2
  double sigma;
  std::uint64_t n;
};
struct SkTrimodal {  // J in {-1, 0, +1}, P(J = +-1) = d / (2n - 2)
  double d;
  std::uint64_t n;
};
struct SkTrimodalLimit {  // n -> infinity of SkTrimodal
  double d;
};
struct SkConstantField {
  double sigma;
  double h;
};
struct SkNormalField {  // h ~ N(0, sigma^2)
  double sigma;
};
struct RegularGaussian {
  double sigma;
  double d;
  std::uint64_t n;
};
struct RegularGaussianField {
  double sigma;
  double d;
  std::uint64_t n;
};

}  // namespace model

using EnsembleModel =
    std::variant<model::SkGaussian, model::SkBimodal, model::SkTrimodal,
                 model::SkTrimodalLimit, model::SkConstantField, model::SkNormalField,
                 model::RegularGaussian, model::RegularGaussianField>;

void validate(const EnsembleModel& m);

double ensemble_energy_per_spin(const EnsembleModel& m, const Angles& angles);

struct EnsembleOptimum {
  double beta_min;
  double gamma_min;
  double value;
};

// Minimizes <C/n>. Closed forms for SkGaussian, SkNormalField and
// RegularGaussian; the landscape optimizer otherwise, on beta in
// [-pi/2, pi/2], gamma in [0, pi / (2 * scale)].
EnsembleOptimum ensemble_optimal(const EnsembleModel& m);

// (-pi/8, 1/(2 sigma), -((n-1)/d) * sigma / (2 sqrt(e))).
EnsembleOptimum regular_optimal(double sigma, double d, std::uint64_t n);

// Approximate gamma_min for d-regular instances with two-valued weights.
namespace heuristic {

struct EqualScale {  // h_i, J_ij in {-h, h}
  double h;
  unsigned d;
};
struct FieldDominant {  // h_i in {-rJ, rJ}, J_ij in {-J, J}
  unsigned r;
  double j;
  unsigned d;
};
struct CouplingDominant {  // h_i in {-h, h}, J_ij in {-rh, rh}
  unsigned r;
  double h;
  unsigned d;
};

}  // namespace heuristic

using HeuristicCase =
    std::variant<heuristic::EqualScale, heuristic::FieldDominant, heuristic::CouplingDominant>;

// Candidate gamma values in ascending order. These are approximations, not a
// substitute for optimize().
std::vector<double> gamma_min_heuristic(const HeuristicCase& c);

// Single-vertex term at the approximate optimum. Not defined for
// FieldDominant (UnsupportedCaseError).
double ci_at_heuristic_optimum(const HeuristicCase& c);

// E[n J^r] as a function of the order r and system size n.
using MomentFunction = std::function<double(int order, double n)>;

struct DiscreteLaw {
  std::vector<double> values;
  std::vector<double> probabilities;
};

// Exact moments of a discrete coupling law that depends on n.
MomentFunction moments_of(std::function<DiscreteLaw(double n)> law);

struct MomentCheckOptions {
  int max_order = 6;
  double tolerance = 1e-3;
};

// True when, along the increasing sequence of sizes, E[nJ^2] settles to a
// positive limit and E[nJ^r] -> 0 for 3 <= r <= max_order, judged at the
// last two sizes. When it holds the Gaussian SK formula applies.
bool moment_condition_check(const MomentFunction& moments,
                            std::span<const double> sizes,
                            const MomentCheckOptions& options = {});

}  // namespace qaoa1
