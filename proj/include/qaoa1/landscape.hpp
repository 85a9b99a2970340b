#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa1/analytic.hpp"
#include "qaoa1/instance.hpp"

namespace qaoa1 {

// Rectangular sampling grid with inclusive endpoints on both axes.
struct AngleGrid {
  double beta_min = 0.0;
  double beta_max = 0.0;
  double gamma_min = 0.0;
  double gamma_max = 0.0;
  std::size_t beta_steps = 2;
  std::size_t gamma_steps = 2;

  void validate() const;
  double beta(std::size_t row) const noexcept;
  double gamma(std::size_t col) const noexcept;
  double beta_spacing() const noexcept;
  double gamma_spacing() const noexcept;
  std::size_t cells() const noexcept { return beta_steps * gamma_steps; }
};

inline constexpr std::size_t kDefaultBetaSteps = 101;
inline constexpr std::size_t kDefaultGammaSteps = 201;
inline constexpr std::size_t kMaxGridCells = 100'000'000;

// beta in [-pi/4, pi/4], gamma in [0, pi/2] for unit-weight Max-Cut instances
// (h = 0, |J| = 1); beta in [-pi/2, pi/2], gamma in [0, pi] otherwise.
AngleGrid default_grid(const IsingInstance& instance);

struct Landscape {
  AngleGrid grid;
  std::vector<double> values;  // row-major, row = beta index
  bool negate_for_display = false;
  std::optional<double> normalizer;

  double at(std::size_t row, std::size_t col) const {
    return values[row * grid.gamma_steps + col];
  }
};

struct ScanOptions {
  std::size_t threads = 1;  // 0 = resolve_threads default
  bool negate_for_display = false;
  std::optional<double> normalizer;
};

// Cell (r, c) holds expect_total(instance, {beta_r, gamma_c}).total, negated
// and then divided by the normalizer when those options are set.
Landscape scan(const IsingInstance& instance, const AngleGrid& grid,
               const ScanOptions& options = {});

struct OptResult {
  double beta_min = 0.0;
  double gamma_min = 0.0;
  double f_min = 0.0;
  double qaoa_expectation = 0.0;  // -f_min
  std::optional<double> cut_value;
  std::size_t iterations = 0;     // simplex iterations summed over all starts
};

struct OptimizeOptions {
  std::optional<AngleGrid> grid;  // coarse grid; default_grid when unset
  std::size_t starts = 8;
  double tolerance = 1e-9;        // simplex diameter, radians
  std::size_t max_iterations = 500;
  std::size_t threads = 1;        // 0 = resolve_threads default
};

// Coarse scan, then a Nelder-Mead refinement from each of the best `starts`
// cells. Among refined points the lowest value wins; values within 1e-12
// relative count as ties, resolved by smallest gamma, then smallest beta.
OptResult optimize(const IsingInstance& instance, const OptimizeOptions& options = {});

// Same procedure for an arbitrary objective f(beta, gamma).
using Objective = std::function<double(double beta, double gamma)>;
OptResult minimize_function(const Objective& objective, const AngleGrid& grid,
                            const OptimizeOptions& options = {});

// Cut value (W - F) / 2 of a Max-Cut instance with total weight W.
double cut_from_energy(double sum_of_weights, double f_min);

// CSV: header "beta\gamma,g_0,...", then one row per beta; 17 significant
// digits.
std::string export_csv(const Landscape& landscape);

struct CsvLandscape {
  std::vector<double> betas;
  std::vector<double> gammas;
  std::vector<double> values;  // row-major
};
CsvLandscape parse_csv(std::string_view text);

// Binary 16-bit PGM (P5, big-endian samples), min-max normalized; a constant
// landscape maps to 32768.
std::string export_pgm(const Landscape& landscape);

}  // namespace qaoa1
