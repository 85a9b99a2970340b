#include "qaoa1/landscape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <new>
#include <numbers>
#include <numeric>

#include "qaoa1/error.hpp"
#include "qaoa1/parallel.hpp"

namespace qaoa1 {

namespace {

double axis_point(double lo, double hi, std::size_t steps, std::size_t k) {
  if (k + 1 == steps) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

struct Candidate {
  double beta;
  double gamma;
  double f;
};

// Refined copies of one optimum land within a few simplex tolerances of each
// other, so angles closer than this are treated as equal for tie-breaking.
constexpr double kAngleTieTolerance = 1e-7;

bool better(const Candidate& a, const Candidate& b) {
  const double tol = 1e-12 * std::max(std::fabs(a.f), std::fabs(b.f));
  if (std::fabs(a.f - b.f) > tol) return a.f < b.f;
  if (std::fabs(a.gamma - b.gamma) > kAngleTieTolerance) return a.gamma < b.gamma;
  if (std::fabs(a.beta - b.beta) > kAngleTieTolerance) return a.beta < b.beta;
  return a.f < b.f;
}

struct Refined {
  Candidate best;
  std::size_t iterations;
};

// Two-dimensional Nelder-Mead with the standard coefficients (reflection 1,
// expansion 2, contraction 1/2, shrink 1/2).
template <typename F>
Refined nelder_mead(F&& f, Candidate start, double step_beta, double step_gamma,
                    double tolerance, std::size_t max_iterations) {
  std::array<Candidate, 3> s{
      start,
      Candidate{start.beta + step_beta, start.gamma, 0.0},
      Candidate{start.beta, start.gamma + step_gamma, 0.0},
  };
  s[1].f = f(s[1].beta, s[1].gamma);
  s[2].f = f(s[2].beta, s[2].gamma);

  auto eval = [&](double b, double g) { return Candidate{b, g, f(b, g)}; };
  auto order = [&] {
    std::stable_sort(s.begin(), s.end(),
                     [](const Candidate& a, const Candidate& b) { return a.f < b.f; });
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        d = std::max(d, std::hypot(s[a].beta - s[b].beta, s[a].gamma - s[b].gamma));
      }
    }
    return d;
  };

  std::size_t it = 0;
  order();
  while (it < max_iterations && diameter() >= tolerance) {
    ++it;
    const double cb = 0.5 * (s[0].beta + s[1].beta);
    const double cg = 0.5 * (s[0].gamma + s[1].gamma);
    const Candidate r = eval(2.0 * cb - s[2].beta, 2.0 * cg - s[2].gamma);
    if (r.f < s[0].f) {
      const Candidate e = eval(3.0 * cb - 2.0 * s[2].beta, 3.0 * cg - 2.0 * s[2].gamma);
      s[2] = e.f < r.f ? e : r;
    } else if (r.f < s[1].f) {
      s[2] = r;
    } else {
      bool shrink = false;
      if (r.f < s[2].f) {
        const Candidate c = eval(cb + 0.5 * (r.beta - cb), cg + 0.5 * (r.gamma - cg));
        if (c.f <= r.f) {
          s[2] = c;
        } else {
          shrink = true;
        }
      } else {
        const Candidate c = eval(cb + 0.5 * (s[2].beta - cb), cg + 0.5 * (s[2].gamma - cg));
        if (c.f < s[2].f) {
          s[2] = c;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t k = 1; k < 3; ++k) {
          s[k] = eval(s[0].beta + 0.5 * (s[k].beta - s[0].beta),
                      s[0].gamma + 0.5 * (s[k].gamma - s[0].gamma));
        }
      }
    }
    order();
  }
  return {s[0], it};
}

std::vector<Candidate> best_cells(const AngleGrid& grid, const std::vector<double>& values,
                                  std::size_t k) {
  std::vector<Candidate> cells;
  cells.reserve(values.size());
  for (std::size_t r = 0; r < grid.beta_steps; ++r) {
    for (std::size_t c = 0; c < grid.gamma_steps; ++c) {
      cells.push_back({grid.beta(r), grid.gamma(c), values[r * grid.gamma_steps + c]});
    }
  }
  k = std::min(k, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k), cells.end(),
                    [](const Candidate& a, const Candidate& b) {
                      if (a.f != b.f) return a.f < b.f;
                      if (a.gamma != b.gamma) return a.gamma < b.gamma;
                      return a.beta < b.beta;
                    });
  cells.resize(k);
  return cells;
}

template <typename MakeObjective>
OptResult refine(const AngleGrid& grid, const std::vector<double>& coarse,
                 const OptimizeOptions& options, MakeObjective&& make_objective) {
  if (options.starts == 0) throw ParameterError("optimizer needs at least one start");
  const std::vector<Candidate> starts = best_cells(grid, coarse, options.starts);
  std::vector<Refined> results(starts.size());
  const std::size_t threads = std::min(resolve_threads(options.threads), starts.size());
  parallel_for(starts.size(), threads, [&](std::size_t, std::size_t k) {
    auto objective = make_objective();
    results[k] = nelder_mead(objective, starts[k], grid.beta_spacing(), grid.gamma_spacing(),
                             options.tolerance, options.max_iterations);
  });

  OptResult out;
  Candidate best = results.front().best;
  for (const Refined& r : results) {
    out.iterations += r.iterations;
    if (better(r.best, best)) best = r.best;
  }
  out.beta_min = best.beta;
  out.gamma_min = best.gamma;
  out.f_min = best.f;
  out.qaoa_expectation = -best.f;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

void AngleGrid::validate() const {
  if (!std::isfinite(beta_min) || !std::isfinite(beta_max) || !std::isfinite(gamma_min) ||
      !std::isfinite(gamma_max)) {
    throw ParameterError("grid bounds must be finite");
  }
  if (!(beta_max > beta_min) || !(gamma_max > gamma_min)) {
    throw ParameterError("grid needs max > min on both axes");
  }
  if (beta_steps < 2 || gamma_steps < 2) {
    throw ParameterError("grid needs at least 2 steps per axis");
  }
  if (beta_steps > kMaxGridCells / gamma_steps) {
    throw ResourceError("grid of " + std::to_string(beta_steps) + " x " +
                        std::to_string(gamma_steps) + " cells exceeds the limit of " +
                        std::to_string(kMaxGridCells));
  }
}

double AngleGrid::beta(std::size_t row) const noexcept {
  return axis_point(beta_min, beta_max, beta_steps, row);
}

double AngleGrid::gamma(std::size_t col) const noexcept {
  return axis_point(gamma_min, gamma_max, gamma_steps, col);
}

double AngleGrid::beta_spacing() const noexcept {
  return (beta_max - beta_min) / static_cast<double>(beta_steps - 1);
}

double AngleGrid::gamma_spacing() const noexcept {
  return (gamma_max - gamma_min) / static_cast<double>(gamma_steps - 1);
}

AngleGrid default_grid(const IsingInstance& instance) {
  constexpr double pi = std::numbers::pi;
  if (instance.is_unit_maxcut()) {
    return {-pi / 4, pi / 4, 0.0, pi / 2, kDefaultBetaSteps, kDefaultGammaSteps};
  }
  return {-pi / 2, pi / 2, 0.0, pi, kDefaultBetaSteps, kDefaultGammaSteps};
}

// ---------------------------------------------------------------------------
// Scan and optimize

Landscape scan(const IsingInstance& instance, const AngleGrid& grid,
               const ScanOptions& options) {
  grid.validate();
  if (options.normalizer && !(std::isfinite(*options.normalizer) && *options.normalizer != 0.0)) {
    throw ParameterError("normalizer must be finite and nonzero");
  }
  Landscape out;
  out.grid = grid;
  out.negate_for_display = options.negate_for_display;
  out.normalizer = options.normalizer;
  try {
    out.values.assign(grid.cells(), 0.0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate landscape of " + std::to_string(grid.cells()) + " cells");
  }

  const std::size_t threads = std::min(resolve_threads(options.threads), grid.gamma_steps);
  std::vector<Evaluator> evaluators(threads, Evaluator(instance));
  const std::size_t cols = grid.gamma_steps;
  parallel_for(cols, threads, [&](std::size_t worker, std::size_t c) {
    Evaluator& ev = evaluators[worker];
    ev.prepare(grid.gamma(c));
    for (std::size_t r = 0; r < grid.beta_steps; ++r) {
      double v = ev.total(grid.beta(r));
      if (options.negate_for_display) v = -v;
      if (options.normalizer) v /= *options.normalizer;
      out.values[r * cols + c] = v;
    }
  });
  return out;
}

OptResult optimize(const IsingInstance& instance, const OptimizeOptions& options) {
  const AngleGrid grid = options.grid ? *options.grid : default_grid(instance);
  ScanOptions scan_options;
  scan_options.threads = options.threads;
  const Landscape coarse = scan(instance, grid, scan_options);
  OptResult out = refine(grid, coarse.values, options, [&] {
    return [ev = Evaluator(instance), prepared = false](double beta, double gamma) mutable {
      if (!prepared || ev.gamma() != gamma) {
        ev.prepare(gamma);
        prepared = true;
      }
      return ev.total(beta);
    };
  });
  if (!instance.has_fields()) out.cut_value = cut_from_energy(sum_of_weights(instance), out.f_min);
  return out;
}

OptResult minimize_function(const Objective& objective, const AngleGrid& grid,
                            const OptimizeOptions& options) {
  grid.validate();
  std::vector<double> coarse(grid.cells());
  for (std::size_t r = 0; r < grid.beta_steps; ++r) {
    for (std::size_t c = 0; c < grid.gamma_steps; ++c) {
      coarse[r * grid.gamma_steps + c] = objective(grid.beta(r), grid.gamma(c));
    }
  }
  return refine(grid, coarse, options, [&] { return objective; });
}

double cut_from_energy(double sum_of_weights, double f_min) {
  return (sum_of_weights - f_min) / 2.0;
}

// ---------------------------------------------------------------------------
// Export

namespace {

void append_number(std::string& out, double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string export_csv(const Landscape& landscape) {
  const AngleGrid& g = landscape.grid;
  std::string out = "beta\\gamma";
  for (std::size_t c = 0; c < g.gamma_steps; ++c) {
    out += ',';
    append_number(out, g.gamma(c));
  }
  out += '\n';
  for (std::size_t r = 0; r < g.beta_steps; ++r) {
    append_number(out, g.beta(r));
    for (std::size_t c = 0; c < g.gamma_steps; ++c) {
      out += ',';
      append_number(out, landscape.at(r, c));
    }
    out += '\n';
  }
  return out;
}

CsvLandscape parse_csv(std::string_view text) {
  CsvLandscape out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto parse_row = [&](std::string_view line, std::vector<double>& cells) {
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(',', start);
      if (end == std::string_view::npos) end = line.size();
      const std::string field(line.substr(start, end - start));
      char* stop = nullptr;
      const double v = std::strtod(field.c_str(), &stop);
      if (field.empty() || stop != field.c_str() + field.size()) {
        throw ParseError(line_no, "invalid number '" + field + "'");
      }
      cells.push_back(v);
      start = end + 1;
    }
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      const std::string_view head = "beta\\gamma,";
      if (line.substr(0, head.size()) != head) throw ParseError(1, "missing CSV header");
      parse_row(line.substr(head.size()), out.gammas);
      continue;
    }
    std::vector<double> cells;
    parse_row(line, cells);
    if (cells.size() != out.gammas.size() + 1) {
      throw ParseError(line_no, "row has " + std::to_string(cells.size()) + " cells");
    }
    out.betas.push_back(cells.front());
    out.values.insert(out.values.end(), cells.begin() + 1, cells.end());
  }
  return out;
}

std::string export_pgm(const Landscape& landscape) {
  const AngleGrid& g = landscape.grid;
  for (double v : landscape.values) {
    if (!std::isfinite(v)) throw ParameterError("PGM export needs finite values");
  }
  const auto [lo_it, hi_it] = std::minmax_element(landscape.values.begin(), landscape.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::string out = "P5\n" + std::to_string(g.gamma_steps) + " " +
                    std::to_string(g.beta_steps) + "\n65535\n";
  out.reserve(out.size() + 2 * landscape.values.size());
  for (double v : landscape.values) {
    unsigned pixel = 32768;
    if (hi > lo) pixel = static_cast<unsigned>(std::lround((v - lo) / (hi - lo) * 65535.0));
    out += static_cast<char>((pixel >> 8) & 0xFF);
    out += static_cast<char>(pixel & 0xFF);
  }
  return out;
}

}  // namespace qaoa1
