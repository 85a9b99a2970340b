#include "qaoa1/qaoa1.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaoa1/analytic.hpp"
#include "qaoa1/ensemble.hpp"
#include "qaoa1/error.hpp"
#include "qaoa1/estimate.hpp"
#include "qaoa1/instance.hpp"
#include "qaoa1/landscape.hpp"
#include "qaoa1/oracle.hpp"
#include "qaoa1/parallel.hpp"

struct qaoa1_instance {
  qaoa1::IsingInstance value;
};

struct qaoa1_landscape {
  qaoa1::Landscape value;
};

namespace {

using namespace qaoa1;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string g_last_error;

qaoa1_status fail(qaoa1_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
qaoa1_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return QAOA1_OK;
  } catch (const Error& e) {
    return fail(static_cast<qaoa1_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QAOA1_ERR_RESOURCE, "out of memory");
  } catch (const std::length_error& e) {
    return fail(QAOA1_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(QAOA1_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QAOA1_ERR_INTERNAL, "unknown error");
  }
}

#define QAOA1_REQUIRE(ptr)                                            \
  do {                                                                \
    if ((ptr) == nullptr) {                                           \
      return fail(QAOA1_ERR_NULL_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                 \
  } while (0)

// Copies into a malloc'd, NUL-terminated buffer.
template <typename Char>
Char* copy_out(const std::string& s) {
  auto* buf = static_cast<Char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = 0;
  return buf;
}

AngleGrid to_grid(const qaoa1_grid& g) {
  return {g.beta_min, g.beta_max, g.gamma_min, g.gamma_max, g.beta_steps, g.gamma_steps};
}

qaoa1_grid from_grid(const AngleGrid& g) {
  return {g.beta_min, g.beta_max, g.gamma_min, g.gamma_max, g.beta_steps, g.gamma_steps};
}

qaoa1_opt_result from_result(const OptResult& r) {
  qaoa1_opt_result out{};
  out.beta_min = r.beta_min;
  out.gamma_min = r.gamma_min;
  out.f_min = r.f_min;
  out.qaoa_expectation = r.qaoa_expectation;
  out.has_cut = r.cut_value.has_value() ? 1 : 0;
  out.cut_value = r.cut_value.value_or(kNaN);
  out.iterations = r.iterations;
  return out;
}

OptResult to_result(const qaoa1_opt_result& r) {
  OptResult out;
  out.beta_min = r.beta_min;
  out.gamma_min = r.gamma_min;
  out.f_min = r.f_min;
  out.qaoa_expectation = r.qaoa_expectation;
  if (r.has_cut) out.cut_value = r.cut_value;
  out.iterations = r.iterations;
  return out;
}

std::optional<double> unless_nan(double x) {
  if (std::isnan(x)) return std::nullopt;
  return x;
}

std::vector<double> copy_values(const double* values, std::size_t count, const char* what) {
  if (count > 0 && values == nullptr) {
    throw ParameterError(std::string(what) + " values must not be NULL");
  }
  return std::vector<double>(values, values + count);
}

gen::Structure to_structure(const qaoa1_generator_spec& s) {
  switch (s.structure) {
    case QAOA1_STRUCTURE_COMPLETE:
      return gen::Complete{};
    case QAOA1_STRUCTURE_REGULAR:
      return gen::Regular{s.degree};
    case QAOA1_STRUCTURE_ERDOS:
      return gen::ErdosLike{s.edge_count};
  }
  throw ParameterError("unknown structure");
}

gen::CouplingLaw to_couplings(const qaoa1_generator_spec& s) {
  switch (s.couplings) {
    case QAOA1_COUPLINGS_FROM_SET:
      return gen::FromSet{copy_values(s.coupling_values, s.num_coupling_values, "coupling")};
    case QAOA1_COUPLINGS_GAUSSIAN:
      return gen::Gaussian{s.coupling_sigma};
  }
  throw ParameterError("unknown coupling law");
}

gen::FieldLaw to_fields(const qaoa1_generator_spec& s) {
  switch (s.fields) {
    case QAOA1_FIELDS_NONE:
      return gen::NoField{};
    case QAOA1_FIELDS_FROM_SET:
      return gen::FromSet{copy_values(s.field_values, s.num_field_values, "field")};
    case QAOA1_FIELDS_CONSTANT:
      return gen::Constant{s.field_value};
    case QAOA1_FIELDS_GAUSSIAN:
      return gen::Gaussian{s.field_value};
  }
  throw ParameterError("unknown field law");
}

EnsembleModel to_model(const qaoa1_ensemble_model& m) {
  switch (m.kind) {
    case QAOA1_MODEL_SK_GAUSSIAN:
      return model::SkGaussian{m.sigma};
    case QAOA1_MODEL_SK_BIMODAL:
      return model::SkBimodal{m.sigma, m.n};
    case QAOA1_MODEL_SK_TRIMODAL:
      return model::SkTrimodal{m.d, m.n};
    case QAOA1_MODEL_SK_TRIMODAL_LIMIT:
      return model::SkTrimodalLimit{m.d};
    case QAOA1_MODEL_SK_CONSTANT_FIELD:
      return model::SkConstantField{m.sigma, m.h};
    case QAOA1_MODEL_SK_NORMAL_FIELD:
      return model::SkNormalField{m.sigma};
    case QAOA1_MODEL_REGULAR_GAUSSIAN:
      return model::RegularGaussian{m.sigma, m.d, m.n};
    case QAOA1_MODEL_REGULAR_GAUSSIAN_FIELD:
      return model::RegularGaussianField{m.sigma, m.d, m.n};
  }
  throw ParameterError("unknown ensemble model");
}

HeuristicCase to_case(const qaoa1_heuristic_case& c) {
  switch (c.kind) {
    case QAOA1_HEURISTIC_EQUAL_SCALE:
      return heuristic::EqualScale{c.scale, c.d};
    case QAOA1_HEURISTIC_FIELD_DOMINANT:
      return heuristic::FieldDominant{c.r, c.scale, c.d};
    case QAOA1_HEURISTIC_COUPLING_DOMINANT:
      return heuristic::CouplingDominant{c.r, c.scale, c.d};
  }
  throw ParameterError("unknown heuristic case");
}

qaoa1_optimum from_optimum(const EnsembleOptimum& o) {
  return {o.beta_min, o.gamma_min, o.value};
}

}  // namespace

extern "C" {

const char* qaoa1_version(void) { return "0.1.0"; }

const char* qaoa1_last_error(void) { return g_last_error.c_str(); }

const char* qaoa1_status_name(qaoa1_status status) {
  switch (status) {
    case QAOA1_OK: return "ok";
    case QAOA1_ERR_PARSE: return "parse error";
    case QAOA1_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case QAOA1_ERR_RANGE: return "range error";
    case QAOA1_ERR_PARAMETER: return "parameter error";
    case QAOA1_ERR_GENERATION: return "generation error";
    case QAOA1_ERR_PRECONDITION: return "precondition violated";
    case QAOA1_ERR_CAPACITY: return "capacity exceeded";
    case QAOA1_ERR_RESOURCE: return "resource error";
    case QAOA1_ERR_UNSUPPORTED: return "unsupported case";
    case QAOA1_ERR_IO: return "i/o error";
    case QAOA1_ERR_NULL_ARGUMENT: return "null argument";
    case QAOA1_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qaoa1_free_buffer(void* buffer) { std::free(buffer); }

size_t qaoa1_default_threads(void) { return resolve_threads(0); }

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_instance_create(size_t n, const qaoa1_edge* edges, size_t num_edges,
                                   const double* fields, qaoa1_instance** out) {
  QAOA1_REQUIRE(out);
  if (num_edges > 0) QAOA1_REQUIRE(edges);
  return guarded([&] {
    std::vector<Edge> list;
    list.reserve(num_edges);
    for (size_t k = 0; k < num_edges; ++k) {
      list.push_back({edges[k].u, edges[k].v, edges[k].coupling});
    }
    std::vector<double> h;
    if (fields != nullptr) h.assign(fields, fields + n);
    *out = new qaoa1_instance{IsingInstance::build(n, std::move(list), std::move(h))};
  });
}

qaoa1_status qaoa1_instance_parse(const char* text, size_t length, qaoa1_instance** out) {
  QAOA1_REQUIRE(text);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    *out = new qaoa1_instance{parse_gset(std::string_view(text, length))};
  });
}

qaoa1_status qaoa1_instance_load(const char* path, qaoa1_instance** out) {
  QAOA1_REQUIRE(path);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = new qaoa1_instance{load_gset(path)}; });
}

void qaoa1_instance_free(qaoa1_instance* instance) { delete instance; }

qaoa1_status qaoa1_instance_serialize(const qaoa1_instance* instance, char** text,
                                      size_t* length) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(text);
  return guarded([&] {
    const std::string s = serialize(instance->value);
    *text = copy_out<char>(s);
    if (length != nullptr) *length = s.size();
  });
}

size_t qaoa1_instance_num_vertices(const qaoa1_instance* instance) {
  return instance == nullptr ? 0 : instance->value.num_vertices();
}

size_t qaoa1_instance_num_edges(const qaoa1_instance* instance) {
  return instance == nullptr ? 0 : instance->value.num_edges();
}

int qaoa1_instance_has_fields(const qaoa1_instance* instance) {
  return instance != nullptr && instance->value.has_fields() ? 1 : 0;
}

qaoa1_status qaoa1_instance_edge(const qaoa1_instance* instance, size_t e, qaoa1_edge* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  if (e >= instance->value.num_edges()) {
    return fail(QAOA1_ERR_RANGE, "edge index " + std::to_string(e) + " out of range");
  }
  const Edge& edge = instance->value.edge(e);
  *out = {edge.u, edge.v, edge.coupling};
  return QAOA1_OK;
}

qaoa1_status qaoa1_instance_field(const qaoa1_instance* instance, uint32_t i, double* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  if (i >= instance->value.num_vertices()) {
    return fail(QAOA1_ERR_RANGE, "vertex " + std::to_string(i) + " out of range");
  }
  *out = instance->value.field(i);
  return QAOA1_OK;
}

qaoa1_status qaoa1_instance_degree(const qaoa1_instance* instance, uint32_t i, size_t* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = instance->value.degree(i); });
}

double qaoa1_sum_of_weights(const qaoa1_instance* instance) {
  return instance == nullptr ? kNaN : sum_of_weights(instance->value);
}

double qaoa1_sum_of_squares(const qaoa1_instance* instance) {
  return instance == nullptr ? kNaN : sum_of_squares(instance->value);
}

qaoa1_status qaoa1_common_neighbors(const qaoa1_instance* instance, uint32_t u, uint32_t v,
                                    uint32_t* out, size_t capacity, size_t* count) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(count);
  if (capacity > 0) QAOA1_REQUIRE(out);
  return guarded([&] {
    const auto common = common_neighbors(instance->value, u, v);
    for (size_t k = 0; k < common.size() && k < capacity; ++k) out[k] = common[k];
    *count = common.size();
  });
}

void qaoa1_generator_spec_init(qaoa1_generator_spec* spec) {
  if (spec == nullptr) return;
  static const double kSigns[] = {-1.0, 1.0};
  *spec = qaoa1_generator_spec{};
  spec->structure = QAOA1_STRUCTURE_COMPLETE;
  spec->couplings = QAOA1_COUPLINGS_FROM_SET;
  spec->coupling_values = kSigns;
  spec->num_coupling_values = 2;
  spec->fields = QAOA1_FIELDS_NONE;
}

qaoa1_status qaoa1_generate(const qaoa1_generator_spec* spec, size_t n, qaoa1_instance** out) {
  QAOA1_REQUIRE(spec);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    GeneratorSpec s;
    s.structure = to_structure(*spec);
    s.couplings = to_couplings(*spec);
    s.fields = to_fields(*spec);
    s.seed = spec->seed;
    *out = new qaoa1_instance{generate(s, n)};
  });
}

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_expect_vertex(const qaoa1_instance* instance, uint32_t i, double beta,
                                 double gamma, double* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = expect_vertex(instance->value, i, {beta, gamma}); });
}

qaoa1_status qaoa1_expect_edge(const qaoa1_instance* instance, size_t e, double beta,
                               double gamma, double* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = expect_edge(instance->value, e, {beta, gamma}); });
}

qaoa1_status qaoa1_expect_total(const qaoa1_instance* instance, double beta, double gamma,
                                double* total, double* vertex_terms, double* edge_terms) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(total);
  return guarded([&] {
    const auto bd = expect_total(instance->value, {beta, gamma});
    if (vertex_terms != nullptr) {
      std::copy(bd.vertex_terms.begin(), bd.vertex_terms.end(), vertex_terms);
    }
    if (edge_terms != nullptr) std::copy(bd.edge_terms.begin(), bd.edge_terms.end(), edge_terms);
    *total = bd.total;
  });
}

qaoa1_status qaoa1_expect_total_via(const qaoa1_instance* instance, qaoa1_edge_path path,
                                    double beta, double gamma, double* total) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(total);
  return guarded([&] {
    EdgePath p;
    switch (path) {
      case QAOA1_PATH_GENERAL: p = EdgePath::kGeneral; break;
      case QAOA1_PATH_MAXCUT: p = EdgePath::kMaxCut; break;
      case QAOA1_PATH_TRIANGLE_FREE: p = EdgePath::kTriangleFree; break;
      case QAOA1_PATH_COMPLETE: p = EdgePath::kComplete; break;
      default: throw ParameterError("unknown edge path");
    }
    *total = expect_total_via(instance->value, {beta, gamma}, p).total;
  });
}

qaoa1_status qaoa1_expect_p5(const qaoa1_instance* instance, double beta, double gamma,
                             double* total) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(total);
  return guarded([&] { *total = expect_p5(instance->value, {beta, gamma}).total; });
}

qaoa1_status qaoa1_expect_field_only(const qaoa1_instance* instance, double beta,
                                     double gamma, double* total) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(total);
  return guarded([&] { *total = expect_field_only(instance->value, {beta, gamma}).total; });
}

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_default_grid(const qaoa1_instance* instance, qaoa1_grid* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  *out = from_grid(default_grid(instance->value));
  return QAOA1_OK;
}

qaoa1_status qaoa1_scan(const qaoa1_instance* instance, const qaoa1_grid* grid,
                        const qaoa1_scan_options* options, qaoa1_landscape** out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(grid);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    ScanOptions opts;
    if (options != nullptr) {
      opts.threads = options->threads;
      opts.negate_for_display = options->negate != 0;
      if (options->normalizer != 0.0) opts.normalizer = options->normalizer;
    }
    *out = new qaoa1_landscape{scan(instance->value, to_grid(*grid), opts)};
  });
}

void qaoa1_landscape_free(qaoa1_landscape* landscape) { delete landscape; }

qaoa1_status qaoa1_landscape_grid(const qaoa1_landscape* landscape, qaoa1_grid* out) {
  QAOA1_REQUIRE(landscape);
  QAOA1_REQUIRE(out);
  *out = from_grid(landscape->value.grid);
  return QAOA1_OK;
}

const double* qaoa1_landscape_values(const qaoa1_landscape* landscape) {
  return landscape == nullptr ? nullptr : landscape->value.values.data();
}

qaoa1_status qaoa1_landscape_csv(const qaoa1_landscape* landscape, char** text,
                                 size_t* length) {
  QAOA1_REQUIRE(landscape);
  QAOA1_REQUIRE(text);
  return guarded([&] {
    const std::string s = export_csv(landscape->value);
    *text = copy_out<char>(s);
    if (length != nullptr) *length = s.size();
  });
}

qaoa1_status qaoa1_landscape_pgm(const qaoa1_landscape* landscape, unsigned char** bytes,
                                 size_t* length) {
  QAOA1_REQUIRE(landscape);
  QAOA1_REQUIRE(bytes);
  QAOA1_REQUIRE(length);
  return guarded([&] {
    const std::string s = export_pgm(landscape->value);
    *bytes = copy_out<unsigned char>(s);
    *length = s.size();
  });
}

void qaoa1_optimize_options_init(qaoa1_optimize_options* options) {
  if (options == nullptr) return;
  const OptimizeOptions defaults;
  options->grid = nullptr;
  options->starts = defaults.starts;
  options->tolerance = defaults.tolerance;
  options->max_iterations = defaults.max_iterations;
  options->threads = 1;
}

qaoa1_status qaoa1_optimize(const qaoa1_instance* instance,
                            const qaoa1_optimize_options* options, qaoa1_opt_result* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    OptimizeOptions opts;
    if (options != nullptr) {
      if (options->grid != nullptr) opts.grid = to_grid(*options->grid);
      opts.starts = options->starts;
      opts.tolerance = options->tolerance;
      opts.max_iterations = options->max_iterations;
      opts.threads = options->threads;
    }
    *out = from_result(optimize(instance->value, opts));
  });
}

double qaoa1_cut_from_energy(double sum_of_weights, double f_min) {
  return cut_from_energy(sum_of_weights, f_min);
}

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_estimate_informal(size_t n, double sum_of_squares, double* out) {
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = estimate_informal(n, sum_of_squares); });
}

qaoa1_status qaoa1_estimate_montanari(size_t v, size_t e, double* out) {
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = estimate_montanari(v, e); });
}

qaoa1_status qaoa1_estimate_parisi(size_t v, size_t e, double* out) {
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = estimate_parisi(v, e); });
}

qaoa1_status qaoa1_estimate(const qaoa1_instance* instance, qaoa1_estimate_method method,
                            double* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    EstimateMethod m;
    switch (method) {
      case QAOA1_ESTIMATE_INFORMAL: m = EstimateMethod::kInformal; break;
      case QAOA1_ESTIMATE_MONTANARI: m = EstimateMethod::kMontanari; break;
      case QAOA1_ESTIMATE_PARISI: m = EstimateMethod::kParisi; break;
      default: throw ParameterError("unknown estimate method");
    }
    *out = estimate(instance->value, m).value;
  });
}

qaoa1_status qaoa1_ratio_report_compute(const qaoa1_instance* instance,
                                        const qaoa1_opt_result* result, double best_known,
                                        double best_known_cut, qaoa1_ratio_report* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(result);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    const RatioReport r = ratio_report(instance->value, to_result(*result),
                                       unless_nan(best_known), unless_nan(best_known_cut));
    out->qaoa_expectation = r.qaoa_expectation;
    out->estimate = r.estimate;
    out->ratio_exp = r.ratio_exp.value_or(kNaN);
    out->ratio_ising = r.ratio_ising.value_or(kNaN);
    out->cut = r.cut.value_or(kNaN);
    out->ratio_cut = r.ratio_cut.value_or(kNaN);
  });
}

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_ensemble_energy(const qaoa1_ensemble_model* model, double beta,
                                   double gamma, double* out) {
  QAOA1_REQUIRE(model);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = ensemble_energy_per_spin(to_model(*model), {beta, gamma}); });
}

qaoa1_status qaoa1_ensemble_optimal(const qaoa1_ensemble_model* model, qaoa1_optimum* out) {
  QAOA1_REQUIRE(model);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = from_optimum(ensemble_optimal(to_model(*model))); });
}

qaoa1_status qaoa1_regular_optimal(double sigma, double d, uint64_t n, qaoa1_optimum* out) {
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = from_optimum(regular_optimal(sigma, d, n)); });
}

qaoa1_status qaoa1_gamma_min_heuristic(const qaoa1_heuristic_case* c, double* out,
                                       size_t capacity, size_t* count) {
  QAOA1_REQUIRE(c);
  QAOA1_REQUIRE(count);
  if (capacity > 0) QAOA1_REQUIRE(out);
  return guarded([&] {
    const auto gammas = gamma_min_heuristic(to_case(*c));
    for (size_t k = 0; k < gammas.size() && k < capacity; ++k) out[k] = gammas[k];
    *count = gammas.size();
  });
}

qaoa1_status qaoa1_ci_at_heuristic_optimum(const qaoa1_heuristic_case* c, double* out) {
  QAOA1_REQUIRE(c);
  QAOA1_REQUIRE(out);
  return guarded([&] { *out = ci_at_heuristic_optimum(to_case(*c)); });
}

qaoa1_status qaoa1_moment_condition_check(qaoa1_moment_fn moments, void* user,
                                          const double* sizes, size_t num_sizes,
                                          int max_order, double tolerance, int* holds) {
  QAOA1_REQUIRE(moments);
  QAOA1_REQUIRE(holds);
  if (num_sizes > 0) QAOA1_REQUIRE(sizes);
  return guarded([&] {
    MomentCheckOptions opts;
    if (max_order != 0) opts.max_order = max_order;
    if (tolerance != 0.0) opts.tolerance = tolerance;
    const MomentFunction fn = [&](int order, double n) { return moments(order, n, user); };
    *holds = moment_condition_check(fn, std::span<const double>(sizes, num_sizes), opts) ? 1 : 0;
  });
}

// ---------------------------------------------------------------------------

qaoa1_status qaoa1_simulate(const qaoa1_instance* instance, double beta, double gamma,
                            size_t cap, double* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    *out = simulate_qaoa_p1(instance->value, {beta, gamma},
                            cap == 0 ? kDefaultSimulationCap : cap);
  });
}

qaoa1_status qaoa1_ground_state(const qaoa1_instance* instance, double* energy, int* spins) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(energy);
  return guarded([&] {
    const GroundState gs = ground_state(instance->value);
    if (spins != nullptr) std::copy(gs.spins.begin(), gs.spins.end(), spins);
    *energy = gs.energy;
  });
}

qaoa1_status qaoa1_energy_histogram(const qaoa1_instance* instance, double beta, double gamma,
                                    size_t bins, size_t cap, double* mass,
                                    qaoa1_histogram* out) {
  QAOA1_REQUIRE(instance);
  QAOA1_REQUIRE(mass);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    const EnergyHistogram h = sample_energy_histogram(
        instance->value, {beta, gamma}, bins, cap == 0 ? kDefaultSimulationCap : cap);
    std::copy(h.mass.begin(), h.mass.end(), mass);
    *out = {h.lower, h.upper, h.mean};
  });
}

void qaoa1_verify_options_init(qaoa1_verify_options* options) {
  if (options == nullptr) return;
  const VerifyOptions d;
  *options = {d.n_max, d.cases, d.seed, d.angles_per_case, d.max_weight, d.tolerance};
}

qaoa1_status qaoa1_verify(const qaoa1_verify_options* options, qaoa1_verify_report* out) {
  QAOA1_REQUIRE(options);
  QAOA1_REQUIRE(out);
  return guarded([&] {
    VerifyOptions o;
    o.n_max = options->n_max;
    o.cases = options->cases;
    o.seed = options->seed;
    o.angles_per_case = options->angles_per_case;
    o.max_weight = options->max_weight;
    o.tolerance = options->tolerance;
    const VerifyReport r = verify_equivalence(o);
    *out = {r.cases, r.passed, r.max_error};
  });
}

}  // extern "C"
