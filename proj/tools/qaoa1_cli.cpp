// qaoa1 command-line front end. Talks to the library only through qaoa1.h.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaoa1/qaoa1.h"

namespace {

// Thrown after a failed library call; carries the status for the exit path.
struct ApiFailure : std::runtime_error {
  ApiFailure(qaoa1_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  qaoa1_status status;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(qaoa1_status s) {
  if (s != QAOA1_OK) {
    throw ApiFailure(s, std::string(qaoa1_status_name(s)) + ": " + qaoa1_last_error());
  }
}

struct InstanceDeleter {
  void operator()(qaoa1_instance* p) const { qaoa1_instance_free(p); }
};
struct LandscapeDeleter {
  void operator()(qaoa1_landscape* p) const { qaoa1_landscape_free(p); }
};
struct BufferDeleter {
  void operator()(void* p) const { qaoa1_free_buffer(p); }
};
using Instance = std::unique_ptr<qaoa1_instance, InstanceDeleter>;
using LandscapePtr = std::unique_ptr<qaoa1_landscape, LandscapeDeleter>;

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// "-" reads standard input.
Instance load_instance(const std::string& path) {
  qaoa1_instance* raw = nullptr;
  if (path == "-") {
    const std::string text = read_all(std::cin);
    check(qaoa1_instance_parse(text.data(), text.size(), &raw));
  } else {
    check(qaoa1_instance_load(path.c_str(), &raw));
  }
  return Instance(raw);
}

// "-" writes standard output.
void write_output(const std::string& path, const char* data, std::size_t size) {
  if (path == "-") {
    std::cout.write(data, static_cast<std::streamsize>(size));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ApiFailure(QAOA1_ERR_IO, "i/o error: cannot write '" + path + "'");
  out.write(data, static_cast<std::streamsize>(size));
  if (!out) throw ApiFailure(QAOA1_ERR_IO, "i/o error: failed writing '" + path + "'");
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string g17(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  return fmt("%.17g", x);
}

std::string fixed(double x, int digits) {
  if (std::isnan(x)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  // Rounded negative zero prints as "-0.000".
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, what));
  if (out.empty()) throw UsageError("empty " + what + " list");
  return out;
}

// Axis override "MIN:MAX:STEPS".
void apply_axis(const std::string& spec, double& lo, double& hi, std::size_t& steps,
                const std::string& axis) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError(axis + " range must be MIN:MAX:STEPS");
  lo = parse_double(parts[0], axis + " minimum");
  hi = parse_double(parts[1], axis + " maximum");
  const double n = parse_double(parts[2], axis + " steps");
  if (n < 2 || n != std::floor(n)) throw UsageError(axis + " steps must be an integer >= 2");
  steps = static_cast<std::size_t>(n);
}

qaoa1_grid make_grid(const qaoa1_instance* inst, const std::string& beta,
                     const std::string& gamma) {
  qaoa1_grid g{};
  check(qaoa1_default_grid(inst, &g));
  if (!beta.empty()) apply_axis(beta, g.beta_min, g.beta_max, g.beta_steps, "beta");
  if (!gamma.empty()) apply_axis(gamma, g.gamma_min, g.gamma_max, g.gamma_steps, "gamma");
  return g;
}

const std::map<std::string, qaoa1_estimate_method> kMethods = {
    {"informal", QAOA1_ESTIMATE_INFORMAL},
    {"montanari", QAOA1_ESTIMATE_MONTANARI},
    {"parisi", QAOA1_ESTIMATE_PARISI},
};

const std::map<std::string, qaoa1_edge_path> kPaths = {
    {"general", QAOA1_PATH_GENERAL},
    {"maxcut", QAOA1_PATH_MAXCUT},
    {"triangle-free", QAOA1_PATH_TRIANGLE_FREE},
    {"complete", QAOA1_PATH_COMPLETE},
};

const std::map<std::string, qaoa1_model_kind> kModels = {
    {"sk-gaussian", QAOA1_MODEL_SK_GAUSSIAN},
    {"sk-bimodal", QAOA1_MODEL_SK_BIMODAL},
    {"sk-trimodal", QAOA1_MODEL_SK_TRIMODAL},
    {"sk-trimodal-limit", QAOA1_MODEL_SK_TRIMODAL_LIMIT},
    {"sk-constant-field", QAOA1_MODEL_SK_CONSTANT_FIELD},
    {"sk-normal-field", QAOA1_MODEL_SK_NORMAL_FIELD},
    {"regular-gaussian", QAOA1_MODEL_REGULAR_GAUSSIAN},
    {"regular-gaussian-field", QAOA1_MODEL_REGULAR_GAUSSIAN_FIELD},
};

const std::map<std::string, qaoa1_heuristic_kind> kHeuristics = {
    {"equal-scale", QAOA1_HEURISTIC_EQUAL_SCALE},
    {"field-dominant", QAOA1_HEURISTIC_FIELD_DOMINANT},
    {"coupling-dominant", QAOA1_HEURISTIC_COUPLING_DOMINANT},
};

// ---------------------------------------------------------------------------
// landscape

struct LandscapeArgs {
  std::string input;
  std::string csv;
  std::string pgm;
  std::string beta;
  std::string gamma;
  bool negate = false;
  std::string normalize;
  std::size_t threads = 0;
};

int run_landscape(const LandscapeArgs& a) {
  const Instance inst = load_instance(a.input);
  const qaoa1_grid grid = make_grid(inst.get(), a.beta, a.gamma);
  qaoa1_scan_options opts{a.threads, a.negate ? 1 : 0, 0.0};
  if (!a.normalize.empty()) {
    check(qaoa1_estimate(inst.get(), kMethods.at(a.normalize), &opts.normalizer));
    if (opts.normalizer == 0.0) throw UsageError("estimate is zero; cannot normalize");
  }
  qaoa1_landscape* raw = nullptr;
  check(qaoa1_scan(inst.get(), &grid, &opts, &raw));
  const LandscapePtr land(raw);

  const bool to_stdout = a.csv.empty() && a.pgm.empty();
  if (!a.csv.empty() || to_stdout) {
    char* text = nullptr;
    std::size_t len = 0;
    check(qaoa1_landscape_csv(land.get(), &text, &len));
    const std::unique_ptr<char, BufferDeleter> hold(text);
    write_output(to_stdout ? "-" : a.csv, text, len);
  }
  if (!a.pgm.empty()) {
    unsigned char* bytes = nullptr;
    std::size_t len = 0;
    check(qaoa1_landscape_pgm(land.get(), &bytes, &len));
    const std::unique_ptr<unsigned char, BufferDeleter> hold(bytes);
    write_output(a.pgm, reinterpret_cast<const char*>(bytes), len);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeArgs {
  std::string input;
  std::string beta;
  std::string gamma;
  std::size_t starts = 8;
  double tolerance = 1e-9;
  std::size_t max_iterations = 500;
  std::size_t threads = 0;
  std::optional<double> best_known;
  std::optional<double> best_known_cut;
};

int run_optimize(const OptimizeArgs& a) {
  const Instance inst = load_instance(a.input);
  const qaoa1_grid grid = make_grid(inst.get(), a.beta, a.gamma);
  qaoa1_optimize_options opts;
  qaoa1_optimize_options_init(&opts);
  opts.grid = &grid;
  opts.starts = a.starts;
  opts.tolerance = a.tolerance;
  opts.max_iterations = a.max_iterations;
  opts.threads = a.threads;
  qaoa1_opt_result r{};
  check(qaoa1_optimize(inst.get(), &opts, &r));
  qaoa1_ratio_report rep{};
  check(qaoa1_ratio_report_compute(inst.get(), &r, a.best_known.value_or(NAN),
                                   a.best_known_cut.value_or(NAN), &rep));

  std::cout << "vertices: " << qaoa1_instance_num_vertices(inst.get()) << "\n"
            << "edges: " << qaoa1_instance_num_edges(inst.get()) << "\n"
            << "sum_of_weights: " << g17(qaoa1_sum_of_weights(inst.get())) << "\n"
            << "beta_min: " << fixed(r.beta_min, 6) << "\n"
            << "gamma_min: " << fixed(r.gamma_min, 6) << "\n"
            << "f_min: " << fixed(r.f_min, 3) << "\n"
            << "qaoa_expectation: " << fixed(r.qaoa_expectation, 3) << "\n";
  if (r.has_cut) std::cout << "cut: " << fixed(r.cut_value, 3) << "\n";
  std::cout << "estimate: " << fixed(rep.estimate, 3) << "\n"
            << "ratio_exp: " << fixed(rep.ratio_exp, 3) << "\n";
  if (a.best_known) std::cout << "ratio_ising: " << fixed(rep.ratio_ising, 3) << "\n";
  if (a.best_known_cut && r.has_cut) {
    std::cout << "ratio_cut: " << fixed(rep.ratio_cut, 3) << "\n";
  }
  std::cout << "iterations: " << r.iterations << "\n";
  std::cout << g17(r.beta_min) << ' ' << g17(r.gamma_min) << ' ' << g17(r.f_min) << ' '
            << g17(r.qaoa_expectation);
  if (r.has_cut) std::cout << ' ' << g17(r.cut_value);
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string input;
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t cap = 20;
  bool ground = false;
  std::size_t histogram = 0;
  std::string path = "general";
};

int run_oracle(const OracleArgs& a) {
  const Instance inst = load_instance(a.input);
  double analytic = 0.0;
  check(qaoa1_expect_total_via(inst.get(), kPaths.at(a.path), a.beta, a.gamma, &analytic));
  double simulated = 0.0;
  check(qaoa1_simulate(inst.get(), a.beta, a.gamma, a.cap, &simulated));
  std::cout << "analytic: " << g17(analytic) << "\n"
            << "simulated: " << g17(simulated) << "\n"
            << "abs_diff: " << g17(std::fabs(analytic - simulated)) << "\n";
  if (a.ground) {
    const std::size_t n = qaoa1_instance_num_vertices(inst.get());
    std::vector<int> spins(n);
    double energy = 0.0;
    check(qaoa1_ground_state(inst.get(), &energy, spins.data()));
    std::cout << "ground_energy: " << g17(energy) << "\nground_spins:";
    for (int s : spins) std::cout << ' ' << (s > 0 ? "+1" : "-1");
    std::cout << "\n";
  }
  if (a.histogram > 0) {
    std::vector<double> mass(a.histogram);
    qaoa1_histogram h{};
    check(qaoa1_energy_histogram(inst.get(), a.beta, a.gamma, a.histogram, a.cap,
                                 mass.data(), &h));
    std::cout << "histogram_mean: " << g17(h.mean) << "\n"
              << "bin_lower,bin_upper,probability\n";
    const double width = (h.upper - h.lower) / static_cast<double>(a.histogram);
    for (std::size_t b = 0; b < mass.size(); ++b) {
      const double lo = h.lower + width * static_cast<double>(b);
      const double hi = b + 1 == mass.size() ? h.upper : lo + width;
      std::cout << g17(lo) << ',' << g17(hi) << ',' << g17(mass[b]) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const qaoa1_verify_options& opts) {
  qaoa1_verify_report rep{};
  check(qaoa1_verify(&opts, &rep));
  const bool ok = rep.passed == rep.cases;
  std::cout << (ok ? "PASS " : "FAIL ") << rep.passed << "/" << rep.cases
            << " max_abs_error=" << fmt("%.3e", rep.max_error) << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
  std::string input;
  std::optional<std::size_t> v;
  std::optional<std::size_t> e;
  std::optional<double> ssq;
  std::string method = "informal";
  int digits = 3;
};

int run_estimate(const EstimateArgs& a) {
  const qaoa1_estimate_method m = kMethods.at(a.method);
  double value = 0.0;
  if (!a.input.empty()) {
    if (a.v || a.e || a.ssq) throw UsageError("give either an instance file or --v/--e");
    const Instance inst = load_instance(a.input);
    check(qaoa1_estimate(inst.get(), m, &value));
  } else {
    if (!a.v) throw UsageError("--v is required without an instance file");
    if (m == QAOA1_ESTIMATE_INFORMAL) {
      if (!a.ssq && !a.e) throw UsageError("informal estimate needs --e or --ssq");
      const double ssq = a.ssq ? *a.ssq : static_cast<double>(*a.e);
      check(qaoa1_estimate_informal(*a.v, ssq, &value));
    } else {
      if (!a.e) throw UsageError("--e is required for this method");
      if (a.ssq) throw UsageError("--ssq only applies to the informal estimate");
      if (m == QAOA1_ESTIMATE_MONTANARI) {
        check(qaoa1_estimate_montanari(*a.v, *a.e, &value));
      } else {
        check(qaoa1_estimate_parisi(*a.v, *a.e, &value));
      }
    }
  }
  std::cout << fixed(value, a.digits) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ensemble

struct EnsembleArgs {
  std::string model;
  double sigma = 1.0;
  double h = 1.0;
  double d = 1.0;
  std::uint64_t n = 2;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::string heuristic;
  unsigned r = 1;
  bool csv = false;
};

int run_ensemble(const EnsembleArgs& a) {
  if (!a.heuristic.empty()) {
    if (!a.model.empty()) throw UsageError("--model and --heuristic are exclusive");
    const unsigned d = static_cast<unsigned>(a.d);
    if (static_cast<double>(d) != a.d) throw UsageError("heuristic degree must be an integer");
    qaoa1_heuristic_case c{kHeuristics.at(a.heuristic), a.h, a.r, d};
    if (c.kind == QAOA1_HEURISTIC_FIELD_DOMINANT) c.scale = a.sigma;
    double gammas[4];
    std::size_t count = 0;
    check(qaoa1_gamma_min_heuristic(&c, gammas, 4, &count));
    double ci = NAN;
    const bool has_ci = c.kind != QAOA1_HEURISTIC_FIELD_DOMINANT;
    if (has_ci) check(qaoa1_ci_at_heuristic_optimum(&c, &ci));
    if (a.csv) {
      std::cout << "case,gamma_candidates,ci_at_optimum\n" << a.heuristic << ',';
      for (std::size_t k = 0; k < count; ++k) std::cout << (k ? ";" : "") << g17(gammas[k]);
      std::cout << ',' << (has_ci ? g17(ci) : "NA") << "\n";
    } else {
      std::cout << "case: " << a.heuristic << "\ngamma_candidates:";
      for (std::size_t k = 0; k < count; ++k) std::cout << ' ' << g17(gammas[k]);
      std::cout << "\n";
      if (has_ci) std::cout << "ci_at_optimum: " << g17(ci) << "\n";
    }
    return 0;
  }
  if (a.model.empty()) throw UsageError("--model or --heuristic is required");
  const qaoa1_ensemble_model m{kModels.at(a.model), a.sigma, a.h, a.d, a.n};
  if (a.beta.has_value() != a.gamma.has_value()) {
    throw UsageError("--beta and --gamma go together");
  }
  if (a.beta) {
    double value = 0.0;
    check(qaoa1_ensemble_energy(&m, *a.beta, *a.gamma, &value));
    if (a.csv) {
      std::cout << "model,beta,gamma,energy_per_spin\n"
                << a.model << ',' << g17(*a.beta) << ',' << g17(*a.gamma) << ',' << g17(value)
                << "\n";
    } else {
      std::cout << "model: " << a.model << "\nenergy_per_spin: " << g17(value) << "\n";
    }
    return 0;
  }
  qaoa1_optimum o{};
  check(qaoa1_ensemble_optimal(&m, &o));
  if (a.csv) {
    std::cout << "model,beta_min,gamma_min,value\n"
              << a.model << ',' << g17(o.beta_min) << ',' << g17(o.gamma_min) << ','
              << g17(o.value) << "\n";
  } else {
    std::cout << "model: " << a.model << "\nbeta_min: " << g17(o.beta_min)
              << "\ngamma_min: " << g17(o.gamma_min) << "\nvalue: " << g17(o.value) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind = "complete";
  std::size_t n = 0;
  std::size_t d = 3;
  std::size_t m = 0;
  std::string couplings = "set:-1,1";
  std::string fields = "none";
  std::uint64_t seed = 0;
  std::string output = "-";
};

// "set:a,b,...", "gaussian:sigma", "const:h", "none".
struct Law {
  std::string name;
  std::vector<double> values;
};

Law parse_law(const std::string& s, const std::string& what) {
  const auto colon = s.find(':');
  Law law;
  law.name = s.substr(0, colon);
  if (colon == std::string::npos) {
    if (law.name != "none") throw UsageError("invalid " + what + " law '" + s + "'");
    return law;
  }
  law.values = parse_list(s.substr(colon + 1), what);
  if ((law.name == "gaussian" || law.name == "const") && law.values.size() != 1) {
    throw UsageError(what + " law '" + law.name + "' takes one value");
  }
  return law;
}

int run_gen(const GenArgs& a) {
  qaoa1_generator_spec spec;
  qaoa1_generator_spec_init(&spec);
  if (a.kind == "complete") {
    spec.structure = QAOA1_STRUCTURE_COMPLETE;
  } else if (a.kind == "regular") {
    spec.structure = QAOA1_STRUCTURE_REGULAR;
    spec.degree = a.d;
  } else if (a.kind == "erdos") {
    spec.structure = QAOA1_STRUCTURE_ERDOS;
    spec.edge_count = a.m;
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }
  const Law couplings = parse_law(a.couplings, "coupling");
  if (couplings.name == "set") {
    spec.couplings = QAOA1_COUPLINGS_FROM_SET;
    spec.coupling_values = couplings.values.data();
    spec.num_coupling_values = couplings.values.size();
  } else if (couplings.name == "gaussian") {
    spec.couplings = QAOA1_COUPLINGS_GAUSSIAN;
    spec.coupling_sigma = couplings.values[0];
  } else {
    throw UsageError("coupling law must be set:... or gaussian:SIGMA");
  }
  const Law fields = parse_law(a.fields, "field");
  if (fields.name == "none") {
    spec.fields = QAOA1_FIELDS_NONE;
  } else if (fields.name == "set") {
    spec.fields = QAOA1_FIELDS_FROM_SET;
    spec.field_values = fields.values.data();
    spec.num_field_values = fields.values.size();
  } else if (fields.name == "const") {
    spec.fields = QAOA1_FIELDS_CONSTANT;
    spec.field_value = fields.values[0];
  } else if (fields.name == "gaussian") {
    spec.fields = QAOA1_FIELDS_GAUSSIAN;
    spec.field_value = fields.values[0];
  } else {
    throw UsageError("field law must be none, set:..., const:H or gaussian:SIGMA");
  }
  spec.seed = a.seed;
  qaoa1_instance* raw = nullptr;
  check(qaoa1_generate(&spec, a.n, &raw));
  const Instance inst(raw);
  char* text = nullptr;
  std::size_t len = 0;
  check(qaoa1_instance_serialize(inst.get(), &text, &len));
  const std::unique_ptr<char, BufferDeleter> hold(text);
  write_output(a.output, text, len);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<std::string> inputs;
  std::string manifest;
  std::string output = "-";
  std::size_t threads = 0;
  std::size_t starts = 8;
  bool no_time = false;
};

struct BenchEntry {
  std::string name;
  std::string path;
  double best_known = NAN;
  double best_known_cut = NAN;
};

std::string basename_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base.erase(dot);
  return base;
}

// Manifest lines: name,path[,best_known[,best_known_cut]]; '#' starts a
// comment; relative paths resolve against the manifest's directory.
std::vector<BenchEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ApiFailure(QAOA1_ERR_IO, "i/o error: cannot open '" + path + "'");
  const auto slash = path.find_last_of('/');
  const std::string dir = slash == std::string::npos ? "" : path.substr(0, slash + 1);
  std::vector<BenchEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (cells.size() < 2 || cells.size() > 4) {
      throw UsageError(path + ":" + std::to_string(line_no) +
                       ": expected name,path[,best_known[,best_known_cut]]");
    }
    BenchEntry entry{cells[0], cells[1]};
    if (!entry.path.empty() && entry.path[0] != '/') entry.path = dir + entry.path;
    if (cells.size() > 2 && !cells[2].empty()) entry.best_known = parse_double(cells[2], "best_known");
    if (cells.size() > 3 && !cells[3].empty()) {
      entry.best_known_cut = parse_double(cells[3], "best_known_cut");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

int run_bench(const BenchArgs& a) {
  std::vector<BenchEntry> entries;
  if (!a.manifest.empty()) entries = read_manifest(a.manifest);
  for (const auto& p : a.inputs) entries.push_back({basename_of(p), p});
  if (entries.empty()) throw UsageError("bench needs instance files or --manifest");

  std::ostringstream out;
  // wall_time_s is local and not comparable across machines.
  out << "name,V,E,sum_of_weights,best_known,qaoa_expectation,ratio_ising,estimate,"
         "ratio_exp,cut,best_known_cut,ratio_cut,beta_min,gamma_min,wall_time_s\n";
  for (const auto& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    const Instance inst = load_instance(entry.path);
    qaoa1_optimize_options opts;
    qaoa1_optimize_options_init(&opts);
    opts.threads = a.threads;
    opts.starts = a.starts;
    qaoa1_opt_result r{};
    check(qaoa1_optimize(inst.get(), &opts, &r));
    qaoa1_ratio_report rep{};
    check(qaoa1_ratio_report_compute(inst.get(), &r, entry.best_known, entry.best_known_cut,
                                     &rep));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << entry.name << ',' << qaoa1_instance_num_vertices(inst.get()) << ','
        << qaoa1_instance_num_edges(inst.get()) << ','
        << g17(qaoa1_sum_of_weights(inst.get())) << ',' << fixed(entry.best_known, 3) << ','
        << fixed(r.qaoa_expectation, 3) << ',' << fixed(rep.ratio_ising, 3) << ','
        << fixed(rep.estimate, 3) << ',' << fixed(rep.ratio_exp, 3) << ','
        << fixed(rep.cut, 3) << ',' << fixed(entry.best_known_cut, 3) << ','
        << fixed(rep.ratio_cut, 3) << ',' << fixed(r.beta_min, 6) << ','
        << fixed(r.gamma_min, 6) << ',' << (a.no_time ? "NA" : fixed(seconds, 3)) << "\n";
  }
  const std::string text = out.str();
  write_output(a.output, text.data(), text.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact single-layer QAOA expectations for Ising instances"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qaoa1_version()));

  const auto method_check = CLI::IsMember({"informal", "montanari", "parisi"});
  const std::string threads_help = "Worker threads (0 = $QAOA1_THREADS or all cores)";

  LandscapeArgs land;
  auto* c_land = app.add_subcommand("landscape", "Scan F(beta, gamma) on a grid");
  c_land->add_option("instance", land.input, "G-set file, or - for stdin")->required();
  c_land->add_option("--csv", land.csv, "Write CSV here (- for stdout)");
  c_land->add_option("--pgm", land.pgm, "Write 16-bit PGM here");
  c_land->add_option("--beta", land.beta, "Beta axis MIN:MAX:STEPS");
  c_land->add_option("--gamma", land.gamma, "Gamma axis MIN:MAX:STEPS");
  c_land->add_flag("--negate", land.negate, "Store -F");
  c_land->add_option("--normalize", land.normalize, "Divide by this estimate")
      ->check(method_check);
  c_land->add_option("--threads", land.threads, threads_help);

  OptimizeArgs opt;
  auto* c_opt = app.add_subcommand("optimize", "Find the angles minimizing F");
  c_opt->add_option("instance", opt.input, "G-set file, or - for stdin")->required();
  c_opt->add_option("--beta", opt.beta, "Coarse beta axis MIN:MAX:STEPS");
  c_opt->add_option("--gamma", opt.gamma, "Coarse gamma axis MIN:MAX:STEPS");
  c_opt->add_option("--starts", opt.starts, "Simplex starts")->check(CLI::PositiveNumber);
  c_opt->add_option("--tol", opt.tolerance, "Simplex diameter tolerance (radians)");
  c_opt->add_option("--max-iter", opt.max_iterations, "Iterations per start");
  c_opt->add_option("--threads", opt.threads, threads_help);
  c_opt->add_option("--best-known", opt.best_known, "Best known energy magnitude");
  c_opt->add_option("--best-known-cut", opt.best_known_cut, "Best known cut");

  OracleArgs orc;
  auto* c_orc = app.add_subcommand("oracle", "Compare the formula with state-vector simulation");
  c_orc->add_option("instance", orc.input, "G-set file, or - for stdin")->required();
  c_orc->add_option("--beta", orc.beta)->required();
  c_orc->add_option("--gamma", orc.gamma)->required();
  c_orc->add_option("--cap", orc.cap, "Qubit cap (hard limit 24)");
  c_orc->add_flag("--ground", orc.ground, "Also report the exact ground state");
  c_orc->add_option("--histogram", orc.histogram, "Energy histogram with this many bins");
  c_orc->add_option("--path", orc.path, "Edge formula")
      ->check(CLI::IsMember({"general", "maxcut", "triangle-free", "complete"}));

  qaoa1_verify_options ver;
  qaoa1_verify_options_init(&ver);
  auto* c_ver = app.add_subcommand("verify", "Randomized formula-versus-simulation sweep");
  c_ver->add_option("--n-max", ver.n_max, "Largest instance size");
  c_ver->add_option("--cases", ver.cases, "Number of random instances");
  c_ver->add_option("--seed", ver.seed);
  c_ver->add_option("--angles", ver.angles_per_case, "Angle pairs per instance");
  c_ver->add_option("--max-weight", ver.max_weight, "Integer weights in [-w, w]");
  c_ver->add_option("--tolerance", ver.tolerance);

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "Estimate the optimal energy magnitude");
  c_est->add_option("instance", est.input, "G-set file (alternative to --v/--e)");
  c_est->add_option("--v", est.v, "Vertex count");
  c_est->add_option("--e", est.e, "Edge count");
  c_est->add_option("--ssq", est.ssq, "Sum of squared coefficients (informal; default --e)");
  c_est->add_option("--method", est.method)->check(method_check);
  c_est->add_option("--digits", est.digits, "Decimal places")->check(CLI::Range(0, 17));

  EnsembleArgs ens;
  auto* c_ens = app.add_subcommand("ensemble", "Ensemble averages and gamma heuristics");
  std::vector<std::string> model_names;
  for (const auto& [k, v] : kModels) model_names.push_back(k);
  c_ens->add_option("--model", ens.model)->check(CLI::IsMember(model_names));
  c_ens->add_option("--sigma", ens.sigma, "Coupling scale (J for field-dominant)");
  c_ens->add_option("--field", ens.h, "Field h (also the scale h for heuristics)");
  c_ens->add_option("--d", ens.d, "Degree parameter");
  c_ens->add_option("--n", ens.n, "System size");
  c_ens->add_option("--beta", ens.beta, "Evaluate at this beta");
  c_ens->add_option("--gamma", ens.gamma, "Evaluate at this gamma");
  c_ens->add_option("--heuristic", ens.heuristic)
      ->check(CLI::IsMember({"equal-scale", "field-dominant", "coupling-dominant"}));
  c_ens->add_option("--r", ens.r, "Weight ratio for heuristics");
  c_ens->add_flag("--csv", ens.csv, "CSV output");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate a seeded random instance");
  c_gen->add_option("--kind", gen.kind)->check(CLI::IsMember({"complete", "regular", "erdos"}));
  c_gen->add_option("--n", gen.n, "Vertex count")->required();
  c_gen->add_option("--d", gen.d, "Degree (regular)");
  c_gen->add_option("--m", gen.m, "Edge count (erdos)");
  c_gen->add_option("--couplings", gen.couplings, "set:a,b,... or gaussian:SIGMA");
  c_gen->add_option("--fields", gen.fields, "none, set:a,b,..., const:H or gaussian:SIGMA");
  c_gen->add_option("--seed", gen.seed);
  c_gen->add_option("-o,--output", gen.output, "Output file (- for stdout)");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Optimize a set of instances and tabulate ratios");
  c_bench->add_option("instances", bench.inputs, "G-set files");
  c_bench->add_option("--manifest", bench.manifest,
                      "Lines name,path[,best_known[,best_known_cut]]");
  c_bench->add_option("-o,--output", bench.output, "CSV output (- for stdout)");
  c_bench->add_option("--threads", bench.threads, threads_help);
  c_bench->add_option("--starts", bench.starts, "Simplex starts")->check(CLI::PositiveNumber);
  c_bench->add_flag("--no-time", bench.no_time, "Write NA in the wall-time column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*c_land) return run_landscape(land);
    if (*c_opt) return run_optimize(opt);
    if (*c_orc) return run_oracle(orc);
    if (*c_ver) return run_verify(ver);
    if (*c_est) return run_estimate(est);
    if (*c_ens) return run_ensemble(ens);
    if (*c_gen) return run_gen(gen);
    if (*c_bench) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
