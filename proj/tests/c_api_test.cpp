#include "qaoa1/qaoa1.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"

namespace {

constexpr double kPi = std::numbers::pi;

struct InstanceDeleter {
  void operator()(qaoa1_instance* p) const { qaoa1_instance_free(p); }
};
using Instance = std::unique_ptr<qaoa1_instance, InstanceDeleter>;

Instance parse(const std::string& text) {
  qaoa1_instance* raw = nullptr;
  EXPECT_EQ(qaoa1_instance_parse(text.data(), text.size(), &raw), QAOA1_OK) << qaoa1_last_error();
  return Instance(raw);
}

Instance single_edge() { return parse("2 1\n1 2 1\n"); }

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(qaoa1_version(), "0.1.0");
  EXPECT_STREQ(qaoa1_status_name(QAOA1_OK), "ok");
  EXPECT_STRNE(qaoa1_status_name(QAOA1_ERR_CAPACITY), qaoa1_status_name(QAOA1_ERR_RANGE));
  EXPECT_GE(qaoa1_default_threads(), 1u);
}

TEST(CApi, CreateAndAccessors) {
  const qaoa1_edge edges[] = {{2, 0, -1.5}, {0, 1, 2.0}};
  const double fields[] = {0.0, 1.0, 0.0};
  qaoa1_instance* raw = nullptr;
  ASSERT_EQ(qaoa1_instance_create(3, edges, 2, fields, &raw), QAOA1_OK);
  Instance inst(raw);
  EXPECT_EQ(qaoa1_instance_num_vertices(raw), 3u);
  EXPECT_EQ(qaoa1_instance_num_edges(raw), 2u);
  EXPECT_EQ(qaoa1_instance_has_fields(raw), 1);
  qaoa1_edge e{};
  ASSERT_EQ(qaoa1_instance_edge(raw, 1, &e), QAOA1_OK);
  EXPECT_EQ(e.u, 0u);
  EXPECT_EQ(e.v, 2u);
  EXPECT_EQ(e.coupling, -1.5);
  double h = 0;
  ASSERT_EQ(qaoa1_instance_field(raw, 1, &h), QAOA1_OK);
  EXPECT_EQ(h, 1.0);
  size_t deg = 0;
  ASSERT_EQ(qaoa1_instance_degree(raw, 0, &deg), QAOA1_OK);
  EXPECT_EQ(deg, 2u);
  EXPECT_EQ(qaoa1_sum_of_weights(raw), 1.5);
  EXPECT_EQ(qaoa1_sum_of_squares(raw), 2.25 + 4.0 + 1.0);
  EXPECT_EQ(qaoa1_instance_edge(raw, 2, &e), QAOA1_ERR_RANGE);
  EXPECT_EQ(qaoa1_instance_field(raw, 3, &h), QAOA1_ERR_RANGE);
}

TEST(CApi, ErrorCodesAndLastError) {
  qaoa1_instance* raw = nullptr;
  const std::string bad = "2 1\n1 3 1\n";
  EXPECT_EQ(qaoa1_instance_parse(bad.data(), bad.size(), &raw), QAOA1_ERR_RANGE);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(qaoa1_last_error()).find("line 2"), std::string::npos);

  const std::string dup = "2 2\n1 2 1\n2 1 1\n";
  EXPECT_EQ(qaoa1_instance_parse(dup.data(), dup.size(), &raw), QAOA1_ERR_DUPLICATE_EDGE);
  const std::string junk = "2 x\n";
  EXPECT_EQ(qaoa1_instance_parse(junk.data(), junk.size(), &raw), QAOA1_ERR_PARSE);
  EXPECT_EQ(qaoa1_instance_load("/nonexistent/file.txt", &raw), QAOA1_ERR_IO);

  auto inst = single_edge();
  double out = 0;
  EXPECT_EQ(qaoa1_expect_total(inst.get(), 0.1, 0.2, &out, nullptr, nullptr), QAOA1_OK);
  EXPECT_STREQ(qaoa1_last_error(), "");
}

TEST(CApi, LastErrorIsThreadLocal) {
  qaoa1_instance* raw = nullptr;
  EXPECT_EQ(qaoa1_instance_load("/nonexistent/file.txt", &raw), QAOA1_ERR_IO);
  std::string other;
  std::thread([&] { other = qaoa1_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_STRNE(qaoa1_last_error(), "");
}

TEST(CApi, NullArguments) {
  double out = 0;
  EXPECT_EQ(qaoa1_expect_total(nullptr, 0, 0, &out, nullptr, nullptr), QAOA1_ERR_NULL_ARGUMENT);
  auto inst = single_edge();
  EXPECT_EQ(qaoa1_expect_total(inst.get(), 0, 0, nullptr, nullptr, nullptr),
            QAOA1_ERR_NULL_ARGUMENT);
  EXPECT_EQ(qaoa1_instance_parse(nullptr, 0, nullptr), QAOA1_ERR_NULL_ARGUMENT);
  EXPECT_EQ(qaoa1_scan(inst.get(), nullptr, nullptr, nullptr), QAOA1_ERR_NULL_ARGUMENT);
  EXPECT_EQ(qaoa1_instance_num_vertices(nullptr), 0u);
  qaoa1_instance_free(nullptr);
  qaoa1_landscape_free(nullptr);
  qaoa1_free_buffer(nullptr);
}

TEST(CApi, SerializeRoundTrip) {
  auto inst = parse("3 3\n2 2 -0.5\n3 1 2\n1 2 0.1\n");
  char* text = nullptr;
  size_t len = 0;
  ASSERT_EQ(qaoa1_instance_serialize(inst.get(), &text, &len), QAOA1_OK);
  EXPECT_EQ(std::string(text, len), "3 3\n2 2 -0.5\n1 2 0.1\n1 3 2\n");
  EXPECT_EQ(text[len], '\0');
  auto again = parse(std::string(text, len));
  qaoa1_free_buffer(text);
  ASSERT_EQ(qaoa1_instance_serialize(again.get(), &text, &len), QAOA1_OK);
  EXPECT_EQ(std::string(text, len), "3 3\n2 2 -0.5\n1 2 0.1\n1 3 2\n");
  qaoa1_free_buffer(text);
}

TEST(CApi, CommonNeighbors) {
  auto inst = parse("5 5\n1 2 1\n1 3 1\n1 5 1\n2 3 1\n2 4 1\n");
  uint32_t out[4];
  size_t count = 0;
  ASSERT_EQ(qaoa1_common_neighbors(inst.get(), 0, 1, out, 4, &count), QAOA1_OK);
  ASSERT_EQ(count, 1u);
  EXPECT_EQ(out[0], 2u);
  ASSERT_EQ(qaoa1_common_neighbors(inst.get(), 0, 1, nullptr, 0, &count), QAOA1_OK);
  EXPECT_EQ(count, 1u);
}

TEST(CApi, Generate) {
  qaoa1_generator_spec spec;
  qaoa1_generator_spec_init(&spec);
  spec.structure = QAOA1_STRUCTURE_REGULAR;
  spec.degree = 3;
  spec.seed = 11;
  qaoa1_instance* raw = nullptr;
  ASSERT_EQ(qaoa1_generate(&spec, 20, &raw), QAOA1_OK);
  Instance inst(raw);
  EXPECT_EQ(qaoa1_instance_num_edges(raw), 30u);
  spec.degree = 20;
  EXPECT_EQ(qaoa1_generate(&spec, 20, &raw), QAOA1_ERR_PARAMETER);
}

TEST(CApi, Expectations) {
  auto inst = single_edge();
  double f = 0;
  ASSERT_EQ(qaoa1_expect_total(inst.get(), -kPi / 8, kPi / 4, &f, nullptr, nullptr), QAOA1_OK);
  EXPECT_NEAR(f, -1.0, 1e-15);
  double v[2], e[1];
  ASSERT_EQ(qaoa1_expect_total(inst.get(), 0.3, 0.7, &f, v, e), QAOA1_OK);
  EXPECT_EQ(v[0], 0.0);
  double edge = 0;
  ASSERT_EQ(qaoa1_expect_edge(inst.get(), 0, 0.3, 0.7, &edge), QAOA1_OK);
  EXPECT_EQ(e[0], edge);
  EXPECT_EQ(f, edge);
  auto cut = parse("2 1\n1 2 -1\n");
  for (auto path : {QAOA1_PATH_GENERAL, QAOA1_PATH_MAXCUT, QAOA1_PATH_TRIANGLE_FREE,
                    QAOA1_PATH_COMPLETE}) {
    double g = 0;
    ASSERT_EQ(qaoa1_expect_total_via(cut.get(), path, 0.3, 0.7, &g), QAOA1_OK);
    EXPECT_NEAR(g, f, 1e-14);
  }
  double g = 0;
  EXPECT_EQ(qaoa1_expect_total_via(inst.get(), QAOA1_PATH_MAXCUT, 0.3, 0.7, &g),
            QAOA1_ERR_PRECONDITION);
  double sim = 0;
  ASSERT_EQ(qaoa1_simulate(inst.get(), 0.3, 0.7, 0, &sim), QAOA1_OK);
  EXPECT_NEAR(sim, f, 1e-12);
  EXPECT_EQ(qaoa1_expect_p5(inst.get(), 0.3, 0.7, &f), QAOA1_ERR_PRECONDITION);
  EXPECT_EQ(qaoa1_expect_vertex(inst.get(), 5, 0.3, 0.7, &f), QAOA1_ERR_RANGE);
}

TEST(CApi, ScanAndExports) {
  auto inst = single_edge();
  const qaoa1_grid grid{-kPi / 4, kPi / 4, 0.0, kPi / 2, 5, 3};
  qaoa1_landscape* l = nullptr;
  ASSERT_EQ(qaoa1_scan(inst.get(), &grid, nullptr, &l), QAOA1_OK);
  const double* values = qaoa1_landscape_values(l);
  EXPECT_NEAR(values[1 * 3 + 1], -1.0, 1e-15);
  qaoa1_grid back{};
  ASSERT_EQ(qaoa1_landscape_grid(l, &back), QAOA1_OK);
  EXPECT_EQ(back.gamma_steps, 3u);

  char* csv = nullptr;
  size_t csv_len = 0;
  ASSERT_EQ(qaoa1_landscape_csv(l, &csv, &csv_len), QAOA1_OK);
  EXPECT_EQ(std::strncmp(csv, "beta\\gamma,0,", 13), 0);
  qaoa1_free_buffer(csv);

  unsigned char* pgm = nullptr;
  size_t pgm_len = 0;
  ASSERT_EQ(qaoa1_landscape_pgm(l, &pgm, &pgm_len), QAOA1_OK);
  EXPECT_EQ(pgm_len, std::strlen("P5\n3 5\n65535\n") + 2 * 15);
  qaoa1_free_buffer(pgm);
  qaoa1_landscape_free(l);

  qaoa1_scan_options o{4, 1, 2.0};
  ASSERT_EQ(qaoa1_scan(inst.get(), &grid, &o, &l), QAOA1_OK);
  EXPECT_NEAR(qaoa1_landscape_values(l)[4], 0.5, 1e-15);
  qaoa1_landscape_free(l);

  const qaoa1_grid bad{0, 0, 0, 1, 2, 2};
  EXPECT_EQ(qaoa1_scan(inst.get(), &bad, nullptr, &l), QAOA1_ERR_PARAMETER);
  const qaoa1_grid huge{0, 1, 0, 1, 100000, 100000};
  EXPECT_EQ(qaoa1_scan(inst.get(), &huge, nullptr, &l), QAOA1_ERR_RESOURCE);
}

TEST(CApi, OptimizeAndRatios) {
  auto inst = single_edge();
  qaoa1_opt_result r{};
  ASSERT_EQ(qaoa1_optimize(inst.get(), nullptr, &r), QAOA1_OK);
  EXPECT_NEAR(r.f_min, -1.0, 1e-12);
  EXPECT_EQ(r.has_cut, 1);
  EXPECT_NEAR(r.cut_value, 1.0, 1e-12);

  qaoa1_ratio_report rep{};
  ASSERT_EQ(qaoa1_ratio_report_compute(inst.get(), &r, 1.0, NAN, &rep), QAOA1_OK);
  EXPECT_NEAR(rep.ratio_ising, 1.0, 1e-12);
  EXPECT_TRUE(std::isnan(rep.ratio_cut));
  EXPECT_NEAR(rep.estimate, 1.18 * std::sqrt(2.0), 1e-15);
  EXPECT_EQ(qaoa1_cut_from_energy(19176, -1482.034), (19176 + 1482.034) / 2);

  qaoa1_optimize_options o;
  qaoa1_optimize_options_init(&o);
  EXPECT_EQ(o.starts, 8u);
  o.starts = 0;
  EXPECT_EQ(qaoa1_optimize(inst.get(), &o, &r), QAOA1_ERR_PARAMETER);
}

TEST(CApi, Estimators) {
  double x = 0;
  ASSERT_EQ(qaoa1_estimate_informal(800, 19176, &x), QAOA1_OK);
  EXPECT_NEAR(x, 4621.745, 5e-4);
  EXPECT_EQ(qaoa1_estimate_montanari(1, 0, &x), QAOA1_ERR_PARAMETER);
  ASSERT_EQ(qaoa1_estimate_parisi(10, 0, &x), QAOA1_OK);
  EXPECT_EQ(x, 0.0);
}

TEST(CApi, Ensembles) {
  qaoa1_ensemble_model m{QAOA1_MODEL_SK_GAUSSIAN, 1.0, 0, 0, 0};
  qaoa1_optimum o{};
  ASSERT_EQ(qaoa1_ensemble_optimal(&m, &o), QAOA1_OK);
  EXPECT_EQ(o.gamma_min, 0.5);
  m.sigma = 0;
  double x = 0;
  EXPECT_EQ(qaoa1_ensemble_energy(&m, 0.1, 0.1, &x), QAOA1_ERR_PARAMETER);
  ASSERT_EQ(qaoa1_regular_optimal(1.0, 99, 100, &o), QAOA1_OK);
  EXPECT_NEAR(o.value, -1 / (2 * std::sqrt(std::numbers::e)), 1e-15);

  qaoa1_heuristic_case c{QAOA1_HEURISTIC_EQUAL_SCALE, 1.0, 0, 3};
  double cand[2];
  size_t count = 0;
  ASSERT_EQ(qaoa1_gamma_min_heuristic(&c, cand, 2, &count), QAOA1_OK);
  EXPECT_EQ(count, 2u);
  EXPECT_NEAR(cand[0], kPi / 12, 1e-15);
  c.kind = QAOA1_HEURISTIC_FIELD_DOMINANT;
  c.r = 2;
  EXPECT_EQ(qaoa1_ci_at_heuristic_optimum(&c, &x), QAOA1_ERR_UNSUPPORTED);
}

TEST(CApi, MomentCheckCallback) {
  const double sizes[] = {1e4, 1e5, 1e6};
  int holds = -1;
  auto bimodal = [](int order, double n, void*) {
    return order % 2 ? 0.0 : n * std::pow(n - 1.0, -order / 2.0);
  };
  ASSERT_EQ(qaoa1_moment_condition_check(bimodal, nullptr, sizes, 3, 0, 0, &holds), QAOA1_OK);
  EXPECT_EQ(holds, 1);
  double d = 2.0;
  auto trimodal = [](int order, double, void* user) {
    return order % 2 ? 0.0 : *static_cast<double*>(user);
  };
  ASSERT_EQ(qaoa1_moment_condition_check(trimodal, &d, sizes, 3, 0, 0, &holds), QAOA1_OK);
  EXPECT_EQ(holds, 0);
}

TEST(CApi, OracleFunctions) {
  auto inst = single_edge();
  double energy = 0;
  int spins[2];
  ASSERT_EQ(qaoa1_ground_state(inst.get(), &energy, spins), QAOA1_OK);
  EXPECT_EQ(energy, -1.0);
  EXPECT_EQ(spins[0], 1);
  EXPECT_EQ(spins[1], -1);

  double mass[4];
  qaoa1_histogram h{};
  ASSERT_EQ(qaoa1_energy_histogram(inst.get(), -kPi / 8, kPi / 4, 4, 0, mass, &h), QAOA1_OK);
  EXPECT_NEAR(mass[0], 1.0, 1e-15);
  EXPECT_NEAR(h.mean, -1.0, 1e-15);

  qaoa1_verify_options o;
  qaoa1_verify_options_init(&o);
  o.cases = 10;
  qaoa1_verify_report rep{};
  ASSERT_EQ(qaoa1_verify(&o, &rep), QAOA1_OK);
  EXPECT_EQ(rep.passed, 10u);

  std::string text = "21 1\n1 21 1\n";
  auto big = parse(text);
  double f = 0;
  EXPECT_EQ(qaoa1_simulate(big.get(), 0.1, 0.1, 0, &f), QAOA1_ERR_CAPACITY);
}
