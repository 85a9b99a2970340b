#include "qaoa1/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "qaoa1/error.hpp"
#include "qaoa1/random.hpp"

namespace qaoa1 {

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

IsingInstance IsingInstance::build(std::size_t n, std::vector<Edge> edges,
                                   std::vector<double> fields) {
  if (n == 0) throw ParameterError("instance needs at least one vertex");
  if (n > 0xFFFFFFFFULL) throw ParameterError("too many vertices");
  if (fields.empty()) fields.assign(n, 0.0);
  if (fields.size() != n) {
    throw ParameterError("expected " + std::to_string(n) + " fields, got " +
                         std::to_string(fields.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(fields[i])) {
      throw ParameterError("non-finite field at vertex " + std::to_string(i));
    }
    if (fields[i] == 0.0) fields[i] = 0.0;  // drop the sign of -0
  }

  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw RangeError("edge " + pair_name(e.u, e.v) + " out of range for n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.coupling)) {
      throw ParameterError("non-finite coupling on edge " + pair_name(e.u, e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v) {
      throw DuplicateEdgeError("duplicate edge " + pair_name(edges[k].u, edges[k].v));
    }
  }
  std::erase_if(edges, [](const Edge& e) { return e.coupling == 0.0; });

  IsingInstance inst;
  inst.edges_ = std::move(edges);
  inst.fields_ = std::move(fields);

  inst.offsets_.assign(n + 1, 0);
  for (const Edge& e : inst.edges_) {
    ++inst.offsets_[e.u + 1];
    ++inst.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) inst.offsets_[i + 1] += inst.offsets_[i];
  inst.adjacency_.resize(inst.offsets_[n]);
  std::vector<std::size_t> cursor(inst.offsets_.begin(), inst.offsets_.end() - 1);
  // Edges are sorted by (u, v), so pushing in edge order leaves every list
  // sorted: for vertex w, entries with neighbor < w come from edges (x, w)
  // which precede all edges (w, y).
  for (const Edge& e : inst.edges_) {
    inst.adjacency_[cursor[e.u]++] = {e.v, e.coupling};
    inst.adjacency_[cursor[e.v]++] = {e.u, e.coupling};
  }

  inst.has_fields_ = std::any_of(inst.fields_.begin(), inst.fields_.end(),
                                 [](double h) { return h != 0.0; });
  auto is_int = [](double x) { return std::nearbyint(x) == x; };
  inst.integer_weights_ =
      std::all_of(inst.fields_.begin(), inst.fields_.end(), is_int) &&
      std::all_of(inst.edges_.begin(), inst.edges_.end(),
                  [&](const Edge& e) { return is_int(e.coupling); });
  if (!inst.edges_.empty()) {
    const double j0 = inst.edges_.front().coupling;
    if (std::all_of(inst.edges_.begin(), inst.edges_.end(),
                    [&](const Edge& e) { return e.coupling == j0; })) {
      inst.uniform_coupling_ = j0;
    }
  }
  const double h0 = inst.fields_.front();
  if (std::all_of(inst.fields_.begin(), inst.fields_.end(),
                  [&](double h) { return h == h0; })) {
    inst.uniform_field_ = h0;
  }
  inst.unit_maxcut_ =
      !inst.has_fields_ &&
      std::all_of(inst.edges_.begin(), inst.edges_.end(),
                  [](const Edge& e) { return std::fabs(e.coupling) == 1.0; });
  return inst;
}

std::span<const Neighbor> IsingInstance::neighbors(Vertex i) const {
  if (i >= num_vertices()) {
    throw RangeError("vertex " + std::to_string(i) + " out of range");
  }
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::size_t IsingInstance::degree(Vertex i) const { return neighbors(i).size(); }

double IsingInstance::coupling(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  if (v >= num_vertices()) {
    throw RangeError("vertex " + std::to_string(v) + " out of range");
  }
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex b) { return a.vertex < b; });
  return (it != list.end() && it->vertex == v) ? it->coupling : 0.0;
}

double IsingInstance::energy(std::uint64_t bits) const {
  auto spin = [bits](Vertex i) { return ((bits >> i) & 1U) ? -1.0 : 1.0; };
  double c = 0.0;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    c += fields_[i] * spin(static_cast<Vertex>(i));
  }
  for (const Edge& e : edges_) c += e.coupling * spin(e.u) * spin(e.v);
  return c;
}

std::vector<Vertex> common_neighbors(const IsingInstance& instance, Vertex u,
                                     Vertex v) {
  const auto a = instance.neighbors(u);
  const auto b = instance.neighbors(v);
  std::vector<Vertex> out;
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p].vertex < b[q].vertex) {
      ++p;
    } else if (b[q].vertex < a[p].vertex) {
      ++q;
    } else {
      out.push_back(a[p].vertex);
      ++p;
      ++q;
    }
  }
  return out;
}

double sum_of_weights(const IsingInstance& instance) {
  double total = 0.0;
  for (const Edge& e : instance.edges()) total += e.coupling;
  if (instance.has_fields()) {
    for (double h : instance.fields()) total += h;
  }
  return total;
}

double sum_of_squares(const IsingInstance& instance) {
  double total = 0.0;
  for (const Edge& e : instance.edges()) total += e.coupling * e.coupling;
  for (double h : instance.fields()) total += h * h;
  return total;
}

// ---------------------------------------------------------------------------
// G-set text format

namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

std::int64_t parse_index(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "invalid vertex index '" + std::string(tok) + "'");
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid weight '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

IsingInstance parse_gset(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (!is_blank(raw)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing header 'n m'");
  const auto header = split_tokens(raw);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const std::uint64_t n = parse_count(header[0], line_no, "vertex count");
  const std::uint64_t m = parse_count(header[1], line_no, "line count");
  if (n == 0) throw ParseError(line_no, "vertex count must be at least 1");
  if (n > 0xFFFFFFFFULL) throw ParseError(line_no, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1U << 24)));
  std::vector<double> fields(n, 0.0);
  std::vector<bool> field_seen(n, false);
  for (std::uint64_t k = 0; k < m; ++k) {
    if (!next_line()) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " data lines, found " + std::to_string(k));
    }
    const auto tok = split_tokens(raw);
    if (tok.size() != 3) throw ParseError(line_no, "expected 'i j w'");
    const std::int64_t i = parse_index(tok[0], line_no);
    const std::int64_t j = parse_index(tok[1], line_no);
    const double w = parse_weight(tok[2], line_no);
    const auto in_range = [n](std::int64_t x) {
      return x >= 1 && static_cast<std::uint64_t>(x) <= n;
    };
    if (!in_range(i) || !in_range(j)) {
      throw RangeError("line " + std::to_string(line_no) + ": vertex index out of range 1.." +
                       std::to_string(n));
    }
    const auto u = static_cast<Vertex>(i - 1);
    const auto v = static_cast<Vertex>(j - 1);
    if (u == v) {
      if (field_seen[u]) {
        throw DuplicateEdgeError("line " + std::to_string(line_no) +
                                 ": duplicate field for vertex " + std::to_string(i));
      }
      field_seen[u] = true;
      fields[u] = w;
    } else {
      edges.push_back({u, v, w});
    }
  }
  if (next_line()) throw ParseError(line_no, "unexpected content after data lines");
  return IsingInstance::build(static_cast<std::size_t>(n), std::move(edges),
                              std::move(fields));
}

IsingInstance parse_gset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_gset(in);
}

IsingInstance load_gset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_gset(in);
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string serialize(const IsingInstance& instance) {
  std::size_t field_lines = 0;
  for (double h : instance.fields()) field_lines += (h != 0.0);
  std::string out;
  out.reserve(24 * (instance.num_edges() + field_lines + 1));
  out += std::to_string(instance.num_vertices());
  out += ' ';
  out += std::to_string(instance.num_edges() + field_lines);
  out += '\n';
  const auto fields = instance.fields();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == 0.0) continue;
    const std::string idx = std::to_string(i + 1);
    out += idx + ' ' + idx + ' ' + format_shortest(fields[i]) + '\n';
  }
  for (const Edge& e : instance.edges()) {
    out += std::to_string(e.u + 1) + ' ' + std::to_string(e.v + 1) + ' ' +
           format_shortest(e.coupling) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

constexpr int kMaxRegularRestarts = 1000;

std::vector<Edge> complete_structure(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 0.0});
    }
  }
  return edges;
}

// Uniformly random set of m distinct pairs (Floyd's sampling over pair ranks).
std::vector<Edge> erdos_structure(std::size_t n, std::size_t m, SplitMix64& rng) {
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > total) {
    throw ParameterError("edge count " + std::to_string(m) + " exceeds " +
                         std::to_string(total) + " possible pairs");
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  // Rank r enumerates pairs (u, v), u < v, row by row.
  std::uint64_t row_start = 0;
  std::uint64_t u = 0;
  for (std::uint64_t r : ranks) {
    while (r >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    const std::uint64_t v = u + 1 + (r - row_start);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 0.0});
  }
  return edges;
}

// Pairing model: stubs are matched at random, rejecting loops and parallel
// edges; a stuck pairing restarts from scratch.
std::vector<Edge> regular_structure(std::size_t n, std::size_t d, SplitMix64& rng) {
  if (d >= n) throw ParameterError("regular degree must be < n");
  if ((n * d) % 2 != 0) throw ParameterError("n*d must be even for a regular graph");
  if (d == 0) return {};

  for (int attempt = 0; attempt < kMaxRegularRestarts; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t k = 0; k < d; ++k) stubs.push_back(static_cast<Vertex>(v));
    }
    std::unordered_set<std::uint64_t> present;
    present.reserve(n * d);
    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    bool stuck = false;
    while (!stubs.empty()) {
      std::size_t failures = 0;
      const std::size_t budget = 8 * stubs.size() + 64;
      for (;;) {
        const std::size_t a = rng.below(stubs.size());
        const std::size_t b = rng.below(stubs.size());
        const Vertex x = stubs[a];
        const Vertex y = stubs[b];
        if (a != b && x != y && !present.contains(pair_key(x, y))) {
          present.insert(pair_key(x, y));
          edges.push_back({std::min(x, y), std::max(x, y), 0.0});
          const std::size_t hi = std::max(a, b);
          const std::size_t lo = std::min(a, b);
          stubs[hi] = stubs.back();
          stubs.pop_back();
          stubs[lo] = stubs.back();
          stubs.pop_back();
          break;
        }
        if (++failures > budget) {
          stuck = true;
          break;
        }
      }
      if (stuck) break;
    }
    if (!stuck) return edges;
  }
  throw GenerationError("no simple " + std::to_string(d) + "-regular graph on " +
                        std::to_string(n) + " vertices after " +
                        std::to_string(kMaxRegularRestarts) + " restarts");
}

void check_weight_set(const std::vector<double>& values, bool allow_zero,
                      const char* what) {
  if (values.empty()) throw ParameterError(std::string(what) + " set is empty");
  for (double x : values) {
    if (!std::isfinite(x)) throw ParameterError(std::string(what) + " set has a non-finite value");
    if (!allow_zero && x == 0.0) {
      throw ParameterError(std::string(what) + " set must not contain 0");
    }
  }
}

}  // namespace

IsingInstance generate(const GeneratorSpec& spec, std::size_t n) {
  if (n == 0) throw ParameterError("n must be at least 1");
  if (const auto* set = std::get_if<gen::FromSet>(&spec.couplings)) {
    check_weight_set(set->values, false, "coupling");
  } else if (std::get<gen::Gaussian>(spec.couplings).sigma <= 0.0) {
    throw ParameterError("coupling sigma must be positive");
  }
  if (const auto* set = std::get_if<gen::FromSet>(&spec.fields)) {
    check_weight_set(set->values, true, "field");
  } else if (const auto* g = std::get_if<gen::Gaussian>(&spec.fields); g && g->sigma <= 0.0) {
    throw ParameterError("field sigma must be positive");
  } else if (const auto* c = std::get_if<gen::Constant>(&spec.fields);
             c && !std::isfinite(c->value)) {
    throw ParameterError("constant field must be finite");
  }

  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges = std::visit(
      [&](const auto& s) -> std::vector<Edge> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, gen::Regular>) {
          return regular_structure(n, s.degree, rng);
        } else if constexpr (std::is_same_v<T, gen::Complete>) {
          return complete_structure(n);
        } else {
          return erdos_structure(n, s.edge_count, rng);
        }
      },
      spec.structure);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  for (Edge& e : edges) {
    if (const auto* set = std::get_if<gen::FromSet>(&spec.couplings)) {
      e.coupling = set->values[rng.below(set->values.size())];
    } else {
      e.coupling = std::get<gen::Gaussian>(spec.couplings).sigma * rng.normal();
    }
  }

  std::vector<double> fields(n, 0.0);
  std::visit(
      [&](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        for (double& h : fields) {
          if constexpr (std::is_same_v<T, gen::FromSet>) {
            h = law.values[rng.below(law.values.size())];
          } else if constexpr (std::is_same_v<T, gen::Constant>) {
            h = law.value;
          } else if constexpr (std::is_same_v<T, gen::Gaussian>) {
            h = law.sigma * rng.normal();
          }
        }
      },
      spec.fields);

  return IsingInstance::build(n, std::move(edges), std::move(fields));
}

}  // namespace qaoa1
