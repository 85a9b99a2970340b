#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qaoa1 {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  double coupling;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  double coupling;
};

// Ising problem C(s) = sum_i h_i s_i + sum_(i,j) J_ij s_i s_j.
//
// Immutable once built. Edges are stored with u < v, sorted by (u, v), with
// nonzero finite couplings. Adjacency is a CSR layout sorted by neighbor.
class IsingInstance {
 public:
  // Validates and canonicalizes. Edges may be given in either orientation and
  // any order; zero couplings are dropped.
  static IsingInstance build(std::size_t n, std::vector<Edge> edges,
                             std::vector<double> fields = {});

  std::size_t num_vertices() const noexcept { return fields_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const double> fields() const noexcept { return fields_; }
  double field(Vertex i) const { return fields_.at(i); }

  std::span<const Neighbor> neighbors(Vertex i) const;
  std::size_t degree(Vertex i) const;

  // Offset of vertex i's first entry in the flattened adjacency array.
  std::size_t adjacency_offset(Vertex i) const noexcept { return offsets_[i]; }
  std::size_t adjacency_size() const noexcept { return adjacency_.size(); }

  // Coupling J_uv, or 0 when (u, v) is not an edge.
  double coupling(Vertex u, Vertex v) const;

  bool has_fields() const noexcept { return has_fields_; }
  // Set when every coupling (resp. field) equals the same value. An instance
  // with no edges has no uniform coupling.
  std::optional<double> uniform_coupling() const noexcept {
    return uniform_coupling_;
  }
  std::optional<double> uniform_field() const noexcept { return uniform_field_; }
  // True when every coupling is an integer and every field is an integer.
  bool integer_weights() const noexcept { return integer_weights_; }
  // h == 0 everywhere and |J| == 1 on every edge.
  bool is_unit_maxcut() const noexcept { return unit_maxcut_; }

  // C(s) for s given as a bit pattern, bit b = 0 meaning s = +1.
  double energy(std::uint64_t bits) const;

  friend bool operator==(const IsingInstance& a, const IsingInstance& b) {
    return a.fields_ == b.fields_ && a.edges_ == b.edges_;
  }

 private:
  IsingInstance() = default;

  std::vector<Edge> edges_;
  std::vector<double> fields_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::optional<double> uniform_coupling_;
  std::optional<double> uniform_field_;
  bool has_fields_ = false;
  bool integer_weights_ = true;
  bool unit_maxcut_ = false;
};

// Sorted common neighbors of u and v, by merging the two adjacency lists.
std::vector<Vertex> common_neighbors(const IsingInstance& instance, Vertex u,
                                     Vertex v);

// Sum of all couplings, plus the sum of all fields when any field is nonzero.
double sum_of_weights(const IsingInstance& instance);

// Sum of squared coefficients, sum J^2 + sum h^2.
double sum_of_squares(const IsingInstance& instance);

// G-set text format: header "n m" followed by m lines "i j w" (1-based).
// A line with i == j sets the field h_i = w.
IsingInstance parse_gset(std::istream& in);
IsingInstance parse_gset(std::string_view text);
IsingInstance load_gset(const std::string& path);

// Canonical form: field lines by vertex, then edges sorted by (u, v), weights
// in shortest round-trip decimal.
std::string serialize(const IsingInstance& instance);

// Shortest decimal that round-trips to the same double.
std::string format_shortest(double value);

namespace gen {

struct Regular {
  std::size_t degree;
};
struct Complete {};
struct ErdosLike {
  std::size_t edge_count;
};

struct FromSet {
  std::vector<double> values;
};
struct Gaussian {
  double sigma;
};
struct NoField {};
struct Constant {
  double value;
};

using Structure = std::variant<Regular, Complete, ErdosLike>;
using CouplingLaw = std::variant<FromSet, Gaussian>;
using FieldLaw = std::variant<NoField, FromSet, Constant, Gaussian>;

}  // namespace gen

struct GeneratorSpec {
  gen::Structure structure = gen::Complete{};
  gen::CouplingLaw couplings = gen::FromSet{{-1.0, 1.0}};
  gen::FieldLaw fields = gen::NoField{};
  std::uint64_t seed = 0;
};

// Deterministic in (spec, n). Structure is drawn first, then couplings in
// canonical edge order, then fields in vertex order.
IsingInstance generate(const GeneratorSpec& spec, std::size_t n);

}  // namespace qaoa1
