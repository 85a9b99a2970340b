#include "qaoa1/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qaoa1/error.hpp"
#include "qaoa1/random.hpp"

namespace qaoa1 {

namespace {

void check_cap(const IsingInstance& instance, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxSimulationQubits);
  if (instance.num_vertices() > limit) {
    throw CapacityError("state-vector simulation limited to " + std::to_string(limit) +
                        " qubits, instance has " +
                        std::to_string(instance.num_vertices()));
  }
}

StateVector evolve(const IsingInstance& instance, const Angles& angles,
                   const std::vector<double>& energies) {
  StateVector psi(instance.num_vertices());
  psi.apply_phase(energies, angles.gamma);
  psi.apply_mixer(angles.beta);
  return psi;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits),
      amps_(std::size_t{1} << num_qubits,
            std::complex<double>(1.0 / std::sqrt(static_cast<double>(std::size_t{1} << num_qubits)),
                                 0.0)) {}

void StateVector::apply_phase(const std::vector<double>& energies, double gamma) {
  for (std::size_t z = 0; z < amps_.size(); ++z) {
    const double phi = -gamma * energies[z];
    amps_[z] *= std::complex<double>(std::cos(phi), std::sin(phi));
  }
}

void StateVector::apply_mixer(double beta) {
  // exp(-i beta X) = [[cos b, -i sin b], [-i sin b, cos b]]
  const double c = std::cos(beta);
  const std::complex<double> s(0.0, -std::sin(beta));
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t block = 0; block < amps_.size(); block += 2 * stride) {
      for (std::size_t k = block; k < block + stride; ++k) {
        const std::complex<double> a0 = amps_[k];
        const std::complex<double> a1 = amps_[k + stride];
        amps_[k] = c * a0 + s * a1;
        amps_[k + stride] = s * a0 + c * a1;
      }
    }
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::expectation(const std::vector<double>& energies) const {
  double s = 0.0;
  for (std::size_t z = 0; z < amps_.size(); ++z) s += std::norm(amps_[z]) * energies[z];
  return s;
}

std::vector<double> energy_table(const IsingInstance& instance) {
  const std::size_t n = instance.num_vertices();
  std::vector<double> out(std::size_t{1} << n);
  for (std::size_t z = 0; z < out.size(); ++z) out[z] = instance.energy(z);
  return out;
}

double simulate_qaoa_p1(const IsingInstance& instance, const Angles& angles,
                        std::size_t cap) {
  check_cap(instance, cap);
  const std::vector<double> energies = energy_table(instance);
  return evolve(instance, angles, energies).expectation(energies);
}

GroundState ground_state(const IsingInstance& instance) {
  const std::size_t n = instance.num_vertices();
  if (n > kMaxGroundStateSpins) {
    throw CapacityError("exhaustive ground-state search limited to " +
                        std::to_string(kMaxGroundStateSpins) + " spins");
  }
  // Gray-code walk: each step flips one spin and updates C incrementally.
  std::vector<int> spin(n, 1);
  double energy = instance.energy(0);
  double best = energy;
  // Ties compare the bit string b_0 b_1 ... b_(n-1) lexicographically, so the
  // key holds vertex 0 in its most significant position.
  std::uint64_t best_key = 0;
  std::uint64_t key = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto flip = static_cast<Vertex>(std::countr_zero(step));
    double local = instance.field(flip);
    for (const Neighbor& nb : instance.neighbors(flip)) local += nb.coupling * spin[nb.vertex];
    energy -= 2.0 * spin[flip] * local;
    spin[flip] = -spin[flip];
    key ^= std::uint64_t{1} << (n - 1 - flip);
    if (energy < best || (energy == best && key < best_key)) {
      best = energy;
      best_key = key;
    }
  }
  GroundState gs;
  gs.spins.resize(n);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool down = (best_key >> (n - 1 - i)) & 1U;
    gs.spins[i] = down ? -1 : 1;
    if (down) bits |= std::uint64_t{1} << i;
  }
  // Recompute exactly; the running sum can drift for non-integer weights.
  gs.energy = instance.energy(bits);
  return gs;
}

EnergyHistogram sample_energy_histogram(const IsingInstance& instance,
                                        const Angles& angles, std::size_t bins,
                                        std::size_t cap) {
  if (bins == 0) throw ParameterError("histogram needs at least one bin");
  check_cap(instance, cap);
  const std::vector<double> energies = energy_table(instance);
  const StateVector psi = evolve(instance, angles, energies);

  EnergyHistogram h;
  const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
  h.lower = *lo;
  h.upper = *hi;
  h.mass.assign(bins, 0.0);
  const double width = (h.upper - h.lower) / static_cast<double>(bins);
  const auto& amps = psi.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) {
    std::size_t bin = 0;
    if (width > 0.0) {
      bin = static_cast<std::size_t>((energies[z] - h.lower) / width);
      bin = std::min(bin, bins - 1);
    }
    h.mass[bin] += std::norm(amps[z]);
  }
  h.mean = psi.expectation(energies);
  return h;
}

namespace {

void check_verify_options(const VerifyOptions& options) {
  if (options.n_max < 2 || options.n_max > kMaxSimulationQubits) {
    throw ParameterError("n_max must lie in [2, " + std::to_string(kMaxSimulationQubits) + "]");
  }
  if (options.max_weight < 1) throw ParameterError("max_weight must be at least 1");
  if (!(options.tolerance >= 0.0)) throw ParameterError("tolerance must be non-negative");
}

// Per-case stream so that case k does not depend on how many cases run.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mix.next();
}

std::int64_t draw_weight(SplitMix64& rng, int max_weight) {
  const auto span = static_cast<std::uint64_t>(2 * max_weight + 1);
  return static_cast<std::int64_t>(rng.below(span)) - max_weight;
}

}  // namespace

IsingInstance verify_case_instance(const VerifyOptions& options, std::size_t index) {
  check_verify_options(options);
  SplitMix64 rng(case_seed(options.seed, index));
  const std::size_t n = 2 + rng.below(options.n_max - 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next() >> 63) {
        edges.push_back({u, v, static_cast<double>(draw_weight(rng, options.max_weight))});
      }
    }
  }
  std::vector<double> fields(n);
  for (auto& h : fields) h = static_cast<double>(draw_weight(rng, options.max_weight));
  return IsingInstance::build(n, std::move(edges), std::move(fields));
}

VerifyReport verify_equivalence(const VerifyOptions& options) {
  check_verify_options(options);
  VerifyReport report;
  report.cases = options.cases;
  for (std::size_t k = 0; k < options.cases; ++k) {
    const IsingInstance inst = verify_case_instance(options, k);
    SplitMix64 rng(~case_seed(options.seed, k));
    bool ok = true;
    for (std::size_t a = 0; a < options.angles_per_case; ++a) {
      const Angles angles{(2.0 * rng.uniform() - 1.0) * std::numbers::pi,
                          (2.0 * rng.uniform() - 1.0) * std::numbers::pi};
      const double err = std::fabs(expect_total(inst, angles).total -
                                   simulate_qaoa_p1(inst, angles, kMaxSimulationQubits));
      report.max_error = std::max(report.max_error, err);
      if (!(err <= options.tolerance)) ok = false;
    }
    if (ok) ++report.passed;
  }
  return report;
}

}  // namespace qaoa1
