#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qaoa1/analytic.hpp"
#include "qaoa1/instance.hpp"

namespace qaoa1 {

// Brute-force reference for small instances. Basis state z has bit b = 0
// meaning s = +1 on that qubit.

inline constexpr std::size_t kDefaultSimulationCap = 20;
inline constexpr std::size_t kMaxSimulationQubits = 24;
inline constexpr std::size_t kMaxGroundStateSpins = 30;

class StateVector {
 public:
  // Uniform superposition over n qubits.
  explicit StateVector(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }

  // a_z *= exp(-i gamma C(z)).
  void apply_phase(const std::vector<double>& energies, double gamma);
  // exp(-i beta X) on every qubit, as in-place pairwise butterflies.
  void apply_mixer(double beta);

  double norm_squared() const;
  double expectation(const std::vector<double>& energies) const;

 private:
  std::size_t num_qubits_;
  std::vector<std::complex<double>> amps_;
};

// C(z) for every basis state.
std::vector<double> energy_table(const IsingInstance& instance);

// <beta,gamma| H_C |beta,gamma> by direct state-vector simulation.
double simulate_qaoa_p1(const IsingInstance& instance, const Angles& angles,
                        std::size_t cap = kDefaultSimulationCap);

struct GroundState {
  double energy;
  std::vector<int> spins;  // +1 / -1 per vertex
};

// Exhaustive minimum. Ties go to the lexicographically smallest bit string
// b_0 b_1 ... b_(n-1), so (+1, -1) beats (-1, +1).
GroundState ground_state(const IsingInstance& instance);

struct EnergyHistogram {
  double lower = 0.0;  // lowest energy over all basis states
  double upper = 0.0;  // highest energy
  std::vector<double> mass;  // probability per bin, equal-width bins
  double mean = 0.0;   // sum_z |a_z|^2 C(z)
};

EnergyHistogram sample_energy_histogram(const IsingInstance& instance,
                                        const Angles& angles, std::size_t bins,
                                        std::size_t cap = kDefaultSimulationCap);

// Randomized sweep comparing expect_total with simulate_qaoa_p1. Each case
// draws n in [2, n_max], includes each vertex pair with probability 1/2, and
// draws integer couplings and fields from [-max_weight, max_weight]. Angles
// are uniform in [-pi, pi].
struct VerifyOptions {
  std::size_t n_max = 10;
  std::size_t cases = 50;
  std::uint64_t seed = 0;
  std::size_t angles_per_case = 4;
  int max_weight = 3;
  double tolerance = 1e-9;
};

struct VerifyReport {
  std::size_t cases = 0;
  std::size_t passed = 0;
  double max_error = 0.0;
};

// One generated case of the sweep; exposed so tests can replay it.
IsingInstance verify_case_instance(const VerifyOptions& options, std::size_t index);

VerifyReport verify_equivalence(const VerifyOptions& options);

}  // namespace qaoa1
