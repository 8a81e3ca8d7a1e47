#pragma once

// Distances between states on the quantum Hilbert space H_n of Hilbert-Schmidt
// operators on F_n. A basis vector |n3, m) is the operator |n3><m|; the left label is
// the position, the right label a spectator sector.

#include <cstdint>
#include <map>
#include <vector>

#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/linalg.hpp"
#include "fuzzydist/spectral_triple.hpp"

namespace fuzzydist {

/// P_{l3}(n3): for every position n3 a probability vector over l3, stored l3 descending.
struct ProbabilityProfile {
  HalfInteger n;
  std::map<HalfInteger, std::vector<double>> entries;

  const std::vector<double>& at(HalfInteger n3) const;
  bool has(HalfInteger n3) const { return entries.count(n3) != 0; }
};

/// P = 1/(2n+1) at every position.
ProbabilityProfile uniform_profile(HalfInteger n);
/// All weight on sector l3 at every position.
ProbabilityProfile delta_profile(HalfInteger n, HalfInteger l3);
/// Same vector at every position.
ProbabilityProfile constant_profile(HalfInteger n, const std::vector<double>& p);
/// Throws DomainError unless every vector has 2n+1 nonnegative entries summing to 1.
void validate_profile(const ProbabilityProfile& p);

struct QuantumState {
  HalfInteger n;
  ComplexMatrix matrix;  // (2n+1)^2 square, on the vectorized H_n
};

/// Index of |a, b) in the vectorization.
Eigen::Index quantum_index(const FuzzySphere& s, HalfInteger left, HalfInteger right);

/// Two-branch formula for adjacent positions: right sectors equal -> the configuration
/// value; distinct -> 2 lambda sqrt(n(n+1)) / sqrt(n(n+1) - n3^2 + |n3|).
double quantum_pure_distance(HalfInteger n, double lambda, HalfInteger n3, bool right_same);

/// Distance read off the left-action seminorm. The distinct branch is
/// 2 lambda sqrt(n(n+1)) / max_m sqrt(n(n+1) - m(m+1)) over m in {n3-1, n3, n3+1}.
double quantum_pure_distance_exact(HalfInteger n, double lambda, HalfInteger n3, bool right_same);

/// ||[D, pi(drho_q)]|| for drho_q = |n3+1, l3p)(n3+1, l3p| - |n3, n3p)(n3, n3p|,
/// computed with the eigensolver on the vectorized representation.
double quantum_seminorm_oracle(HalfInteger n, double lambda, HalfInteger n3, HalfInteger n3p,
                               HalfInteger l3p, QuantumAction action = QuantumAction::left);

/// rho_q(n3) = sum_l P_l(n3) |n3, l)(n3, l|.
QuantumState mixed_state(const FuzzySphere& s, HalfInteger n3, const ProbabilityProfile& profile);

/// sum_l [P_l(n3+1)^2 + P_l(n3)^2].
double mixed_numerator(const ProbabilityProfile& p, HalfInteger n3);
/// sum_l [P1^2 (N - (n3+1)^2) + P0^2 (N - n3^2) + P1 P0 (N - n3(n3+1))] with N = n(n+1).
double mixed_denominator_sum(const ProbabilityProfile& p, HalfInteger n3);

/// (r/2) * numerator / sqrt(denominator sum).
double trace_norm_distance(HalfInteger n, double lambda, HalfInteger n3,
                           const ProbabilityProfile& profile);

/// The same quantity recomputed from the explicit commutator [D, pi(drho_q)].
struct MixedDistanceOracle {
  double numerator = 0.0;       // tr(drho_q^2)
  double hs_norm = 0.0;         // Frobenius norm of the commutator
  double trace_norm = 0.0;      // sum of its singular values
  double operator_norm = 0.0;
  double hs_distance = 0.0;     // numerator / hs_norm
  double trace_distance = 0.0;  // numerator / trace_norm
};
MixedDistanceOracle mixed_distance_oracle(HalfInteger n, double lambda, HalfInteger n3,
                                          const ProbabilityProfile& profile);

struct MinimizationCertificate {
  RealMatrix delta;
  RealVector alpha;
  double residual = 0.0;
};

/// Tridiagonal stationarity matrix over positions n_i..n_f, alpha by least squares and
/// the residual max_l ||Delta P_l - 2 alpha||_inf.
MinimizationCertificate delta_matrix(HalfInteger n, double lambda, const ProbabilityProfile& profile,
                                     HalfInteger n_i, HalfInteger n_f);

/// sum over n3 in [n_i, n_f - 1] of trace_norm_distance.
double path_distance(HalfInteger n, double lambda, const ProbabilityProfile& profile,
                     HalfInteger n_i, HalfInteger n_f);

struct PathMinimum {
  ProbabilityProfile profile;
  double distance = 0.0;
  int best_start = 0;
};

/// Multi-start projected gradient descent of path_distance over products of simplices.
PathMinimum minimize_path_distance(HalfInteger n, double lambda, HalfInteger n_i, HalfInteger n_f,
                                   int starts = 20, std::uint64_t seed = 42);

/// (1/sqrt(2n+1)) lambda sqrt(n(n+1)) / sqrt(3 (n(n+1) - n3(n3+1) - 1/3)).
double uniform_minimized_distance(HalfInteger n, double lambda, HalfInteger n3);

/// Energy levels E_{l3}, stored l3 descending.
struct EnergySpectrum {
  std::vector<double> levels;
};

/// E_{l3} = lambda * l3.
EnergySpectrum default_spectrum(HalfInteger n, double lambda);

/// exp(-beta E) / Z, evaluated with the minimum level shifted to zero.
std::vector<double> thermal_profile(const EnergySpectrum& spectrum, double beta);

/// log Z(beta).
double log_partition_function(const EnergySpectrum& spectrum, double beta);

/// sqrt(Z(2 beta)) / Z(beta).
double thermal_prefactor(const EnergySpectrum& spectrum, double beta);

/// prefactor * lambda sqrt(n(n+1)) / sqrt(3 (n(n+1) - n3(n3+1) - 1/3)).
double thermal_distance(HalfInteger n, double lambda, HalfInteger n3, const EnergySpectrum& spectrum,
                        double beta);

}  // namespace fuzzydist
