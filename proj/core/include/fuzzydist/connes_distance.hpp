#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/spectral_triple.hpp"

namespace fuzzydist {

enum class DistanceMethod { closed_form, norm_pipeline, optimizer };
std::string to_string(DistanceMethod m);

struct DistanceResult {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::closed_form;
  /// The algebra element realizing the value, scaled onto the Lipschitz ball.
  std::optional<ComplexMatrix> certificate;
  /// ||[D, pi(certificate)]|| - 1.
  std::optional<double> ball_residual;
};

/// lambda sqrt(n(n+1)) / sqrt(n(n+1) - n3(n3+1)) between |n3> and |n3+1>.
double adjacent_distance_closed_form(HalfInteger n, HalfInteger n3, double lambda);

/// tr(drho^2) / ||[D, pi(drho)]|| with drho = rho2 - rho.
DistanceResult distance_lower_bound(const SpectralTriple& t, const ComplexMatrix& rho,
                                    const ComplexMatrix& rho2);
inline DistanceResult distance_lower_bound(const SpectralTriple& t, const HSOperator& rho,
                                           const HSOperator& rho2) {
  return distance_lower_bound(t, rho.matrix, rho2.matrix);
}

/// Lower bound for the adjacent pair (n3, n3+1), built from scratch at k = 0.
DistanceResult adjacent_distance_pipeline(HalfInteger n, HalfInteger n3, double lambda);

struct OptimizerOptions {
  int max_iters = 20000;
  /// Relative improvement over `window` iterations below which a run has converged.
  double tol = 1e-10;
  int window = 50;
  int random_starts = 8;
  /// Also start from a = drho itself, which sits at the lower-bound value.
  bool start_from_drho = true;
  std::uint64_t seed = 42;
};

/// sup tr((rho2 - rho) a) over Hermitian a with ||[D, pi(a)]|| <= 1, by projected
/// subgradient ascent of tr(drho a) / ||[D, pi(a)]|| on the unit sphere of traceless
/// Hermitian matrices. Throws ConvergenceError (carrying the best value) if no start
/// converges within max_iters.
DistanceResult connes_distance_optimized(const SpectralTriple& t, const ComplexMatrix& rho,
                                         const ComplexMatrix& rho2,
                                         const OptimizerOptions& opts = {});
inline DistanceResult connes_distance_optimized(const SpectralTriple& t, const HSOperator& rho,
                                                const HSOperator& rho2,
                                                const OptimizerOptions& opts = {}) {
  return connes_distance_optimized(t, rho.matrix, rho2.matrix, opts);
}

/// arcsin(n3 / sqrt(n(n+1))), measured from the equator.
double quantized_polar_angle(HalfInteger n, HalfInteger n3);

/// lambda sqrt(n(n+1)) / sqrt(n(n+1) - n3^2): continuum arc length for a unit step in n3.
double arc_length_step(HalfInteger n, HalfInteger n3, double lambda);

}  // namespace fuzzydist
