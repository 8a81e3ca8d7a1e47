#pragma once

// SU(2) coherent states |z> = T(g(z)) |n, n> labelled by the stereographic coordinate z.

#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/linalg.hpp"

namespace fuzzydist {

struct CoherentState {
  HalfInteger n;
  Complex z;
  ComplexVector amplitudes;

  HSOperator projector() const { return {n, amplitudes * amplitudes.adjoint()}; }
};

/// T(g(z)) = exp(xi J- - conj(xi) J+), xi = -conj(z)/|z| * atan|z|.
ComplexMatrix coherent_group_element(const FuzzySphere& s, Complex z);

CoherentState coherent_state(const FuzzySphere& s, Complex z);

/// First-order displacement of the north-pole projector:
/// i sqrt(2n) (conj(dz) |n,n-1><n,n| - dz |n,n><n,n-1|).
HSOperator coherent_drho(const FuzzySphere& s, Complex dz);

/// lambda sqrt(4 n^2 (n+1) / (3n - 1)) / (1 + |z|^2).
double coherent_metric_coefficient(HalfInteger n, double lambda, Complex z);

/// tr(drho^2) * r / max(||[J+, drho]||, ||[J-, drho]||) evaluated at the north pole.
/// Requires 0 < |dz| <= 1e-3.
double coherent_distance_numeric(HalfInteger n, double lambda, Complex dz);

/// The same functional built from exact coherent states at z and z + dz, rotated back
/// to the north-pole frame by T(z)^dagger. Returns the distance divided by |dz|.
double coherent_difference_quotient(const FuzzySphere& s, Complex z, Complex dz);

/// Difference quotient with one Richardson step (h and h/2) removing the O(|dz|) term.
double coherent_metric_numeric(const FuzzySphere& s, Complex z, Complex dz);

/// max |(2n+1)/(4 pi) \int |z><z| dOmega - I| with a midpoint rule on (theta, phi).
double resolution_of_identity_deviation(const FuzzySphere& s, int grid);

}  // namespace fuzzydist
