#pragma once

// Commutative S^3 -> S^2 geometry in Euler angles: spinor, Hopf map, metric,
// rotation generators, Clifford generators on S^2 and U(1) connections.

#include <array>

#include "fuzzydist/linalg.hpp"

namespace fuzzydist {

struct EulerPoint {
  double r = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

using Spinor = std::array<Complex, 2>;
using Vec3 = std::array<double, 3>;
using ComplexVec3 = std::array<Complex, 3>;

/// (sqrt(r) cos(theta/2) e^{i(phi+psi)/2}, sqrt(r) sin(theta/2) e^{-i(phi-psi)/2}).
Spinor euler_to_spinor(const EulerPoint& p);

/// chi^dagger sigma_i chi.
Vec3 hopf_map(const Spinor& chi);
/// chi^T sigma_i conj(chi), the contraction with the spinor index order reversed.
Vec3 hopf_map_transposed(const Spinor& chi);
/// (r sin(theta) cos(phi), r sin(theta) sin(phi), r cos(theta)).
Vec3 spherical_point(const EulerPoint& p);

/// (1/4) [[1,0,0],[0,1,cos theta],[0,cos theta,1]] in (theta, phi, psi).
RealMatrix s3_metric(double theta);
/// Re(d_i chi^dagger d_j chi) at r = 1 from central differences with one Richardson step.
RealMatrix s3_metric_numeric(const EulerPoint& p, double step = 1e-5);

/// J_1, J_2, J_3 and K as (d_theta, d_phi, d_psi) components.
struct KillingFields {
  std::array<ComplexVec3, 3> j;
  ComplexVec3 k;
};
/// Throws DomainError at the coordinate singularities sin(theta) = 0.
KillingFields killing_fields(const EulerPoint& p);

/// g(u, v) = sum conj(u^a) g_ab v^b.
Complex metric_contract(const RealMatrix& g, const ComplexVec3& u, const ComplexVec3& v);

struct CliffordPair {
  ComplexMatrix sigma_theta;
  ComplexMatrix sigma_phi;
};
/// The printed generators
///   sigma^theta = [[1, -cot(theta) e^{-i phi}], [-cot(theta) e^{i phi}, -1]],
///   sigma^phi   = [[0, -i e^{-i phi}], [i e^{i phi}, 0]].
CliffordPair clifford_sigmas(double theta, double phi);

enum class Chart { plus, minus };

/// A_phi: plus -> (k/2)(cos theta - 1), minus -> (k/2)(cos theta + 1). A_theta = 0.
double monopole_connection(int k, double theta, Chart chart);

/// sign * i k chi^dagger d_mu chi for the chart section, mu in {theta, phi}, from
/// central differences. sign = -1 is the -i U^dagger dU convention.
std::array<Complex, 2> monopole_connection_from_section(int k, double theta, double phi, Chart chart,
                                                        double sign);

/// (i/2)(rho conj(drho) - conj(rho) drho) / (1 + |rho|^2) = -i Z^dagger dZ, Z = (1, rho)/sqrt(1+|rho|^2).
Complex tautological_connection(Complex rho, Complex drho);
/// -i Z^dagger dZ by central differences along drho.
Complex tautological_connection_numeric(Complex rho, Complex drho, double step = 1e-6);
/// i (conj(z) dz - z conj(dz)) / (1 + |z|^2), the form quoted for coherent states.
Complex coherent_state_connection(Complex z, Complex dz);

}  // namespace fuzzydist
