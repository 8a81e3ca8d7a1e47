#include "fuzzydist/coherent_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

double north_pole_functional(const FuzzySphere& s, const ComplexMatrix& drho) {
  const double num = (drho * drho).trace().real();
  const ComplexMatrix jp = s.xplus() / s.lambda();
  const ComplexMatrix jm = s.xminus() / s.lambda();
  const double den = std::max(operator_norm(commutator(jp, drho)), operator_norm(commutator(jm, drho)));
  return num * s.radius() / den;
}

}  // namespace

ComplexMatrix coherent_group_element(const FuzzySphere& s, Complex z) {
  const double mod = std::abs(z);
  if (mod == 0.0) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    return ComplexMatrix::Identity(d, d);
  }
  const Complex xi = -std::conj(z) / mod * std::atan(mod);
  const ComplexMatrix jp = s.xplus() / s.lambda();
  const ComplexMatrix jm = s.xminus() / s.lambda();
  return matrix_exp(xi * jm - std::conj(xi) * jp);
}

CoherentState coherent_state(const FuzzySphere& s, Complex z) {
  return {s.n(), z, coherent_group_element(s, z).col(0)};
}

HSOperator coherent_drho(const FuzzySphere& s, Complex dz) {
  if (s.n() < kHalf) throw DomainError("coherent_drho: n must be at least 1/2");
  const auto d = static_cast<Eigen::Index>(s.dim());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  const double c = std::sqrt(static_cast<double>(s.n().twice()));
  m(1, 0) = kI * c * std::conj(dz);
  m(0, 1) = -kI * c * dz;
  return {s.n(), m};
}

double coherent_metric_coefficient(HalfInteger n, double lambda, Complex z) {
  const double nn = n.to_double();
  return lambda * std::sqrt(4.0 * nn * nn * (nn + 1.0) / (3.0 * nn - 1.0)) / (1.0 + std::norm(z));
}

double coherent_distance_numeric(HalfInteger n, double lambda, Complex dz) {
  const double mod = std::abs(dz);
  if (mod == 0.0) throw DomainError("coherent_distance_numeric: |dz| must be positive");
  if (mod > 1e-3) throw DomainError("coherent_distance_numeric: |dz| must not exceed 1e-3");
  const FuzzySphere s = build_space(n, lambda);
  return north_pole_functional(s, coherent_drho(s, dz).matrix);
}

double coherent_difference_quotient(const FuzzySphere& s, Complex z, Complex dz) {
  const double mod = std::abs(dz);
  if (mod == 0.0) throw DomainError("coherent_difference_quotient: |dz| must be positive");
  const ComplexMatrix t = coherent_group_element(s, z);
  const ComplexVector a = coherent_state(s, z).amplitudes;
  const ComplexVector b = coherent_state(s, z + dz).amplitudes;
  const ComplexMatrix drho = t.adjoint() * (b * b.adjoint() - a * a.adjoint()) * t;
  return north_pole_functional(s, drho) / mod;
}

double coherent_metric_numeric(const FuzzySphere& s, Complex z, Complex dz) {
  const double coarse = coherent_difference_quotient(s, z, dz);
  const double fine = coherent_difference_quotient(s, z, 0.5 * dz);
  return 2.0 * fine - coarse;
}

double resolution_of_identity_deviation(const FuzzySphere& s, int grid) {
  if (grid < 1) throw DomainError("resolution_of_identity_deviation: grid must be positive");
  const auto d = static_cast<Eigen::Index>(s.dim());
  const double pi = std::numbers::pi;
  const double dt = pi / grid;
  const double dp = 2.0 * pi / grid;
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < grid; ++i) {
    const double theta = (i + 0.5) * dt;
    const double weight = std::sin(theta) * dt * dp;
    for (int j = 0; j < grid; ++j) {
      const double phi = (j + 0.5) * dp;
      const Complex z = std::tan(0.5 * theta) * std::polar(1.0, phi);
      const ComplexVector v = coherent_state(s, z).amplitudes;
      acc += weight * (v * v.adjoint());
    }
  }
  acc *= static_cast<double>(d) / (4.0 * pi);
  return max_abs(acc - ComplexMatrix::Identity(d, d));
}

}  // namespace fuzzydist
