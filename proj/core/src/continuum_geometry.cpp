#include "fuzzydist/continuum_geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

void require_regular(double theta, const char* op) {
  if (std::abs(std::sin(theta)) < 1e-300 || theta <= 0.0 || theta >= std::numbers::pi) {
    throw DomainError(std::string(op) + ": coordinate singularity at theta = " + std::to_string(theta));
  }
}

Vec3 contract(const Spinor& a, const Spinor& b) {
  // a^dagger sigma_i b for the three Pauli matrices.
  Vec3 out{};
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix& s = pauli(i);
    Complex acc = 0.0;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) acc += std::conj(a[r]) * s(r, c) * b[c];
    }
    out[static_cast<std::size_t>(i - 1)] = acc.real();
  }
  return out;
}

Spinor chart_section(double theta, double phi, Chart chart) {
  const EulerPoint p{1.0, theta, phi, 0.0};
  Spinor chi = euler_to_spinor(p);
  // psi = 0 gauge; the chart phases then reduce to e^{-i phi/2} and e^{+i phi/2}.
  const Complex phase = chart == Chart::plus ? std::polar(1.0, -0.5 * phi) : std::polar(1.0, 0.5 * phi);
  return {phase * chi[0], phase * chi[1]};
}

}  // namespace

Spinor euler_to_spinor(const EulerPoint& p) {
  if (!(p.r > 0.0)) throw DomainError("euler_to_spinor: r must be positive");
  const double s = std::sqrt(p.r);
  return {s * std::cos(0.5 * p.theta) * std::polar(1.0, 0.5 * (p.phi + p.psi)),
          s * std::sin(0.5 * p.theta) * std::polar(1.0, -0.5 * (p.phi - p.psi))};
}

Vec3 hopf_map(const Spinor& chi) { return contract(chi, chi); }

Vec3 hopf_map_transposed(const Spinor& chi) {
  return contract({std::conj(chi[0]), std::conj(chi[1])}, {std::conj(chi[0]), std::conj(chi[1])});
}

Vec3 spherical_point(const EulerPoint& p) {
  return {p.r * std::sin(p.theta) * std::cos(p.phi), p.r * std::sin(p.theta) * std::sin(p.phi),
          p.r * std::cos(p.theta)};
}

RealMatrix s3_metric(double theta) {
  RealMatrix g = RealMatrix::Identity(3, 3);
  g(1, 2) = g(2, 1) = std::cos(theta);
  return 0.25 * g;
}

RealMatrix s3_metric_numeric(const EulerPoint& p, double step) {
  auto derivative = [&](int axis, double h) {
    EulerPoint a{1.0, p.theta, p.phi, p.psi};
    EulerPoint b = a;
    double* ca = axis == 0 ? &a.theta : axis == 1 ? &a.phi : &a.psi;
    double* cb = axis == 0 ? &b.theta : axis == 1 ? &b.phi : &b.psi;
    *ca += h;
    *cb -= h;
    const Spinor fa = euler_to_spinor(a);
    const Spinor fb = euler_to_spinor(b);
    return Spinor{(fa[0] - fb[0]) / (2.0 * h), (fa[1] - fb[1]) / (2.0 * h)};
  };
  std::array<Spinor, 3> d;
  for (int axis = 0; axis < 3; ++axis) {
    const Spinor coarse = derivative(axis, step);
    const Spinor fine = derivative(axis, 0.5 * step);
    d[static_cast<std::size_t>(axis)] = {(4.0 * fine[0] - coarse[0]) / 3.0,
                                         (4.0 * fine[1] - coarse[1]) / 3.0};
  }
  RealMatrix g(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (std::conj(d[i][0]) * d[j][0] + std::conj(d[i][1]) * d[j][1]).real();
    }
  }
  return g;
}

KillingFields killing_fields(const EulerPoint& p) {
  require_regular(p.theta, "killing_fields");
  const double s = std::sin(p.theta);
  const double cot = std::cos(p.theta) / s;
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  KillingFields out;
  out.j[0] = {kI * sp, kI * cp * cot, -kI * cp / s};
  out.j[1] = {-kI * cp, kI * cot * sp, -kI * sp / s};
  out.j[2] = {0.0, -kI, 0.0};
  out.k = {0.0, 0.0, kI};
  return out;
}

Complex metric_contract(const RealMatrix& g, const ComplexVec3& u, const ComplexVec3& v) {
  Complex acc = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      acc += std::conj(u[a]) * g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * v[b];
    }
  }
  return acc;
}

CliffordPair clifford_sigmas(double theta, double phi) {
  require_regular(theta, "clifford_sigmas");
  const double cot = std::cos(theta) / std::sin(theta);
  CliffordPair out{ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
  out.sigma_theta << 1.0, -cot * std::polar(1.0, -phi), -cot * std::polar(1.0, phi), -1.0;
  out.sigma_phi << 0.0, -kI * std::polar(1.0, -phi), kI * std::polar(1.0, phi), 0.0;
  return out;
}

double monopole_connection(int k, double theta, Chart chart) {
  const double c = std::cos(theta);
  return chart == Chart::plus ? 0.5 * k * (c - 1.0) : 0.5 * k * (c + 1.0);
}

std::array<Complex, 2> monopole_connection_from_section(int k, double theta, double phi, Chart chart,
                                                        double sign) {
  constexpr double h = 1e-5;
  const Spinor chi = chart_section(theta, phi, chart);
  auto along = [&](double dt, double dp) {
    const Spinor a = chart_section(theta + dt, phi + dp, chart);
    const Spinor b = chart_section(theta - dt, phi - dp, chart);
    const double w = 2.0 * (dt + dp);
    return std::conj(chi[0]) * (a[0] - b[0]) / w + std::conj(chi[1]) * (a[1] - b[1]) / w;
  };
  auto richardson = [&](bool theta_axis) {
    const Complex coarse = theta_axis ? along(h, 0.0) : along(0.0, h);
    const Complex fine = theta_axis ? along(0.5 * h, 0.0) : along(0.0, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
  };
  const Complex pre = sign * kI * static_cast<double>(k);
  return {pre * richardson(true), pre * richardson(false)};
}

Complex tautological_connection(Complex rho, Complex drho) {
  return 0.5 * kI * (rho * std::conj(drho) - std::conj(rho) * drho) / (1.0 + std::norm(rho));
}

Complex tautological_connection_numeric(Complex rho, Complex drho, double step) {
  auto z = [](Complex w) {
    const double s = 1.0 / std::sqrt(1.0 + std::norm(w));
    return std::array<Complex, 2>{s, s * w};
  };
  const auto z0 = z(rho);
  const auto zp = z(rho + step * drho);
  const auto zm = z(rho - step * drho);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 2; ++i) acc += std::conj(z0[i]) * (zp[i] - zm[i]) / (2.0 * step);
  return -kI * acc;
}

Complex coherent_state_connection(Complex z, Complex dz) {
  return kI * (std::conj(z) * dz - z * std::conj(dz)) / (1.0 + std::norm(z));
}

}  // namespace fuzzydist
