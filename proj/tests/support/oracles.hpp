#pragma once

// Reference computations used only by tests. None of them go through Eigen's
// decompositions, so agreement with the library is a real cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fuzzydist/linalg.hpp"

namespace oracle {

using fuzzydist::Complex;
using fuzzydist::ComplexMatrix;

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi on the real embedding
/// [[Re, -Im], [Im, Re]]; each eigenvalue appears twice there, so every other one is kept.
inline std::vector<double> jacobi_eigvals(const ComplexMatrix& h) {
  const auto n = static_cast<std::size_t>(h.rows());
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * m + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      at(i, j) = z.real();
      at(i + n, j + n) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
  return out;
}

/// Largest singular value from the Jacobi spectrum of M^dagger M.
inline double spectral_norm(const ComplexMatrix& m) {
  const ComplexMatrix gram = m.adjoint() * m;
  const std::vector<double> ev = jacobi_eigvals(0.5 * (gram + gram.adjoint()));
  return std::sqrt(std::max(0.0, ev.back()));
}

/// Plain Taylor series, adequate for matrices of modest norm.
inline ComplexMatrix series_exp(const ComplexMatrix& m, int terms = 200) {
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix term = out;
  for (int k = 1; k < terms; ++k) {
    term = term * m / static_cast<double>(k);
    out += term;
  }
  return out;
}

/// Spin-j generators built from the textbook ladder formula, n3 descending.
struct Generators {
  ComplexMatrix jp, jm, j3;
};
inline Generators spin_generators(double j) {
  const int d = static_cast<int>(std::lround(2.0 * j)) + 1;
  Generators g{ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)};
  for (int r = 0; r < d; ++r) {
    const double m = j - r;
    g.j3(r, r) = m;
    if (r + 1 < d) g.jp(r, r + 1) = std::sqrt(j * (j + 1) - (m - 1) * m);
  }
  g.jm = g.jp.adjoint();
  return g;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
