#pragma once

// The fuzzy sphere F_n: a (2n+1)-dimensional space carrying position
// operators x1, x2, x3 with [x_i, x_j] = i lambda eps_ijk x_k and
// x^2 = lambda^2 n(n+1). Basis order is n3 descending: row 0 <-> n3 = +n.

#include <cstddef>

#include "fuzzydist/half_integer.hpp"
#include "fuzzydist/linalg.hpp"

namespace fuzzydist {

class FuzzySphere {
 public:
  HalfInteger n() const { return n_; }
  double lambda() const { return lambda_; }
  std::size_t dim() const { return dim_; }
  /// lambda * sqrt(n(n+1)).
  double radius() const { return radius_; }

  const ComplexMatrix& x3() const { return x3_; }
  const ComplexMatrix& xplus() const { return xplus_; }
  const ComplexMatrix& xminus() const { return xminus_; }
  ComplexMatrix x1() const { return 0.5 * (xplus_ + xminus_); }
  ComplexMatrix x2() const { return (xplus_ - xminus_) / (2.0 * kI); }
  /// x_i for i in {1,2,3}.
  ComplexMatrix x(int i) const;
  /// Dimensionless generators J_i = x_i / lambda.
  ComplexMatrix j(int i) const { return x(i) / lambda_; }
  ComplexMatrix casimir() const;

  bool contains(HalfInteger n3) const;
  /// Basis row of |n, n3>; throws DomainError when n3 is not a valid label.
  std::size_t index_of(HalfInteger n3) const;
  HalfInteger n3_at(std::size_t index) const;

 private:
  friend FuzzySphere build_space(HalfInteger n, double lambda);
  FuzzySphere() = default;

  HalfInteger n_;
  double lambda_ = 1.0;
  std::size_t dim_ = 0;
  double radius_ = 0.0;
  ComplexMatrix x3_;
  ComplexMatrix xplus_;
  ComplexMatrix xminus_;
};

/// Builds F_n with <n3+1|x+|n3> = lambda sqrt(n(n+1) - n3(n3+1)).
/// Requires n >= 1/2 and lambda > 0.
FuzzySphere build_space(HalfInteger n, double lambda = 1.0);

/// A Hilbert-Schmidt operator on F_n (algebra element, density matrix, or d rho).
struct HSOperator {
  HalfInteger n;
  ComplexMatrix matrix;

  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
  Complex trace() const { return matrix.trace(); }
};

/// Checks Hermitian, unit trace and positivity within 1e-12.
bool is_density_matrix(const HSOperator& rho);
/// Additionally rho^2 = rho within 1e-12.
bool is_pure_density_matrix(const HSOperator& rho);

/// |n, n3><n, n3|.
HSOperator pure_state(const FuzzySphere& s, HalfInteger n3);

/// |n3+1><n3+1| - |n3><n3|.
HSOperator adjacent_drho(const FuzzySphere& s, HalfInteger n3);

}  // namespace fuzzydist
