#include "fuzzydist/fuzzy_sphere.hpp"

#include <cmath>
#include <string>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

FuzzySphere build_space(HalfInteger n, double lambda) {
  if (n < kHalf) {
    throw DomainError("build_space: n must be >= 1/2, got " + n.to_string());
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("build_space: lambda must be a positive finite real");
  }
  FuzzySphere s;
  s.n_ = n;
  s.lambda_ = lambda;
  s.dim_ = static_cast<std::size_t>(n.twice() + 1);
  s.radius_ = lambda * std::sqrt(casimir_value(n));

  const auto d = static_cast<Eigen::Index>(s.dim_);
  s.x3_ = ComplexMatrix::Zero(d, d);
  s.xplus_ = ComplexMatrix::Zero(d, d);
  for (Eigen::Index row = 0; row < d; ++row) {
    const HalfInteger m = s.n3_at(static_cast<std::size_t>(row));
    s.x3_(row, row) = lambda * m.to_double();
    if (row + 1 < d) {
      // column row+1 holds n3 = m - 1; x+ raises it to m.
      const HalfInteger lower = m - kOne;
      s.xplus_(row, row + 1) = lambda * std::sqrt(ladder_sq(n, lower));
    }
  }
  s.xminus_ = s.xplus_.adjoint();
  return s;
}

ComplexMatrix FuzzySphere::x(int i) const {
  switch (i) {
    case 1: return x1();
    case 2: return x2();
    case 3: return x3_;
    default: throw DomainError("FuzzySphere::x: index must be 1, 2 or 3");
  }
}

ComplexMatrix FuzzySphere::casimir() const {
  const ComplexMatrix a = x1();
  const ComplexMatrix b = x2();
  return a * a + b * b + x3_ * x3_;
}

bool FuzzySphere::contains(HalfInteger n3) const {
  return n3 >= -n_ && n3 <= n_ && (n_ - n3).is_integer();
}

std::size_t FuzzySphere::index_of(HalfInteger n3) const {
  if (!contains(n3)) {
    throw DomainError("n3 = " + n3.to_string() + " is not a valid label for n = " + n_.to_string());
  }
  return static_cast<std::size_t>((n_ - n3).twice() / 2);
}

HalfInteger FuzzySphere::n3_at(std::size_t index) const {
  return n_ - HalfInteger::integer(static_cast<std::int64_t>(index));
}

bool is_density_matrix(const HSOperator& rho) {
  const ComplexMatrix& m = rho.matrix;
  if (m.rows() != m.cols() || !is_hermitian(m)) return false;
  if (std::abs(m.trace() - Complex(1.0)) > tol::kSymmetry) return false;
  return hermitian_eigvals(m).front() >= -tol::kSymmetry;
}

bool is_pure_density_matrix(const HSOperator& rho) {
  return is_density_matrix(rho) && max_abs(rho.matrix * rho.matrix - rho.matrix) <= tol::kSymmetry;
}

HSOperator pure_state(const FuzzySphere& s, HalfInteger n3) {
  const auto i = static_cast<Eigen::Index>(s.index_of(n3));
  const auto d = static_cast<Eigen::Index>(s.dim());
  HSOperator out{s.n(), ComplexMatrix::Zero(d, d)};
  out.matrix(i, i) = 1.0;
  return out;
}

HSOperator adjacent_drho(const FuzzySphere& s, HalfInteger n3) {
  if (!s.contains(n3) || !s.contains(n3 + kOne)) {
    throw DomainError("adjacent_drho: need -n <= n3 <= n-1, got n3 = " + n3.to_string() +
                      " at n = " + s.n().to_string());
  }
  HSOperator out = pure_state(s, n3 + kOne);
  const auto i = static_cast<Eigen::Index>(s.index_of(n3));
  out.matrix(i, i) = -1.0;
  return out;
}

}  // namespace fuzzydist
