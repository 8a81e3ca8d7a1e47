#include "fuzzydist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

void require_nonempty(const ComplexMatrix& m, const char* op) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw DomainError(std::string(op) + ": empty matrix");
  }
}

void require_square(const ComplexMatrix& m, const char* op) {
  require_nonempty(m, op);
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << op << ": matrix must be square, got " << m.rows() << "x" << m.cols();
    throw DomainError(os.str());
  }
}

// Hermitian part, used so tiny asymmetries from floating-point assembly do not
// leak into the eigensolver.
ComplexMatrix symmetrized(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigensystem");
  if (!is_hermitian(m)) {
    throw DomainError("hermitian_eigensystem: matrix is not Hermitian (max|M - M^dagger| exceeds tolerance)");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m));
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("hermitian_eigensystem: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> hermitian_eigvals(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigvals");
  if (!is_hermitian(m)) {
    throw DomainError("hermitian_eigvals: matrix is not Hermitian (max|M - M^dagger| exceeds tolerance)");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("hermitian_eigvals: eigensolver did not converge");
  }
  const RealVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double operator_norm(const ComplexMatrix& m) {
  require_nonempty(m, "operator_norm");
  // Work with the smaller Gram matrix; both share the nonzero spectrum.
  const ComplexMatrix gram = m.rows() < m.cols() ? ComplexMatrix(m * m.adjoint())
                                                 : ComplexMatrix(m.adjoint() * m);
  const std::vector<double> ev = hermitian_eigvals(symmetrized(gram));
  return std::sqrt(std::max(0.0, ev.back()));
}

double trace_norm(const ComplexMatrix& m) {
  require_nonempty(m, "trace_norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double hilbert_schmidt_norm(const ComplexMatrix& m) {
  require_nonempty(m, "hilbert_schmidt_norm");
  return m.norm();
}

TopSingular top_singular(const ComplexMatrix& m, double rel_gap) {
  require_nonempty(m, "top_singular");
  const ComplexMatrix gram = symmetrized(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram);
  const RealVector& ev = solver.eigenvalues();
  const Eigen::Index last = ev.size() - 1;
  TopSingular out;
  out.value = std::sqrt(std::max(0.0, ev(last)));
  if (out.value == 0.0) {
    return out;
  }
  const double cutoff = ev(last) * (1.0 - rel_gap);
  for (Eigen::Index i = last; i >= 0 && ev(i) >= cutoff; --i) {
    const double sigma = std::sqrt(std::max(0.0, ev(i)));
    ComplexVector v = solver.eigenvectors().col(i);
    out.left.push_back(m * v / sigma);
    out.right.push_back(std::move(v));
  }
  return out;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp");
  const Eigen::Index n = m.rows();
  // 1-norm bound, scaled so the Taylor tail below is under 1e-20.
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const ComplexMatrix a = m / std::ldexp(1.0, squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (max_abs(term) < 1e-18 * max_abs(result)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  return result;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const ComplexMatrix& pauli(int index) {
  static const ComplexMatrix s1 = (ComplexMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished();
  static const ComplexMatrix s2 = (ComplexMatrix(2, 2) << 0.0, -kI, kI, 0.0).finished();
  static const ComplexMatrix s3 = (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished();
  switch (index) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw DomainError("pauli: index must be 1, 2 or 3");
  }
}

}  // namespace fuzzydist
