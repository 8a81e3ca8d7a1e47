#pragma once

// Dense complex matrix services shared by every module: Hermitian spectra,
// operator / trace / Hilbert-Schmidt norms and the matrix exponential.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace fuzzydist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Absolute tolerance for symmetry / Hermiticity checks (relative to max|M|).
inline constexpr double kSymmetry = 1e-12;
/// Residual tolerance for decompositions and norm agreement.
inline constexpr double kDecomposition = 1e-10;
}  // namespace tol

inline constexpr Complex kI{0.0, 1.0};

/// Largest entry modulus; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// max|M - M^dagger| <= tol::kSymmetry * max(1, max|M|).
bool is_hermitian(const ComplexMatrix& m, double rel_tol = tol::kSymmetry);

/// All eigenvalues of a Hermitian matrix, ascending.
/// Throws DomainError for non-square or non-Hermitian input.
std::vector<double> hermitian_eigvals(const ComplexMatrix& m);

/// Eigenvalues (ascending) and matching orthonormal eigenvectors (columns).
struct HermitianEigensystem {
  RealVector values;
  ComplexMatrix vectors;
};
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Largest singular value, computed as sqrt(lambda_max(M^dagger M)).
double operator_norm(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Frobenius norm sqrt(tr(M^dagger M)).
double hilbert_schmidt_norm(const ComplexMatrix& m);

/// Top singular value together with every left/right singular pair whose
/// singular value is within rel_gap of the top one.
struct TopSingular {
  double value = 0.0;
  std::vector<ComplexVector> left;
  std::vector<ComplexVector> right;
};
TopSingular top_singular(const ComplexMatrix& m, double rel_gap = 1e-9);

/// exp(M) by scaling and squaring of a truncated Taylor series.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// A B - B A.
inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

/// Pauli matrices sigma_1, sigma_2, sigma_3.
const ComplexMatrix& pauli(int index);

}  // namespace fuzzydist
