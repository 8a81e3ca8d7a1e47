#include "fuzzydist/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

void require_cutoff(HalfInteger n, std::uint32_t cutoff, const char* op) {
  if (static_cast<std::int64_t>(cutoff) < n.twice() + 2) {
    throw DomainError(std::string(op) + ": cutoff " + std::to_string(cutoff) +
                      " is below 2n+2 for n = " + n.to_string());
  }
}

ComplexMatrix power(const ComplexMatrix& m, std::uint32_t k) {
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  for (std::uint32_t i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

std::int64_t winding_number(const FockMonomial& mono) {
  return static_cast<std::int64_t>(mono.m1) + mono.m2 - static_cast<std::int64_t>(mono.n1) - mono.n2;
}

TwoModeFock::TwoModeFock(std::uint32_t cutoff, double lambda) : cutoff_(cutoff), lambda_(lambda) {
  if (cutoff < 1) throw DomainError("TwoModeFock: cutoff must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("TwoModeFock: lambda must be positive");
  const Eigen::Index d = dim();
  chi1_ = ComplexMatrix::Zero(d, d);
  chi2_ = ComplexMatrix::Zero(d, d);
  number_ = ComplexMatrix::Zero(d, d);
  const double scale = std::sqrt(lambda / 2.0);
  for (std::uint32_t a = 0; a <= cutoff; ++a) {
    for (std::uint32_t b = 0; b <= cutoff; ++b) {
      const Eigen::Index col = index(a, b);
      if (a > 0) chi1_(index(a - 1, b), col) = scale * std::sqrt(static_cast<double>(a));
      if (b > 0) chi2_(index(a, b - 1), col) = scale * std::sqrt(static_cast<double>(b));
      number_(col, col) = 0.5 * lambda * static_cast<double>(a + b);
    }
  }
}

bool TwoModeFock::interior(Eigen::Index idx) const {
  const auto stride = static_cast<Eigen::Index>(cutoff_ + 1);
  return idx / stride < static_cast<Eigen::Index>(cutoff_) &&
         idx % stride < static_cast<Eigen::Index>(cutoff_);
}

const ComplexMatrix& TwoModeFock::chi(int mode) const {
  if (mode == 1) return chi1_;
  if (mode == 2) return chi2_;
  throw DomainError("TwoModeFock::chi: mode must be 1 or 2");
}

ComplexMatrix TwoModeFock::monomial(const FockMonomial& mono) const {
  return power(chi_dag(1), mono.m1) * power(chi_dag(2), mono.m2) * power(chi1_, mono.n1) *
         power(chi2_, mono.n2);
}

ComplexMatrix TwoModeFock::position(int i) const {
  const ComplexMatrix& s = pauli(i);
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (s(a, b) != Complex(0.0)) out += s(a, b) * chi_dag(a + 1) * chi(b + 1);
    }
  }
  return out;
}

ComplexMatrix TwoModeFock::embed(const HSOperator& op) const {
  require_cutoff(op.n, cutoff_, "TwoModeFock::embed");
  const std::int64_t two_n = op.n.twice();
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  const auto d = static_cast<Eigen::Index>(two_n + 1);
  if (op.matrix.rows() != d || op.matrix.cols() != d) {
    throw DomainError("TwoModeFock::embed: operator size does not match n = " + op.n.to_string());
  }
  // Row r of F_n is n3 = n - r, i.e. n1 = 2n - r, n2 = r.
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto ri = index(static_cast<std::uint32_t>(two_n - r), static_cast<std::uint32_t>(r));
      const auto ci = index(static_cast<std::uint32_t>(two_n - c), static_cast<std::uint32_t>(c));
      out(ri, ci) = op.matrix(r, c);
    }
  }
  return out;
}

double TwoModeFock::interior_max_abs(const ComplexMatrix& m) const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!interior(i)) continue;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (interior(j)) best = std::max(best, std::abs(m(i, j)));
    }
  }
  return best;
}

ComplexMatrix k_adjoint_action(const TwoModeFock& fock, const ComplexMatrix& op) {
  if (op.rows() != fock.dim() || op.cols() != fock.dim()) {
    throw DomainError("k_adjoint_action: operator size does not match the truncated space");
  }
  return commutator(fock.number_operator(), op);
}

ComplexMatrix k_adjoint_action(std::uint32_t cutoff, const HSOperator& op, double lambda) {
  require_cutoff(op.n, cutoff, "k_adjoint_action");
  const TwoModeFock fock(cutoff, lambda);
  return k_adjoint_action(fock, fock.embed(op));
}

std::int64_t winding_of(const TwoModeFock& fock, const ComplexMatrix& op) {
  const double scale = fock.interior_max_abs(op);
  if (scale == 0.0) throw DomainError("winding_of: operator vanishes on the interior block");
  const ComplexMatrix k_op = k_adjoint_action(fock, op);
  // Locate the largest interior entry and read the ratio there.
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < op.rows(); ++i) {
    if (!fock.interior(i)) continue;
    for (Eigen::Index j = 0; j < op.cols(); ++j) {
      if (fock.interior(j) && std::abs(op(i, j)) > best) {
        best = std::abs(op(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  const double k_real = (k_op(bi, bj) / op(bi, bj)).real() / (0.5 * fock.lambda());
  const auto k = static_cast<std::int64_t>(std::llround(k_real));
  const ComplexMatrix residual = k_op - (0.5 * fock.lambda() * static_cast<double>(k)) * op;
  if (fock.interior_max_abs(residual) > 1e-10 * std::max(1.0, scale)) {
    throw DomainError("winding_of: operator is not an eigen-operator of K");
  }
  return k;
}

JordanSchwingerReport jordan_schwinger_check(HalfInteger n, double lambda, std::uint32_t cutoff) {
  require_cutoff(n, cutoff, "jordan_schwinger_check");
  const FuzzySphere sphere = build_space(n, lambda);
  const TwoModeFock fock(cutoff, lambda);
  const std::int64_t two_n = n.twice();
  const auto d = static_cast<Eigen::Index>(two_n + 1);

  // Restriction map: column r <-> Fock state (2n - r, r).
  std::vector<Eigen::Index> sel;
  for (Eigen::Index r = 0; r < d; ++r) {
    sel.push_back(fock.index(static_cast<std::uint32_t>(two_n - r), static_cast<std::uint32_t>(r)));
  }

  JordanSchwingerReport report;
  report.block_dim = d;
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix full = fock.position(i);
    ComplexMatrix block(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) block(r, c) = full(sel[r], sel[c]);
    }
    report.max_deviation = std::max(report.max_deviation, max_abs(block - sphere.x(i)));
  }
  return report;
}

}  // namespace fuzzydist
