#pragma once

// Two-mode oscillator realization of the fuzzy sphere. The oscillators obey
// [chi_a, chi_b^dagger] = (lambda/2) delta_ab, so <k-1|chi|k> = sqrt(lambda/2) sqrt(k).
// States with either mode at the cutoff are "boundary"; truncation errors only live there.

#include <cstdint>

#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/linalg.hpp"

namespace fuzzydist {

/// Normal-ordered monomial chi1^dag^m1 chi2^dag^m2 chi1^n1 chi2^n2.
struct FockMonomial {
  std::uint32_t m1 = 0;
  std::uint32_t m2 = 0;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
};

/// k = m1 + m2 - n1 - n2.
std::int64_t winding_number(const FockMonomial& mono);

class TwoModeFock {
 public:
  /// cutoff = largest occupation kept per mode.
  TwoModeFock(std::uint32_t cutoff, double lambda);

  std::uint32_t cutoff() const { return cutoff_; }
  double lambda() const { return lambda_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(cutoff_ + 1) * (cutoff_ + 1); }
  Eigen::Index index(std::uint32_t n1, std::uint32_t n2) const {
    return static_cast<Eigen::Index>(n1) * (cutoff_ + 1) + n2;
  }
  bool interior(Eigen::Index idx) const;

  /// Annihilation operator of mode 1 or 2.
  const ComplexMatrix& chi(int mode) const;
  ComplexMatrix chi_dag(int mode) const { return chi(mode).adjoint(); }
  /// N = chi_a^dag chi_a, eigenvalue (lambda/2)(n1 + n2).
  const ComplexMatrix& number_operator() const { return number_; }

  ComplexMatrix monomial(const FockMonomial& mono) const;

  /// chi^dag sigma_i chi for i in {1,2,3}.
  ComplexMatrix position(int i) const;

  /// Embeds an operator on F_n via |n, n3> <-> |n1 = n+n3, n2 = n-n3>.
  /// Requires cutoff >= 2n + 2.
  ComplexMatrix embed(const HSOperator& op) const;

  /// Largest |entry| restricted to rows and columns away from the cutoff.
  double interior_max_abs(const ComplexMatrix& m) const;

 private:
  std::uint32_t cutoff_;
  double lambda_;
  ComplexMatrix chi1_;
  ComplexMatrix chi2_;
  ComplexMatrix number_;
};

/// K op = [N, op].
ComplexMatrix k_adjoint_action(const TwoModeFock& fock, const ComplexMatrix& op);

/// Convenience form taking an operator on F_n: embeds it in a fresh truncated space.
ComplexMatrix k_adjoint_action(std::uint32_t cutoff, const HSOperator& op, double lambda);

/// Reads k off [N, op] = (lambda/2) k op on the interior block.
/// Throws DomainError if op is zero there or is not a K eigen-operator.
std::int64_t winding_of(const TwoModeFock& fock, const ComplexMatrix& op);

struct JordanSchwingerReport {
  double max_deviation = 0.0;
  Eigen::Index block_dim = 0;
};

/// Builds x_i = chi^dag sigma_i chi in the truncated space, restricts to n1+n2 = 2n
/// (ordered n1 descending, matching the F_n basis) and compares with build_space.
JordanSchwingerReport jordan_schwinger_check(HalfInteger n, double lambda, std::uint32_t cutoff);

}  // namespace fuzzydist
