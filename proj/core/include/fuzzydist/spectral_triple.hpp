#pragma once

// Spectral triple (A, H, D) over F_n. H is C^2 (x) F_n for the configuration
// representation and C^2 (x) H_n for the quantum one, with the spinor index outermost.

#include "fuzzydist/fuzzy_sphere.hpp"
#include "fuzzydist/linalg.hpp"

namespace fuzzydist {

enum class Representation { config, quantum };

/// How the generators J_i act on H_n, realized on the vectorization |a><b| -> a*dim + b.
/// left: J (x) 1, the position operator on the left sector.
/// adjoint: J (x) 1 - 1 (x) J^T, left minus right multiplication.
enum class QuantumAction { left, adjoint };

struct SpectralTriple {
  FuzzySphere sphere;
  Representation representation = Representation::config;
  QuantumAction action = QuantumAction::left;
  int k = 0;
  ComplexMatrix dirac;

  /// Dimension of the space the represented operators act on (without the spinor).
  Eigen::Index carrier_dim() const;
};

/// config: D = (1/r) sigma_j (x) (J_j - (k/2) x_j / r).
/// quantum: D = (1/r) sigma_j (x) J_j acting through `action`; only k = 0 is supported.
SpectralTriple build_dirac(const FuzzySphere& s, Representation rep, int k = 0,
                           QuantumAction action = QuantumAction::left);

/// pi(a) on the doubled space. `a` may be an algebra element (dim x dim), which the
/// quantum representation lifts by left multiplication, or, in the quantum case, an
/// operator already acting on H_n (dim^2 x dim^2).
ComplexMatrix represent(const SpectralTriple& t, const ComplexMatrix& a);

/// Adjoint of represent for the real pairing Re tr(M^dagger X): returns G with
/// Re tr(M^dagger represent(t, X)) = Re tr(G^dagger X) for every algebra element X.
ComplexMatrix pullback(const SpectralTriple& t, const ComplexMatrix& m);

/// [D, pi(a)].
ComplexMatrix dirac_commutator(const SpectralTriple& t, const ComplexMatrix& a);
inline ComplexMatrix dirac_commutator(const SpectralTriple& t, const HSOperator& a) {
  return dirac_commutator(t, a.matrix);
}

/// ||[D, pi(a)]||, the Lipschitz seminorm.
double lipschitz_seminorm(const SpectralTriple& t, const ComplexMatrix& a);
inline double lipschitz_seminorm(const SpectralTriple& t, const HSOperator& a) {
  return lipschitz_seminorm(t, a.matrix);
}

}  // namespace fuzzydist
