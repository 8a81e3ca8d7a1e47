#include "fuzzydist/spectral_triple.hpp"

#include <string>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

// Generator J_i as it acts on the carrier space.
ComplexMatrix generator(const FuzzySphere& s, Representation rep, QuantumAction action, int i) {
  const ComplexMatrix j = s.j(i);
  if (rep == Representation::config) return j;
  const auto d = static_cast<Eigen::Index>(s.dim());
  if (action == QuantumAction::left) return kron(j, identity(d));
  return kron(j, identity(d)) - kron(identity(d), j.transpose());
}

}  // namespace

Eigen::Index SpectralTriple::carrier_dim() const {
  const auto d = static_cast<Eigen::Index>(sphere.dim());
  return representation == Representation::config ? d : d * d;
}

SpectralTriple build_dirac(const FuzzySphere& s, Representation rep, int k, QuantumAction action) {
  if (rep == Representation::quantum && k != 0) {
    throw UnsupportedFeature("build_dirac: the quantum representation supports only k = 0, got k = " +
                             std::to_string(k));
  }
  const double r = s.radius();
  SpectralTriple t{s, rep, action, k, ComplexMatrix()};
  const Eigen::Index carrier = t.carrier_dim();
  t.dirac = ComplexMatrix::Zero(2 * carrier, 2 * carrier);
  for (int i = 1; i <= 3; ++i) {
    ComplexMatrix g = generator(s, rep, action, i);
    // The monopole shift only exists on the configuration side.
    if (k != 0) g -= (0.5 * k / r) * s.x(i);
    t.dirac += kron(pauli(i), g);
  }
  t.dirac /= r;
  return t;
}

ComplexMatrix represent(const SpectralTriple& t, const ComplexMatrix& a) {
  const auto d = static_cast<Eigen::Index>(t.sphere.dim());
  const Eigen::Index carrier = t.carrier_dim();
  if (a.rows() != a.cols()) throw DomainError("represent: operator must be square");
  if (a.rows() == carrier) return kron(identity(2), a);
  if (t.representation == Representation::quantum && a.rows() == d) {
    return kron(identity(2), kron(a, identity(d)));
  }
  throw DomainError("represent: operator of size " + std::to_string(a.rows()) +
                    " does not match the representation (carrier dimension " +
                    std::to_string(carrier) + ")");
}

ComplexMatrix pullback(const SpectralTriple& t, const ComplexMatrix& m) {
  const auto d = static_cast<Eigen::Index>(t.sphere.dim());
  const Eigen::Index carrier = t.carrier_dim();
  if (m.rows() != 2 * carrier || m.cols() != 2 * carrier) {
    throw DomainError("pullback: matrix does not act on the doubled space");
  }
  // Trace out the spinor.
  ComplexMatrix block = m.topLeftCorner(carrier, carrier) + m.bottomRightCorner(carrier, carrier);
  if (t.representation == Representation::config) return block;
  // Trace out the right sector of H_n.
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index c = 0; c < d; ++c) {
      Complex acc = 0.0;
      for (Eigen::Index b = 0; b < d; ++b) acc += block(a * d + b, c * d + b);
      out(a, c) = acc;
    }
  }
  return out;
}

ComplexMatrix dirac_commutator(const SpectralTriple& t, const ComplexMatrix& a) {
  return commutator(t.dirac, represent(t, a));
}

double lipschitz_seminorm(const SpectralTriple& t, const ComplexMatrix& a) {
  return operator_norm(dirac_commutator(t, a));
}

}  // namespace fuzzydist
