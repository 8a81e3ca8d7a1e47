#include <doctest.h>

#include "fuzzydist/errors.hpp"
#include "fuzzydist/fock.hpp"

using namespace fuzzydist;

TEST_CASE("winding numbers of monomials") {
  CHECK(winding_number({1, 0, 0, 1}) == 0);
  CHECK(winding_number({2, 1, 0, 0}) == 3);
  CHECK(winding_number({0, 0, 1, 1}) == -2);
}

TEST_CASE("oscillator algebra on the interior") {
  const double lambda = 0.8;
  TwoModeFock f(8, lambda);
  CHECK(f.dim() == 81);
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      ComplexMatrix c = commutator(f.chi(a), f.chi_dag(b));
      ComplexMatrix want = (a == b ? lambda / 2.0 : 0.0) * ComplexMatrix::Identity(f.dim(), f.dim());
      CHECK(f.interior_max_abs(c - want) < 1e-12);
    }
  }
  CHECK(f.interior_max_abs(f.number_operator() - (f.chi_dag(1) * f.chi(1) + f.chi_dag(2) * f.chi(2))) < 1e-12);
}

TEST_CASE("dilatation action") {
  const double lambda = 1.0;
  TwoModeFock f(8, lambda);
  auto s = build_space(kOne, lambda);

  HSOperator hop{kOne, ComplexMatrix::Zero(3, 3)};
  hop.matrix(s.index_of(kOne), s.index_of(HalfInteger{})) = 1.0;
  CHECK(f.interior_max_abs(k_adjoint_action(f, f.embed(hop))) <= 1e-12);
  CHECK(max_abs(k_adjoint_action(8, hop, lambda)) <= 1e-12);

  ComplexMatrix up = f.chi_dag(1);
  CHECK(f.interior_max_abs(k_adjoint_action(f, up) - (lambda / 2.0) * up) < 1e-12);
  CHECK(max_abs(k_adjoint_action(f, ComplexMatrix::Identity(f.dim(), f.dim()))) == 0.0);

  CHECK(winding_of(f, up) == 1);
  CHECK(winding_of(f, f.monomial({2, 1, 0, 0})) == 3);
  CHECK(winding_of(f, f.monomial({0, 0, 1, 1})) == -2);
  CHECK(winding_of(f, f.monomial({1, 0, 0, 1})) == 0);
  CHECK_THROWS_AS(winding_of(f, ComplexMatrix::Zero(f.dim(), f.dim())), DomainError);
  CHECK_THROWS_AS(winding_of(f, f.chi(1) + f.chi_dag(1)), DomainError);
}

TEST_CASE("every algebra matrix unit has winding zero") {
  TwoModeFock f(10, 1.0);
  for (int t = 1; t <= 4; ++t) {
    auto n = HalfInteger::from_twice(t);
    auto s = build_space(n, 1.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        HSOperator e{n, ComplexMatrix::Zero(s.dim(), s.dim())};
        e.matrix(i, j) = 1.0;
        CHECK(winding_of(f, f.embed(e)) == 0);
      }
    }
  }
}

TEST_CASE("positions from the oscillators match the direct matrices") {
  auto r1 = jordan_schwinger_check(kHalf, 1.0, 6);
  CHECK(r1.max_deviation <= 1e-12);
  CHECK(r1.block_dim == 2);
  auto r2 = jordan_schwinger_check(HalfInteger::integer(2), 0.5, 10);
  CHECK(r2.max_deviation <= 1e-12);
  CHECK(r2.block_dim == 5);
  for (int t = 1; t <= 4; ++t) {
    auto r = jordan_schwinger_check(HalfInteger::from_twice(t), 0.7, 10);
    CHECK(r.max_deviation <= 1e-12);
    CHECK(r.block_dim == t + 1);
  }
}

TEST_CASE("embedding needs room above the sector") {
  TwoModeFock f(3, 1.0);
  auto s = build_space(kOne, 1.0);
  CHECK_THROWS_AS(f.embed(pure_state(s, kOne)), DomainError);
}
