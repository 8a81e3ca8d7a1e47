#include <doctest.h>

#include "fuzzydist/errors.hpp"
#include "fuzzydist/fuzzy_sphere.hpp"
#include "oracles.hpp"

using namespace fuzzydist;

TEST_CASE("spin-one space") {
  auto s = build_space(kOne, 1.0);
  CHECK(s.dim() == 3);
  ComplexMatrix x3 = ComplexMatrix::Zero(3, 3);
  x3(0, 0) = 1.0;
  x3(2, 2) = -1.0;
  CHECK(max_abs(s.x3() - x3) < 1e-15);
  CHECK(std::abs(s.xplus()(s.index_of(kOne), s.index_of(HalfInteger{})) - std::sqrt(2.0)) < 1e-15);
  CHECK(max_abs(build_space(kOne, 2.0).casimir() - 8.0 * ComplexMatrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("su(2) relations for every n up to 25/2") {
  for (int t = 1; t <= 25; ++t) {
    const double lambda = 0.75;
    auto s = build_space(HalfInteger::from_twice(t), lambda);
    CAPTURE(t);
    const double tol = 1e-12 * lambda * lambda * std::max(1.0, casimir_value(s.n()));
    CHECK(max_abs(commutator(s.x(1), s.x(2)) - kI * lambda * s.x(3)) < tol);
    CHECK(max_abs(commutator(s.x(2), s.x(3)) - kI * lambda * s.x(1)) < tol);
    CHECK(max_abs(commutator(s.x(3), s.x(1)) - kI * lambda * s.x(2)) < tol);
    CHECK(max_abs(s.casimir() - lambda * lambda * casimir_value(s.n()) *
                                    ComplexMatrix::Identity(s.dim(), s.dim())) < tol);
    CHECK(std::abs(s.radius() - lambda * std::sqrt(casimir_value(s.n()))) < 1e-14);
  }
}

TEST_CASE("generators match the textbook construction") {
  for (double j : {0.5, 1.0, 2.5, 4.0}) {
    auto s = build_space(HalfInteger::from_twice(static_cast<int>(2 * j)), 1.0);
    auto g = oracle::spin_generators(j);
    CHECK(max_abs(s.xplus() - g.jp) < 1e-13);
    CHECK(max_abs(s.xminus() - g.jm) < 1e-13);
    CHECK(max_abs(s.x3() - g.j3) < 1e-13);
    CHECK(max_abs(s.j(1) - 0.5 * (g.jp + g.jm)) < 1e-13);
  }
}

TEST_CASE("labels and indices") {
  auto s = build_space(HalfInteger::from_twice(3), 1.0);
  CHECK(s.index_of(HalfInteger::from_twice(3)) == 0);
  CHECK(s.index_of(HalfInteger::from_twice(-3)) == 3);
  CHECK(s.n3_at(1) == kHalf);
  CHECK_FALSE(s.contains(HalfInteger::from_twice(5)));
  CHECK_FALSE(s.contains(HalfInteger{}));
  CHECK_THROWS_AS(s.index_of(HalfInteger{}), DomainError);
  CHECK_THROWS_AS(build_space(HalfInteger{}, 1.0), DomainError);
  CHECK_THROWS_AS(build_space(kOne, 0.0), DomainError);
  CHECK_THROWS_AS(build_space(kOne, -1.0), DomainError);
}

TEST_CASE("pure states") {
  auto s1 = build_space(kOne, 1.0);
  auto p = pure_state(s1, kOne);
  CHECK(std::abs(p.matrix(0, 0) - 1.0) < 1e-15);
  CHECK(max_abs(p.matrix) == 1.0);
  CHECK(max_abs(pure_state(s1, HalfInteger{}).matrix - pure_state(s1, HalfInteger{}).matrix) == 0.0);

  auto s = build_space(HalfInteger::from_twice(3), 1.0);
  for (int t = -3; t <= 3; t += 2) {
    auto r = pure_state(s, HalfInteger::from_twice(t));
    CHECK(std::abs(r.trace() - 1.0) < 1e-15);
    CHECK(max_abs(r.matrix * r.matrix - r.matrix) < 1e-15);
    CHECK(is_density_matrix(r));
    CHECK(is_pure_density_matrix(r));
  }
  HSOperator mixed{kOne, ComplexMatrix::Identity(3, 3) / 3.0};
  CHECK(is_density_matrix(mixed));
  CHECK_FALSE(is_pure_density_matrix(mixed));
  CHECK_THROWS_AS(pure_state(s, kOne), DomainError);
}

TEST_CASE("adjacent state difference") {
  auto s = build_space(kOne, 1.0);
  auto d = adjacent_drho(s, HalfInteger{});
  ComplexMatrix want = ComplexMatrix::Zero(3, 3);
  want(0, 0) = 1.0;
  want(1, 1) = -1.0;
  CHECK(max_abs(d.matrix - want) == 0.0);
  CHECK(std::abs(d.trace()) == 0.0);
  CHECK(std::abs((d.matrix * d.matrix).trace() - 2.0) < 1e-15);
  CHECK_THROWS_AS(adjacent_drho(s, kOne), DomainError);
}
