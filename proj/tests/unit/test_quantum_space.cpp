#include <doctest.h>

#include <random>

#include "fuzzydist/connes_distance.hpp"
#include "fuzzydist/errors.hpp"
#include "fuzzydist/quantum_space.hpp"
#include "oracles.hpp"

using namespace fuzzydist;

namespace {

const HalfInteger k0{};

ProbabilityProfile random_profile(HalfInteger n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 1.0);
  ProbabilityProfile p = uniform_profile(n);
  for (auto& [m, v] : p.entries) {
    double sum = 0.0;
    for (double& x : v) sum += (x = u(rng));
    for (double& x : v) x /= sum;
  }
  return p;
}

// Path functional written out from the per-step formula without validation, so
// individual entries can be perturbed off the simplex.
double raw_path(HalfInteger n, double lambda, const ProbabilityProfile& p, HalfInteger a, HalfInteger b) {
  const double r = lambda * std::sqrt(casimir_value(n));
  const double nn = casimir_value(n);
  double total = 0.0;
  for (HalfInteger m = a; m < b; m += kOne) {
    const auto& p0 = p.at(m);
    const auto& p1 = p.at(m + kOne);
    const double x = m.to_double();
    double num = 0.0;
    double s = 0.0;
    for (std::size_t l = 0; l < p0.size(); ++l) {
      num += p1[l] * p1[l] + p0[l] * p0[l];
      s += p1[l] * p1[l] * (nn - (x + 1) * (x + 1)) + p0[l] * p0[l] * (nn - x * x) +
           p1[l] * p0[l] * (nn - x * (x + 1));
    }
    total += 0.5 * r * num / std::sqrt(s);
  }
  return total;
}

}  // namespace

TEST_CASE("pure-state closed forms") {
  CHECK(std::abs(quantum_pure_distance(kOne, 1.0, k0, true) - 1.0) < 1e-15);
  CHECK(std::abs(quantum_pure_distance(kOne, 1.0, k0, false) - 2.0) < 1e-15);
  CHECK(std::abs(quantum_pure_distance(HalfInteger::from_twice(3), 1.0, kHalf, false) - 1.936492) < 1e-6);
  CHECK(std::abs(quantum_pure_distance_exact(HalfInteger::from_twice(3), 1.0, kHalf, false) - 1.936492) < 1e-6);
}

TEST_CASE("seminorm oracle on the vectorized space") {
  CHECK(std::abs(quantum_seminorm_oracle(kOne, 1.0, k0, kOne, kOne) - 2.0) < 1e-12);
  CHECK(std::abs(quantum_seminorm_oracle(kOne, 1.0, k0, kOne, k0) - 1.0) < 1e-12);
  CHECK(std::abs(2.0 / quantum_seminorm_oracle(kOne, 1.0, k0, kOne, k0) - 2.0) < 1e-12);
}

TEST_CASE("same-sector branch equals the configuration distance") {
  for (int t = 1; t <= 8; ++t) {
    auto n = HalfInteger::from_twice(t);
    for (auto m = -n; m < n; m += kOne) {
      const double lambda = 1.3;
      const double oracle_value = 2.0 / quantum_seminorm_oracle(n, lambda, m, m + kOne, m + kOne);
      CHECK(oracle::rel(oracle_value, quantum_pure_distance(n, lambda, m, true)) < 1e-10);
      CHECK(oracle::rel(oracle_value, adjacent_distance_closed_form(n, m, lambda)) < 1e-10);
    }
  }
}

TEST_CASE("distinct-sector branch: corrected form matches the eigensolver everywhere") {
  for (int t = 1; t <= 8; ++t) {
    auto n = HalfInteger::from_twice(t);
    for (auto m = -n; m < n; m += kOne) {
      // right labels n and -n are distinct for every n >= 1/2
      const double oracle_value = 2.0 / quantum_seminorm_oracle(n, 1.0, m, n, -n);
      CHECK(oracle::rel(oracle_value, quantum_pure_distance_exact(n, 1.0, m, false)) < 1e-10);
      CHECK(quantum_pure_distance_exact(n, 1.0, m, false) >= quantum_pure_distance_exact(n, 1.0, m, true));
      // the two-branch formula agrees with the corrected one on n3 >= -1
      if (m >= -kOne) {
        CHECK(oracle::rel(quantum_pure_distance(n, 1.0, m, false), oracle_value) < 1e-10);
      }
    }
  }
}

TEST_CASE("two-branch formula is not reflection symmetric below n3 = -1") {
  auto n = HalfInteger::from_twice(3);
  const double printed = quantum_pure_distance(n, 1.0, -n, false);
  const double exact = quantum_pure_distance_exact(n, 1.0, -n, false);
  CHECK(std::abs(printed - std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(exact - 1.936492) < 1e-6);
  CHECK(std::abs(exact - quantum_pure_distance_exact(n, 1.0, n - kOne, false)) < 1e-12);
}

TEST_CASE("trace of the squared difference is two") {
  for (int t = 1; t <= 4; ++t) {
    auto n = HalfInteger::from_twice(t);
    auto s = build_space(n, 1.0);
    for (auto m = -n; m < n; m += kOne) {
      for (bool same : {true, false}) {
        const HalfInteger right = same ? m : n;
        ComplexMatrix d = ComplexMatrix::Zero(s.dim() * s.dim(), s.dim() * s.dim());
        d(quantum_index(s, m + kOne, same ? m + kOne : -n), quantum_index(s, m + kOne, same ? m + kOne : -n)) = 1.0;
        d(quantum_index(s, m, right), quantum_index(s, m, right)) -= 1.0;
        CHECK(std::abs((d * d).trace().real() - 2.0) < 1e-15);
      }
    }
  }
}

TEST_CASE("mixed states") {
  auto s = build_space(kOne, 1.0);
  auto pure = mixed_state(s, k0, delta_profile(kOne, kOne));
  auto idx = quantum_index(s, k0, kOne);
  CHECK(std::abs(pure.matrix(idx, idx) - 1.0) < 1e-15);
  CHECK(std::abs(pure.matrix.trace() - 1.0) < 1e-15);
  CHECK(max_abs(pure.matrix * pure.matrix - pure.matrix) < 1e-15);

  auto uni = mixed_state(s, k0, uniform_profile(kOne));
  CHECK(std::abs(uni.matrix.trace() - 1.0) < 1e-15);
  CHECK(std::abs((uni.matrix * uni.matrix).trace().real() - 1.0 / 3.0) < 1e-15);

  auto p = constant_profile(kOne, {0.5, 0.3, 0.2});
  auto ev = hermitian_eigvals(mixed_state(s, kOne, p).matrix);
  std::vector<double> nz;
  for (double v : ev)
    if (std::abs(v) > 1e-14) nz.push_back(v);
  std::sort(nz.begin(), nz.end());
  REQUIRE(nz.size() == 3);
  CHECK(std::abs(nz[0] - 0.2) < 1e-14);
  CHECK(std::abs(nz[1] - 0.3) < 1e-14);
  CHECK(std::abs(nz[2] - 0.5) < 1e-14);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(constant_profile(kOne, {0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(constant_profile(kOne, {0.5, 0.6, -0.1}), DomainError);
  CHECK_THROWS_AS(constant_profile(kOne, {0.5, 0.4, 0.2}), DomainError);
  CHECK_THROWS_AS(uniform_profile(kOne).at(HalfInteger::integer(2)), DomainError);
  CHECK(uniform_profile(kOne).has(-kOne));
}

TEST_CASE("mixed-state distance formula") {
  CHECK(std::abs(trace_norm_distance(kOne, 1.0, k0, delta_profile(kOne, k0)) - 0.632456) < 1e-6);
  CHECK(std::abs(trace_norm_distance(kOne, 1.0, k0, uniform_profile(kOne)) - 0.365148) < 1e-6);
  CHECK(std::abs(trace_norm_distance(kOne, 1.0, k0, uniform_profile(kOne)) -
                 std::sqrt(2.0 / 5.0) / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(trace_norm_distance(kOne, 2.0, k0, uniform_profile(kOne)) -
                 2.0 * trace_norm_distance(kOne, 1.0, k0, uniform_profile(kOne))) < 1e-15);
}

TEST_CASE("commutator oracle: formula equals numerator over Hilbert-Schmidt norm") {
  std::mt19937_64 rng(13);
  for (int t = 1; t <= 4; ++t) {
    auto n = HalfInteger::from_twice(t);
    auto p = random_profile(n, rng);
    for (auto m = -n; m < n; m += kOne) {
      const double lambda = 0.7;
      auto o = mixed_distance_oracle(n, lambda, m, p);
      CHECK(std::abs(o.numerator - mixed_numerator(p, m)) < 1e-14);
      CHECK(oracle::rel(o.hs_distance, trace_norm_distance(n, lambda, m, p)) < 1e-10);
      CHECK(o.operator_norm <= o.hs_norm + 1e-12);
      CHECK(o.hs_norm <= o.trace_norm + 1e-12);
    }
  }
}

TEST_CASE("stationarity matrix") {
  auto cert = delta_matrix(kOne, 1.0, uniform_profile(kOne), -kOne, kOne);
  CHECK(cert.delta.rows() == 3);
  CHECK(cert.residual <= 1e-10);
  CHECK((cert.delta - cert.delta.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cert.delta(0, 2) == 0.0);
  CHECK(cert.delta(2, 0) == 0.0);

  for (int t = 1; t <= 6; ++t) {
    auto n = HalfInteger::from_twice(t);
    CHECK(delta_matrix(n, 1.0, uniform_profile(n), -n, n).residual <= 1e-10);
  }

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = random_profile(kOne, rng);
    CHECK(delta_matrix(kOne, 1.0, p, -kOne, kOne).residual > 1e-4);
  }
  CHECK_THROWS_AS(delta_matrix(kOne, 1.0, uniform_profile(kOne), kOne, -kOne), DomainError);
}

TEST_CASE("exact gradient couples neighbours with half the tabulated off-diagonal") {
  std::mt19937_64 rng(29);
  auto n = HalfInteger::from_twice(3);
  auto p = random_profile(n, rng);
  const double lambda = 1.0;
  auto cert = delta_matrix(n, lambda, p, -n, n);
  RealMatrix half = cert.delta;
  for (Eigen::Index i = 0; i + 1 < half.rows(); ++i) {
    half(i, i + 1) *= 0.5;
    half(i + 1, i) *= 0.5;
  }
  const double h = 1e-6;
  double worst_half = 0.0;
  double worst_printed = 0.0;
  for (std::size_t l = 0; l < 4; ++l) {
    RealVector pl(4);
    for (int i = 0; i < 4; ++i) pl(i) = p.at(-n + HalfInteger::integer(i))[l];
    RealVector with_half = half * pl;
    RealVector with_printed = cert.delta * pl;
    for (int i = 0; i < 4; ++i) {
      auto up = p;
      auto dn = p;
      up.entries[-n + HalfInteger::integer(i)][l] += h;
      dn.entries[-n + HalfInteger::integer(i)][l] -= h;
      const double fd = (raw_path(n, lambda, up, -n, n) - raw_path(n, lambda, dn, -n, n)) / (2 * h);
      worst_half = std::max(worst_half, std::abs(fd - with_half(i)));
      worst_printed = std::max(worst_printed, std::abs(fd - with_printed(i)));
    }
  }
  CHECK(worst_half < 1e-7);
  CHECK(worst_printed > 1e-3);
}

TEST_CASE("path minimization recovers the uniform profile") {
  auto res = minimize_path_distance(kOne, 1.0, -kOne, kOne, 20, 42);
  for (const auto& [m, v] : res.profile.entries) {
    if (m == -kOne || m == k0 || m == kOne)
      for (double x : v) CHECK(std::abs(x - 1.0 / 3.0) < 1e-4);
  }
  CHECK(std::abs(trace_norm_distance(kOne, 1.0, k0, res.profile) - 0.365148) < 1e-5);
  CHECK(std::abs(res.distance - path_distance(kOne, 1.0, uniform_profile(kOne), -kOne, kOne)) < 1e-8);

  auto half = minimize_path_distance(kHalf, 1.0, -kHalf, kHalf, 20, 42);
  for (const auto& [m, v] : half.profile.entries)
    for (double x : v) CHECK(std::abs(x - 0.5) < 1e-4);
}

TEST_CASE("uniform closed form") {
  CHECK(std::abs(uniform_minimized_distance(kOne, 1.0, k0) - 0.365148) < 1e-6);
  CHECK(std::abs(uniform_minimized_distance(kHalf, 1.0, -kHalf) - 0.433013) < 1e-6);
  for (int t = 1; t <= 10; ++t) {
    auto n = HalfInteger::from_twice(t);
    const double nn = casimir_value(n);
    for (auto m = -n; m < n; m += kOne) {
      const double x = m.to_double();
      CHECK(oracle::rel(uniform_minimized_distance(n, 1.0, m),
                        trace_norm_distance(n, 1.0, m, uniform_profile(n))) < 1e-10);
      // relative to the pure-state distance only the -1/3 shift depends on n3
      const double ratio = uniform_minimized_distance(n, 1.0, m) / adjacent_distance_closed_form(n, m, 1.0);
      const double ladder = nn - x * (x + 1);
      CHECK(oracle::rel(ratio, std::sqrt(ladder / (3.0 * (ladder - 1.0 / 3.0) * (2 * n.to_double() + 1)))) < 1e-12);
    }
  }
}

TEST_CASE("thermal profiles") {
  EnergySpectrum e{{0.0, 1.0, 2.0}};
  for (double p : thermal_profile(e, 0.0)) CHECK(std::abs(p - 1.0 / 3.0) < 1e-15);
  auto two = thermal_profile(EnergySpectrum{{0.0, 1.0}}, std::log(2.0));
  CHECK(std::abs(two[0] - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(two[1] - 1.0 / 3.0) < 1e-15);
  auto cold = thermal_profile(e, 200.0);
  CHECK(std::abs(cold[0] - 1.0) < 1e-15);
  CHECK(cold[2] < 1e-80);
  auto huge = thermal_profile(EnergySpectrum{{1000.0, 1001.0}}, 5.0);
  CHECK(std::abs(huge[0] + huge[1] - 1.0) < 1e-15);
  CHECK(std::abs(log_partition_function(EnergySpectrum{{0.0, 0.0}}, 3.0) - std::log(2.0)) < 1e-15);
}

TEST_CASE("thermal prefactor and distance") {
  CHECK(std::abs(thermal_prefactor(EnergySpectrum{{0.0, 1.0}}, std::log(2.0)) - 0.745356) < 1e-6);
  auto e = default_spectrum(kOne, 1.0);
  CHECK(e.levels.size() == 3);
  CHECK(e.levels[0] == 1.0);
  CHECK(std::abs(thermal_distance(kOne, 1.0, k0, e, 0.0) - 0.365148) < 1e-6);
  CHECK(std::abs(thermal_distance(kOne, 1.0, k0, e, 0.0) - uniform_minimized_distance(kOne, 1.0, k0)) < 1e-12);

  const std::vector<EnergySpectrum> spectra = {
      EnergySpectrum{{0.0, 1.0}}, default_spectrum(HalfInteger::integer(2), 0.5),
      EnergySpectrum{{-1.0, 0.3, 0.3, 2.0, 7.5}}};
  for (const auto& sp : spectra) {
    const double lo = 1.0 / std::sqrt(static_cast<double>(sp.levels.size()));
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double beta = 0.05 * i;
      const double pf = thermal_prefactor(sp, beta);
      CHECK(pf >= lo - 1e-12);
      CHECK(pf <= 1.0 + 1e-12);
      CHECK(pf >= prev - 1e-12);  // rising beta = falling temperature
      prev = pf;
      // the prefactor is the 2-norm of the thermal profile
      double sq = 0.0;
      for (double p : thermal_profile(sp, beta)) sq += p * p;
      CHECK(std::abs(pf - std::sqrt(sq)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(thermal_profile(EnergySpectrum{{}}, 1.0), DomainError);
  CHECK_THROWS_AS(thermal_profile(EnergySpectrum{{0.0}}, -1.0), DomainError);
}
