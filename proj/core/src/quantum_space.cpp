#include "fuzzydist/quantum_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

void require_adjacent(HalfInteger n, HalfInteger n3, const char* op) {
  if (n3 < -n || n3 > n - kOne || (n3 - n).twice() % 2 != 0) {
    throw DomainError(std::string(op) + ": n3 = " + n3.to_string() +
                      " is not a valid lower label of an adjacent pair for n = " + n.to_string());
  }
}

std::size_t sectors(HalfInteger n) { return static_cast<std::size_t>(n.twice() + 1); }

// N - m(m+1) is negative only outside the ladder; clamp those to zero.
double ladder_or_zero(HalfInteger n, HalfInteger m) { return std::max(0.0, ladder_sq(n, m)); }

// sum over l3 of the three quadratic terms at one step.
double step_sum(const std::vector<double>& p1, const std::vector<double>& p0, HalfInteger n,
                HalfInteger n3) {
  const double big_n = casimir_value(n);
  const double up = n3.to_double() + 1.0;
  const double lo = n3.to_double();
  double acc = 0.0;
  for (std::size_t l = 0; l < p1.size(); ++l) {
    acc += p1[l] * p1[l] * (big_n - up * up) + p0[l] * p0[l] * (big_n - lo * lo) +
           p1[l] * p0[l] * (big_n - lo * up);
  }
  return acc;
}

double step_numerator(const std::vector<double>& p1, const std::vector<double>& p0) {
  double acc = 0.0;
  for (std::size_t l = 0; l < p1.size(); ++l) acc += p1[l] * p1[l] + p0[l] * p0[l];
  return acc;
}

// Euclidean projection onto the probability simplex.
void project_simplex(double* v, std::size_t m) {
  std::vector<double> u(v, v + m);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    cum += u[j];
    const double t = (cum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  for (std::size_t j = 0; j < m; ++j) v[j] = std::max(0.0, v[j] - theta);
}

}  // namespace

const std::vector<double>& ProbabilityProfile::at(HalfInteger n3) const {
  auto it = entries.find(n3);
  if (it == entries.end()) {
    throw DomainError("profile has no entry for n3 = " + n3.to_string());
  }
  return it->second;
}

ProbabilityProfile constant_profile(HalfInteger n, const std::vector<double>& p) {
  ProbabilityProfile out{n, {}};
  for (HalfInteger m = -n; m <= n; m += kOne) out.entries[m] = p;
  validate_profile(out);
  return out;
}

ProbabilityProfile uniform_profile(HalfInteger n) {
  return constant_profile(n, std::vector<double>(sectors(n), 1.0 / static_cast<double>(sectors(n))));
}

ProbabilityProfile delta_profile(HalfInteger n, HalfInteger l3) {
  if (l3 < -n || l3 > n || (l3 - n).twice() % 2 != 0) {
    throw DomainError("delta_profile: l3 = " + l3.to_string() + " out of range for n = " + n.to_string());
  }
  std::vector<double> p(sectors(n), 0.0);
  p[static_cast<std::size_t>((n - l3).twice() / 2)] = 1.0;
  return constant_profile(n, p);
}

void validate_profile(const ProbabilityProfile& p) {
  for (const auto& [n3, v] : p.entries) {
    if (v.size() != sectors(p.n)) {
      throw DomainError("profile at n3 = " + n3.to_string() + " has " + std::to_string(v.size()) +
                        " entries, expected " + std::to_string(sectors(p.n)));
    }
    double sum = 0.0;
    for (double x : v) {
      if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("profile at n3 = " + n3.to_string() + " has a negative or non-finite entry");
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw DomainError("profile at n3 = " + n3.to_string() + " does not sum to 1");
    }
  }
}

Eigen::Index quantum_index(const FuzzySphere& s, HalfInteger left, HalfInteger right) {
  return static_cast<Eigen::Index>(s.index_of(left) * s.dim() + s.index_of(right));
}

double quantum_pure_distance(HalfInteger n, double lambda, HalfInteger n3, bool right_same) {
  require_adjacent(n, n3, "quantum_pure_distance");
  const double big_n = casimir_value(n);
  if (right_same) return lambda * std::sqrt(big_n) / std::sqrt(ladder_sq(n, n3));
  const double x = n3.to_double();
  return 2.0 * lambda * std::sqrt(big_n) / std::sqrt(big_n - x * x + std::abs(x));
}

double quantum_pure_distance_exact(HalfInteger n, double lambda, HalfInteger n3, bool right_same) {
  require_adjacent(n, n3, "quantum_pure_distance_exact");
  const double big_n = casimir_value(n);
  if (right_same) return lambda * std::sqrt(big_n) / std::sqrt(ladder_sq(n, n3));
  const double top = std::max({ladder_or_zero(n, n3 - kOne), ladder_or_zero(n, n3),
                               ladder_or_zero(n, n3 + kOne)});
  return 2.0 * lambda * std::sqrt(big_n) / std::sqrt(top);
}

double quantum_seminorm_oracle(HalfInteger n, double lambda, HalfInteger n3, HalfInteger n3p,
                               HalfInteger l3p, QuantumAction action) {
  const FuzzySphere s = build_space(n, lambda);
  if (!s.contains(n3) || !s.contains(n3 + kOne) || !s.contains(n3p) || !s.contains(l3p)) {
    throw DomainError("quantum_seminorm_oracle: labels out of range for n = " + n.to_string());
  }
  const Eigen::Index up = quantum_index(s, n3 + kOne, l3p);
  const Eigen::Index lo = quantum_index(s, n3, n3p);
  const auto dd = static_cast<Eigen::Index>(s.dim() * s.dim());
  ComplexMatrix drho = ComplexMatrix::Zero(dd, dd);
  drho(up, up) += 1.0;
  drho(lo, lo) -= 1.0;
  const SpectralTriple t = build_dirac(s, Representation::quantum, 0, action);
  return lipschitz_seminorm(t, drho);
}

QuantumState mixed_state(const FuzzySphere& s, HalfInteger n3, const ProbabilityProfile& profile) {
  const std::vector<double>& p = profile.at(n3);
  if (p.size() != s.dim()) throw DomainError("mixed_state: profile size does not match the sphere");
  const auto dd = static_cast<Eigen::Index>(s.dim() * s.dim());
  QuantumState out{s.n(), ComplexMatrix::Zero(dd, dd)};
  for (std::size_t l = 0; l < p.size(); ++l) {
    const Eigen::Index i = quantum_index(s, n3, s.n3_at(l));
    out.matrix(i, i) = p[l];
  }
  return out;
}

double mixed_numerator(const ProbabilityProfile& p, HalfInteger n3) {
  return step_numerator(p.at(n3 + kOne), p.at(n3));
}

double mixed_denominator_sum(const ProbabilityProfile& p, HalfInteger n3) {
  return step_sum(p.at(n3 + kOne), p.at(n3), p.n, n3);
}

double trace_norm_distance(HalfInteger n, double lambda, HalfInteger n3,
                           const ProbabilityProfile& profile) {
  require_adjacent(n, n3, "trace_norm_distance");
  if (profile.n != n) throw DomainError("trace_norm_distance: profile belongs to a different n");
  validate_profile(profile);
  const double r = lambda * std::sqrt(casimir_value(n));
  const double s = mixed_denominator_sum(profile, n3);
  if (!(s > 0.0)) {
    throw DomainError("trace_norm_distance: degenerate profile at n3 = " + n3.to_string());
  }
  return 0.5 * r * mixed_numerator(profile, n3) / std::sqrt(s);
}

MixedDistanceOracle mixed_distance_oracle(HalfInteger n, double lambda, HalfInteger n3,
                                          const ProbabilityProfile& profile) {
  require_adjacent(n, n3, "mixed_distance_oracle");
  const FuzzySphere s = build_space(n, lambda);
  const ComplexMatrix drho =
      mixed_state(s, n3 + kOne, profile).matrix - mixed_state(s, n3, profile).matrix;
  const SpectralTriple t = build_dirac(s, Representation::quantum, 0, QuantumAction::left);
  const ComplexMatrix c = dirac_commutator(t, drho);
  MixedDistanceOracle out;
  out.numerator = (drho * drho).trace().real();
  out.hs_norm = hilbert_schmidt_norm(c);
  out.trace_norm = fuzzydist::trace_norm(c);
  out.operator_norm = fuzzydist::operator_norm(c);
  out.hs_distance = out.numerator / out.hs_norm;
  out.trace_distance = out.numerator / out.trace_norm;
  return out;
}

MinimizationCertificate delta_matrix(HalfInteger n, double lambda, const ProbabilityProfile& profile,
                                     HalfInteger n_i, HalfInteger n_f) {
  if (!(n_i < n_f) || n_i < -n || n_f > n || (n_i - n).twice() % 2 != 0 ||
      (n_f - n).twice() % 2 != 0) {
    throw DomainError("delta_matrix: need -n <= n_i < n_f <= n on the lattice of n");
  }
  validate_profile(profile);
  const double big_n = casimir_value(n);
  const double pref = lambda * std::sqrt(big_n);
  const auto count = static_cast<Eigen::Index>((n_f - n_i).twice() / 2 + 1);

  // f and g live on steps n3 = n_i .. n_f - 1; they vanish off the path.
  auto f = [&](HalfInteger m) {
    if (m < n_i || m >= n_f) return 0.0;
    const double s = mixed_denominator_sum(profile, m);
    if (!(s > 0.0)) throw DomainError("delta_matrix: degenerate profile at n3 = " + m.to_string());
    return 0.5 * mixed_numerator(profile, m) / std::pow(s, 1.5);
  };
  auto g = [&](HalfInteger m) {
    if (m < n_i || m >= n_f) return 0.0;
    const double s = mixed_denominator_sum(profile, m);
    if (!(s > 0.0)) throw DomainError("delta_matrix: degenerate profile at n3 = " + m.to_string());
    return 1.0 / std::sqrt(s);
  };

  MinimizationCertificate cert;
  cert.delta = RealMatrix::Zero(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const HalfInteger m = n_i + HalfInteger::integer(i);
    const double x = m.to_double();
    cert.delta(i, i) = pref * (g(m) + g(m - kOne) - (big_n - x * x) * (f(m) + f(m - kOne)));
    if (i + 1 < count) {
      const double b = -pref * ladder_sq(n, m) * f(m);
      cert.delta(i, i + 1) = b;
      cert.delta(i + 1, i) = b;
    }
  }

  const std::size_t m_sectors = sectors(n);
  std::vector<RealVector> products;
  RealVector mean = RealVector::Zero(count);
  for (std::size_t l = 0; l < m_sectors; ++l) {
    RealVector p(count);
    for (Eigen::Index i = 0; i < count; ++i) p(i) = profile.at(n_i + HalfInteger::integer(i))[l];
    products.push_back(cert.delta * p);
    mean += products.back();
  }
  mean /= static_cast<double>(m_sectors);
  // Least squares for Delta P_l = 2 alpha over all l gives 2 alpha = mean of Delta P_l.
  cert.alpha = 0.5 * mean;
  for (const RealVector& v : products) {
    cert.residual = std::max(cert.residual, (v - mean).cwiseAbs().maxCoeff());
  }
  return cert;
}

double path_distance(HalfInteger n, double lambda, const ProbabilityProfile& profile,
                     HalfInteger n_i, HalfInteger n_f) {
  double total = 0.0;
  for (HalfInteger m = n_i; m < n_f; m += kOne) total += trace_norm_distance(n, lambda, m, profile);
  return total;
}

PathMinimum minimize_path_distance(HalfInteger n, double lambda, HalfInteger n_i, HalfInteger n_f,
                                   int starts, std::uint64_t seed) {
  if (!(n_i < n_f) || n_i < -n || n_f > n || (n_i - n).twice() % 2 != 0 ||
      (n_f - n).twice() % 2 != 0) {
    throw DomainError("minimize_path_distance: need -n <= n_i < n_f <= n on the lattice of n");
  }
  if (starts < 1) throw DomainError("minimize_path_distance: starts must be positive");
  const std::size_t m = sectors(n);
  const auto positions = static_cast<std::size_t>((n_f - n_i).twice() / 2 + 1);
  const std::size_t dim = m * positions;
  const double r = lambda * std::sqrt(casimir_value(n));

  // Objective on the flat vector x[k*m + l] = P_l(n_i + k); no validation in the hot loop.
  auto objective = [&](const std::vector<double>& x) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < positions; ++k) {
      const std::vector<double> p0(x.begin() + k * m, x.begin() + (k + 1) * m);
      const std::vector<double> p1(x.begin() + (k + 1) * m, x.begin() + (k + 2) * m);
      const HalfInteger n3 = n_i + HalfInteger::integer(static_cast<std::int64_t>(k));
      total += 0.5 * r * step_numerator(p1, p0) / std::sqrt(step_sum(p1, p0, n, n3));
    }
    return total;
  };
  auto project = [&](std::vector<double>& x) {
    for (std::size_t k = 0; k < positions; ++k) project_simplex(x.data() + k * m, m);
  };

  constexpr double h = 1e-6;
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  PathMinimum best;
  best.distance = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  for (int start = 0; start < starts; ++start) {
    std::vector<double> x(dim);
    for (std::size_t k = 0; k < positions; ++k) {
      double sum = 0.0;
      for (std::size_t l = 0; l < m; ++l) sum += x[k * m + l] = expo(rng);
      for (std::size_t l = 0; l < m; ++l) x[k * m + l] /= sum;
    }
    double fx = objective(x);
    double step = 1.0;
    bool converged = false;
    // Near the optimum gradient noise can make the iterate hop between two points of
    // equal value; stop when 50 iterations bring no relative improvement above 1e-14.
    double window_start = fx;
    for (int it = 0; it < 20000 && !converged; ++it) {
      if (it > 0 && it % 50 == 0) {
        if (window_start - fx <= 1e-14 * std::abs(fx)) {
          converged = true;
          break;
        }
        window_start = fx;
      }
      std::vector<double> grad(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<double> xp = x;
        std::vector<double> xm = x;
        xp[j] += h;
        xm[j] -= h;
        grad[j] = (objective(xp) - objective(xm)) / (2.0 * h);
      }
      // Armijo backtracking along the projected path.
      bool accepted = false;
      for (int tries = 0; tries < 60; ++tries) {
        std::vector<double> cand(dim);
        for (std::size_t j = 0; j < dim; ++j) cand[j] = x[j] - step * grad[j];
        project(cand);
        double decrease = 0.0;
        double move = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
          decrease += grad[j] * (cand[j] - x[j]);
          move = std::max(move, std::abs(cand[j] - x[j]));
        }
        if (move < 1e-13) {
          converged = true;
          break;
        }
        const double fc = objective(cand);
        if (fc <= fx + 1e-4 * decrease) {
          x = std::move(cand);
          fx = fc;
          step = std::min(step * 2.0, 1e3);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted && !converged) converged = true;
    }
    any_converged = any_converged || converged;
    if (fx < best.distance) {
      best.distance = fx;
      best.best_start = start;
      best.profile = ProbabilityProfile{n, {}};
      for (std::size_t k = 0; k < positions; ++k) {
        best.profile.entries[n_i + HalfInteger::integer(static_cast<std::int64_t>(k))] =
            std::vector<double>(x.begin() + k * m, x.begin() + (k + 1) * m);
      }
    }
  }
  if (!any_converged) {
    throw ConvergenceError("minimize_path_distance: no start converged", best.distance);
  }
  return best;
}

double uniform_minimized_distance(HalfInteger n, double lambda, HalfInteger n3) {
  require_adjacent(n, n3, "uniform_minimized_distance");
  const double big_n = casimir_value(n);
  return lambda * std::sqrt(big_n) /
         (std::sqrt(static_cast<double>(n.twice() + 1)) *
          std::sqrt(3.0 * (ladder_sq(n, n3) - 1.0 / 3.0)));
}

EnergySpectrum default_spectrum(HalfInteger n, double lambda) {
  EnergySpectrum out;
  for (HalfInteger l = n; l >= -n; l -= kOne) out.levels.push_back(lambda * l.to_double());
  return out;
}

std::vector<double> thermal_profile(const EnergySpectrum& spectrum, double beta) {
  if (spectrum.levels.empty()) throw DomainError("thermal_profile: empty spectrum");
  if (!std::isfinite(beta) || beta < 0.0) throw DomainError("thermal_profile: beta must be finite and >= 0");
  for (double e : spectrum.levels) {
    if (!std::isfinite(e)) throw DomainError("thermal_profile: non-finite energy level");
  }
  const double e_min = *std::min_element(spectrum.levels.begin(), spectrum.levels.end());
  std::vector<double> p;
  p.reserve(spectrum.levels.size());
  for (double e : spectrum.levels) p.push_back(std::exp(-beta * (e - e_min)));
  const double z = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= z;
  return p;
}

double log_partition_function(const EnergySpectrum& spectrum, double beta) {
  const std::vector<double> p = thermal_profile(spectrum, beta);
  const double e_min = *std::min_element(spectrum.levels.begin(), spectrum.levels.end());
  // p_min-level = exp(0)/Z, so Z = 1/p at any minimizing level.
  const auto it = std::min_element(spectrum.levels.begin(), spectrum.levels.end());
  const double p_ground = p[static_cast<std::size_t>(it - spectrum.levels.begin())];
  return -beta * e_min - std::log(p_ground);
}

double thermal_prefactor(const EnergySpectrum& spectrum, double beta) {
  // sqrt(Z(2b))/Z(b) = sqrt(sum p^2), which is shift invariant.
  const std::vector<double> p = thermal_profile(spectrum, beta);
  double acc = 0.0;
  for (double x : p) acc += x * x;
  return std::sqrt(acc);
}

double thermal_distance(HalfInteger n, double lambda, HalfInteger n3, const EnergySpectrum& spectrum,
                        double beta) {
  require_adjacent(n, n3, "thermal_distance");
  return thermal_prefactor(spectrum, beta) * lambda * std::sqrt(casimir_value(n)) /
         std::sqrt(3.0 * (ladder_sq(n, n3) - 1.0 / 3.0));
}

}  // namespace fuzzydist
