#include "fuzzydist/connes_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fuzzydist/errors.hpp"

namespace fuzzydist {

namespace {

void require_adjacent(HalfInteger n, HalfInteger n3, const char* op) {
  if (n3 < -n || n3 > n - kOne || (n3 - n).twice() % 2 != 0) {
    throw DomainError(std::string(op) + ": n3 = " + n3.to_string() +
                      " is not a valid lower label of an adjacent pair for n = " + n.to_string());
  }
}

ComplexMatrix traceless_hermitian(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const Complex shift = h.trace() / static_cast<double>(h.rows());
  h.diagonal().array() -= shift;
  return h;
}

double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

struct Evaluation {
  double objective = 0.0;
  double seminorm = 0.0;
  ComplexMatrix gradient;
};

// f(a) = tr(drho a) / s(a) and an averaged subgradient of f.
class Objective {
 public:
  Objective(const SpectralTriple& t, const ComplexMatrix& drho) : t_(t), drho_(drho) {}

  Evaluation operator()(const ComplexMatrix& a) const {
    const ComplexMatrix c = dirac_commutator(t_, a);
    const TopSingular top = top_singular(c);
    Evaluation e;
    e.seminorm = top.value;
    const double num = real_inner(drho_, a);
    if (e.seminorm <= 0.0) {
      e.objective = 0.0;
      e.gradient = ComplexMatrix::Zero(a.rows(), a.cols());
      return e;
    }
    e.objective = num / e.seminorm;
    // d s = Re(u^dagger [D, pi(da)] v) = Re tr((v u^dagger D - D v u^dagger) pi(da)).
    ComplexMatrix ds = ComplexMatrix::Zero(a.rows(), a.cols());
    for (std::size_t i = 0; i < top.left.size(); ++i) {
      const ComplexMatrix vu = top.right[i] * top.left[i].adjoint();
      const ComplexMatrix w = vu * t_.dirac - t_.dirac * vu;
      ds += pullback(t_, w.adjoint());
    }
    ds /= static_cast<double>(top.left.size());
    e.gradient = traceless_hermitian((drho_ * e.seminorm - num * ds) / (e.seminorm * e.seminorm));
    return e;
  }

 private:
  const SpectralTriple& t_;
  ComplexMatrix drho_;
};

struct RunResult {
  ComplexMatrix a;
  double value = -std::numeric_limits<double>::infinity();
  bool converged = false;
};

RunResult ascend(const Objective& f, ComplexMatrix a, const OptimizerOptions& opts) {
  a /= a.norm();
  Evaluation cur = f(a);
  RunResult run{a, cur.objective, false};
  std::vector<double> history{cur.objective};
  double step = 0.1;
  for (int it = 0; it < opts.max_iters; ++it) {
    // Tangent component of the subgradient on the unit sphere.
    ComplexMatrix g = cur.gradient - real_inner(a, cur.gradient) * a;
    const double gnorm = g.norm();
    bool moved = false;
    if (gnorm > 0.0) {
      for (int tries = 0; tries < 40 && step > 1e-16; ++tries) {
        ComplexMatrix cand = traceless_hermitian(a + (step / gnorm) * g);
        cand /= cand.norm();
        Evaluation next = f(cand);
        if (next.objective > cur.objective) {
          a = cand;
          cur = std::move(next);
          step = std::min(1.0, step * 1.5);
          moved = true;
          break;
        }
        step *= 0.5;
      }
    }
    if (cur.objective > run.value) {
      run.value = cur.objective;
      run.a = a;
    }
    history.push_back(cur.objective);
    const int w = opts.window;
    if (!moved || static_cast<int>(history.size()) > w) {
      const double old = history[history.size() > static_cast<std::size_t>(w)
                                     ? history.size() - 1 - static_cast<std::size_t>(w)
                                     : 0];
      const double scale = std::max(std::abs(cur.objective), 1e-300);
      if (!moved || (cur.objective - old) <= opts.tol * scale) {
        // A failed line search at a kink is a stationary point of the ascent.
        run.converged = true;
        return run;
      }
    }
  }
  return run;
}

ComplexMatrix random_direction(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return traceless_hermitian(m);
}

}  // namespace

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::closed_form: return "closed_form";
    case DistanceMethod::norm_pipeline: return "norm_pipeline";
    case DistanceMethod::optimizer: return "optimizer";
  }
  return "unknown";
}

double adjacent_distance_closed_form(HalfInteger n, HalfInteger n3, double lambda) {
  require_adjacent(n, n3, "adjacent_distance_closed_form");
  return lambda * std::sqrt(casimir_value(n)) / std::sqrt(ladder_sq(n, n3));
}

DistanceResult distance_lower_bound(const SpectralTriple& t, const ComplexMatrix& rho,
                                    const ComplexMatrix& rho2) {
  if (rho.rows() != rho2.rows() || rho.cols() != rho2.cols()) {
    throw DomainError("distance_lower_bound: states live on different spaces");
  }
  DistanceResult out;
  out.method = DistanceMethod::norm_pipeline;
  const ComplexMatrix drho = rho2 - rho;
  if (max_abs(drho) == 0.0) return out;
  const double s = lipschitz_seminorm(t, drho);
  if (s <= tol::kDecomposition * max_abs(drho)) {
    throw ConsistencyError("distance_lower_bound: seminorm vanishes on a nonzero drho (infinite distance)");
  }
  out.value = (drho * drho).trace().real() / s;
  out.certificate = drho / s;
  out.ball_residual = lipschitz_seminorm(t, *out.certificate) - 1.0;
  return out;
}

DistanceResult adjacent_distance_pipeline(HalfInteger n, HalfInteger n3, double lambda) {
  require_adjacent(n, n3, "adjacent_distance_pipeline");
  const FuzzySphere s = build_space(n, lambda);
  const SpectralTriple t = build_dirac(s, Representation::config, 0);
  return distance_lower_bound(t, pure_state(s, n3), pure_state(s, n3 + kOne));
}

DistanceResult connes_distance_optimized(const SpectralTriple& t, const ComplexMatrix& rho,
                                         const ComplexMatrix& rho2, const OptimizerOptions& opts) {
  if (rho.rows() != rho2.rows() || rho.cols() != rho2.cols()) {
    throw DomainError("connes_distance_optimized: states live on different spaces");
  }
  const auto d = static_cast<Eigen::Index>(t.sphere.dim());
  if (rho.rows() != d) {
    throw DomainError("connes_distance_optimized: states must be density matrices on F_n");
  }
  DistanceResult out;
  out.method = DistanceMethod::optimizer;
  const ComplexMatrix drho = 0.5 * ((rho2 - rho) + (rho2 - rho).adjoint());
  if (max_abs(drho) == 0.0) return out;

  const Objective f(t, drho);
  std::mt19937_64 rng(opts.seed);
  std::vector<ComplexMatrix> starts;
  if (opts.start_from_drho && traceless_hermitian(drho).norm() > 0.0) starts.push_back(traceless_hermitian(drho));
  for (int i = 0; i < opts.random_starts; ++i) starts.push_back(random_direction(d, rng));

  RunResult best;
  bool any_converged = false;
  for (const ComplexMatrix& s0 : starts) {
    RunResult run = ascend(f, s0, opts);
    any_converged = any_converged || run.converged;
    if (run.value > best.value) best = std::move(run);
  }
  if (!any_converged) {
    throw ConvergenceError("connes_distance_optimized: no start converged within max_iters",
                           best.value);
  }
  // Scale onto the boundary of the Lipschitz ball.
  const double s = lipschitz_seminorm(t, best.a);
  ComplexMatrix a = best.a / s;
  out.value = real_inner(drho, a);
  out.certificate = a;
  out.ball_residual = lipschitz_seminorm(t, a) - 1.0;
  return out;
}

double quantized_polar_angle(HalfInteger n, HalfInteger n3) {
  if (n3 < -n || n3 > n || (n3 - n).twice() % 2 != 0) {
    throw DomainError("quantized_polar_angle: n3 = " + n3.to_string() + " out of range for n = " +
                      n.to_string());
  }
  return std::asin(n3.to_double() / std::sqrt(casimir_value(n)));
}

double arc_length_step(HalfInteger n, HalfInteger n3, double lambda) {
  const std::int64_t four_gap = n.twice() * (n.twice() + 2) - n3.twice() * n3.twice();
  if (four_gap <= 0) {
    throw DomainError("arc_length_step: |n3| >= sqrt(n(n+1)) for n3 = " + n3.to_string());
  }
  return lambda * std::sqrt(casimir_value(n)) / std::sqrt(static_cast<double>(four_gap) / 4.0);
}

}  // namespace fuzzydist
