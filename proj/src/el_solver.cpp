#include "elabc/el_solver.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "elabc/errors.hpp"

namespace elabc {

HullScreen quick_infeasibility_check(const ConstraintMatrix& H) {
  for (Index k = 0; k < H.cols(); ++k) {
    const auto col = H.col(k).array();
    if ((col > 0.0).all() || (col < 0.0).all()) {
      return HullScreen::DefinitelyInfeasible;
    }
  }
  return HullScreen::MaybeFeasible;
}

namespace {

// R(lambda) = -sum_i log(d_i) with d_i = 1 + lambda'h_i.
double dual_objective(const Vector& d) { return -d.array().log().sum(); }

ELSolution rejected(Index m, Index r, ElStatus status, int iters, double gnorm) {
  ELSolution sol;
  sol.weights = Vector::Zero(m);  // the defined convention for w when not interior
  sol.multiplier = Vector::Zero(r);
  sol.log_el = kLogZero;
  sol.status = status;
  sol.iterations = iters;
  sol.gradient_norm = gnorm;
  return sol;
}

}  // namespace

ELSolution solve_el(const ConstraintMatrix& H, const SolverOptions& opts) {
  if (!all_finite(H)) {
    throw NonFiniteInput("solve_el: constraint matrix has NaN or infinite entries");
  }
  const Index m = H.rows();
  const Index r = H.cols();
  if (m < 1 || r < 1) {
    throw LengthError("solve_el: constraint matrix must be at least 1x1");
  }

  if (quick_infeasibility_check(H) == HullScreen::DefinitelyInfeasible) {
    return rejected(m, r, ElStatus::Infeasible, 0, 0.0);
  }

  const double scale = 1.0 + H.cwiseAbs().maxCoeff();
  const double grad_tol = opts.gradient_tol * scale;
  const double guard = opts.domain_margin / static_cast<double>(m);

  Vector lambda = Vector::Zero(r);
  Vector d = Vector::Ones(m);  // d_i = 1 + lambda'h_i, kept > guard throughout
  double obj = 0.0;
  double gnorm = H.colwise().sum().cwiseAbs().maxCoeff();
  int iter = 0;
  bool converged = false;

  for (; iter < opts.max_iterations; ++iter) {
    const Vector inv_d = d.cwiseInverse();
    const Vector grad = -(H.transpose() * inv_d);
    gnorm = grad.cwiseAbs().maxCoeff();
    if (gnorm <= grad_tol) {
      converged = true;
      // Polish: full Newton steps while they still shrink the gradient,
      // so the primal identities hold well beyond the requested tolerance.
      for (int extra = 0; extra < 4 && gnorm > 1e-14 * scale; ++extra) {
        const Vector inv_d2 = d.cwiseInverse();
        const Vector g2 = -(H.transpose() * inv_d2);
        Matrix hess = Matrix::Zero(r, r);
        for (Index i = 0; i < m; ++i) {
          hess.selfadjointView<Eigen::Lower>().rankUpdate(H.row(i).transpose(),
                                                          inv_d2[i] * inv_d2[i]);
        }
        hess = hess.selfadjointView<Eigen::Lower>();
        hess.diagonal().array() += 1e-14 * (1.0 + hess.diagonal().maxCoeff());
        const Vector step = hess.ldlt().solve(-g2);
        if (!all_finite(step)) break;
        const Vector d_new = d + H * step;
        if ((d_new.array() <= guard).any()) break;
        const Vector g_new = -(H.transpose() * d_new.cwiseInverse());
        if (g_new.cwiseAbs().maxCoeff() >= gnorm) break;
        lambda += step;
        d = d_new;
        gnorm = g_new.cwiseAbs().maxCoeff();
      }
      break;
    }

    Matrix hess = Matrix::Zero(r, r);
    for (Index i = 0; i < m; ++i) {
      hess.selfadjointView<Eigen::Lower>().rankUpdate(H.row(i).transpose(),
                                                      inv_d[i] * inv_d[i]);
    }
    hess = hess.selfadjointView<Eigen::Lower>();
    hess.diagonal().array() += 1e-12 * (1.0 + hess.diagonal().maxCoeff());
    Vector step = hess.ldlt().solve(-grad);
    if (!all_finite(step)) {
      return rejected(m, r, ElStatus::Infeasible, iter, gnorm);
    }

    // Longest step staying inside {d_i > guard}, then halve until the
    // dual objective decreases.
    const Vector dir = H * step;
    double alpha = 1.0;
    for (Index i = 0; i < m; ++i) {
      if (dir[i] < 0.0) {
        const double limit = (guard - d[i]) / dir[i];
        if (limit < alpha) alpha = 0.99 * limit;
      }
    }
    if (!(alpha > 0.0)) {
      return rejected(m, r, ElStatus::Infeasible, iter, gnorm);
    }
    const double slope = grad.dot(step);  // negative for a descent direction
    bool stepped = false;
    while (alpha >= 1e-16) {
      const Vector d_try = d + alpha * dir;
      if ((d_try.array() > guard).all()) {
        const double obj_try = dual_objective(d_try);
        if (obj_try <= obj + 1e-4 * alpha * slope) {
          lambda += alpha * step;
          d = d_try;
          obj = obj_try;
          stepped = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!stepped) {
      return rejected(m, r, ElStatus::Infeasible, iter, gnorm);
    }
  }

  if (!converged) {
    return rejected(m, r, ElStatus::Infeasible, iter, gnorm);
  }

  Vector weights = (static_cast<double>(m) * d).cwiseInverse();
  weights /= weights.sum();  // exact simplex closure
  if (weights.minCoeff() < opts.weight_floor) {
    return rejected(m, r, ElStatus::Boundary, iter, gnorm);
  }

  ELSolution sol;
  sol.weights = std::move(weights);
  sol.multiplier = lambda;
  sol.log_el = sol.weights.array().log().mean();
  sol.status = ElStatus::Interior;
  sol.iterations = iter;
  sol.gradient_norm = gnorm;
  return sol;
}

double log_el_scaled(const ConstraintMatrix& H, const SolverOptions& opts) {
  return solve_el(H, opts).log_el;
}

}  // namespace elabc
