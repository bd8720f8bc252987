#pragma once

#include "elabc/types.hpp"

namespace elabc {

/// m x r matrix whose rows are the summary differences
/// h_i = g(simulated dataset i) - g(observed dataset).
using ConstraintMatrix = Matrix;

struct SolverOptions {
  /// Convergence threshold on the dual gradient, scaled by (1 + max|H|).
  double gradient_tol = 1e-8;
  int max_iterations = 100;
  /// Weights below this are treated as zero: the solution is reported as
  /// Boundary and the estimated likelihood as exactly zero.  Nothing in
  /// the formulation pins this cutoff; 1e-12 is a fixed default,
  /// overridable here.
  double weight_floor = 1e-12;
  /// Backtracking keeps every 1 + lambda'h_i above domain_margin/m.  An
  /// interior optimum always satisfies 1 + lambda'h_i > 1/m (its weight
  /// is below 1), so any margin below 1 excludes no interior solution.
  double domain_margin = 1e-3;
};

enum class ElStatus { Interior, Boundary, Infeasible };

enum class HullScreen { DefinitelyInfeasible, MaybeFeasible };

struct ELSolution {
  Vector weights;     // m; all zero unless status == Interior
  Vector multiplier;  // r; Lagrange multiplier lambda at the optimum
  double log_el = kLogZero;  // (1/m) * sum_i log(w_i); -inf unless Interior
  ElStatus status = ElStatus::Infeasible;
  int iterations = 0;
  double gradient_norm = 0.0;
};

/// Necessary-condition screen: if some column of H has all entries of one
/// strict sign, the origin cannot lie in the convex hull of the rows and
/// the weight problem is infeasible.  Never flags a feasible instance.
HullScreen quick_infeasibility_check(const ConstraintMatrix& H);

/// Maximizes sum_i log(m w_i) over the probability simplex subject to
/// sum_i w_i h_i = 0, through the Lagrangian dual: damped Newton on
/// R(lambda) = -sum_i log(1 + lambda'h_i), whose stationary point gives
/// w_i = 1 / (m (1 + lambda'h_i)).
///
/// Interior: all weights strictly positive, constraints met.
/// Boundary: dual converged but some weight fell below the floor.
/// Infeasible: screen fired, or Newton could not drive the dual gradient
/// to tolerance inside the positivity domain.
/// Boundary and Infeasible both carry log_el = -inf (estimated
/// likelihood zero).
///
/// Throws NonFiniteInput if H contains NaN or infinity.
ELSolution solve_el(const ConstraintMatrix& H, const SolverOptions& opts = {});

/// Convenience wrapper returning just the scaled log empirical likelihood.
double log_el_scaled(const ConstraintMatrix& H, const SolverOptions& opts = {});

}  // namespace elabc
