#pragma once

#include "elabc/el_solver.hpp"
#include "elabc/models.hpp"
#include "elabc/rng.hpp"
#include "elabc/types.hpp"

namespace elabc {

enum class EstimatorKind { EmpiricalLikelihood, SyntheticLikelihood };

struct EstimatorConfig {
  EstimatorKind kind = EstimatorKind::EmpiricalLikelihood;
  int m = 25;        // simulated replicates per evaluation
  Index n = 0;       // dataset size handed to the simulator
  SolverOptions solver;
  /// Synthetic likelihood only: a summary covariance with condition
  /// number above this is reported as a degenerate evaluation
  /// (log value -inf) instead of silently inverted.
  double cond_threshold = 1e12;
};

struct LikelihoodEstimate {
  double log_value = kLogZero;  // finite or -inf, never NaN
  int m = 0;
  ElStatus el_status = ElStatus::Infeasible;  // EL estimator diagnostics
  double cond_number = 0.0;                   // synthetic estimator diagnostics
};

/// Estimated scaled log likelihood (1/m) sum_i log(w_i) from m fresh
/// replicates simulated at theta.  Constraint rows are
/// g(X_i) - s_obs; an infeasible weight problem, a boundary solution or
/// any non-finite summary yields log value -inf (posterior zero).
LikelihoodEstimate el_loglik(const GenerativeModel& model, const Vector& theta,
                             const Vector& s_obs, const EstimatorConfig& cfg,
                             RngStream& rng);

/// Gaussian pseudo-likelihood of s_obs under the sample mean and
/// unbiased sample covariance of m simulated summary vectors.
/// Requires m >= r + 2.
LikelihoodEstimate synth_loglik(const GenerativeModel& model, const Vector& theta,
                                const Vector& s_obs, const EstimatorConfig& cfg,
                                RngStream& rng);

/// log prior + estimator log value; -inf outside the prior support and
/// for rejected estimates.  The sentinel is absorbing, so MCMC treats
/// any such proposal as certain rejection.
double log_posterior_kernel(const GenerativeModel& model, const Vector& theta,
                            const Vector& s_obs, const EstimatorConfig& cfg,
                            RngStream& rng);

}  // namespace elabc
