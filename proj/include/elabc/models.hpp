#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elabc/distributions.hpp"
#include "elabc/rng.hpp"
#include "elabc/summaries.hpp"
#include "elabc/types.hpp"

namespace elabc {

struct PriorComponent {
  enum class Kind { Uniform, Gaussian };
  Kind kind = Kind::Uniform;
  double lo = 0.0, hi = 1.0;      // Uniform
  double mean = 0.0, sd = 1.0;    // Gaussian

  static PriorComponent uniform(double lo, double hi);
  static PriorComponent gaussian(double mean, double sd);

  double log_density(double x) const;
  double draw(RngStream& rng) const;
};

/// Independent per-coordinate prior.  Uniform components double as the
/// parameter box used for proposal screening and prior simulation.
struct Prior {
  std::vector<PriorComponent> components;

  Index dim() const { return static_cast<Index>(components.size()); }
  double log_density(const Vector& theta) const;
  Vector draw(RngStream& rng) const;
};

/// One benchmark problem: simulator, prior, summary map and fixtures.
/// simulate must be a pure function of (theta, n, stream); models with a
/// random dataset size (stereology) ignore n.
struct GenerativeModel {
  std::string name;
  std::vector<std::string> param_names;
  Prior prior;
  std::function<bool(const Vector&)> support;
  std::function<Vector(const Vector&, Index, RngStream&)> simulate;
  SummarySpec summaries;
  Vector true_theta;
  Index default_n = 0;
  int default_m = 0;
  Vector default_proposal_scale;

  Index dim() const { return static_cast<Index>(param_names.size()); }
  Vector summarize(const Vector& data) const {
    return apply_spec_values(summaries, data);
  }
};

struct GKParams {
  double A = 0.0;   // location
  double B = 1.0;   // scale, > 0
  double g = 0.0;   // skewness
  double k = 0.0;   // kurtosis, > -0.5
  static constexpr double c = 0.8;
};

struct ArchParams {
  double alpha0 = 1.0;  // > 0
  double alpha1 = 0.5;  // in (0,1) for stationarity
};

struct StereoParams {
  double lambda = 100.0;  // Poisson rate of observed inclusions, > 0
  double sigma = 1.0;     // GPD scale, > 0
  double xi = 0.0;        // GPD shape
};

inline constexpr double kStereoThreshold = 5.0;  // v0, minimum large diameter

Vector simulate_normal(double mu, Index n, RngStream& rng);

/// Quantile function of the g-and-k distribution,
///   Q(p) = A + B [1 + c tanh(g z/2)] (1 + z^2)^k z,  z = norm_quantile(p).
/// Throws DomainError for p outside (0,1).
double gk_quantile(double p, const GKParams& theta);

Vector simulate_gk(const GKParams& theta, Index n, RngStream& rng);

Vector simulate_arch1(const ArchParams& theta, Index n, RngStream& rng);

/// Simplified elliptical-inclusion cross-section model.  The observed
/// planar inclusion count is Poisson(lambda).  Each inclusion has
/// principal diameters (V, V*U1, V*U2) with V = v0 + GPD(sigma, xi) and
/// U1, U2 uniform on [0,1]; the axis perpendicular to the sampling plane
/// is chosen with probability proportional to its diameter (size-biased
/// orientation), and the recorded planar diameter is the largest
/// in-plane axis scaled by the chord factor sqrt(1 - D^2) with D uniform
/// on (-1,1), the normalized offset of the plane from the centre.
/// Returns the (possibly empty) vector of observed planar diameters.
Vector simulate_stereo(const StereoParams& theta, RngStream& rng);

/// Default stereology summaries: ((L-112)/100, mean, median,
/// proportion <= 6).  When the dataset is empty the mean, median and
/// proportion are set to +infinity, which the likelihood estimators
/// treat as an infeasible evaluation (estimated likelihood zero) rather
/// than an error.
Vector stereo_summaries(const Vector& planar);

/// Deliberately hard-to-match variant: ((L-112)/112, min, max, median).
Vector stereo_hard_summaries(const Vector& planar);

/// Synthetic observed dataset for the stereology example: 112 planar
/// diameters generated by simulate_stereo at (lambda, sigma, xi) =
/// (110, 2, 0.1); see data/stereo_observed.csv for the same values.
const Vector& stereo_observed_fixture();

GenerativeModel make_normal_model();
GenerativeModel make_gk_model();
GenerativeModel make_arch1_model();
GenerativeModel make_stereo_model(bool hard_summaries = false);

/// Registers the named custom statistics used by the stereology model so
/// that summary specs mentioning them can be parsed from JSON.
void register_builtin_stats();

}  // namespace elabc
