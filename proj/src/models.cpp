#include "elabc/models.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "elabc/errors.hpp"

namespace elabc {

PriorComponent PriorComponent::uniform(double lo, double hi) {
  PriorComponent c;
  c.kind = Kind::Uniform;
  c.lo = lo;
  c.hi = hi;
  return c;
}

PriorComponent PriorComponent::gaussian(double mean, double sd) {
  PriorComponent c;
  c.kind = Kind::Gaussian;
  c.mean = mean;
  c.sd = sd;
  return c;
}

double PriorComponent::log_density(double x) const {
  switch (kind) {
    case Kind::Uniform:
      return (x > lo && x < hi) ? -std::log(hi - lo) : kLogZero;
    case Kind::Gaussian:
      return norm_logpdf(x, mean, sd);
  }
  return kLogZero;
}

double PriorComponent::draw(RngStream& rng) const {
  switch (kind) {
    case Kind::Uniform:
      return draw_uniform(rng, lo, hi);
    case Kind::Gaussian:
      return mean + sd * draw_normal(rng);
  }
  return 0.0;
}

double Prior::log_density(const Vector& theta) const {
  if (theta.size() != dim()) {
    throw LengthError("Prior: dimension mismatch");
  }
  double acc = 0.0;
  for (Index i = 0; i < dim(); ++i) {
    const double li = components[static_cast<std::size_t>(i)].log_density(theta[i]);
    if (is_log_zero(li)) return kLogZero;
    acc += li;
  }
  return acc;
}

Vector Prior::draw(RngStream& rng) const {
  Vector theta(dim());
  for (Index i = 0; i < dim(); ++i) {
    theta[i] = components[static_cast<std::size_t>(i)].draw(rng);
  }
  return theta;
}

Vector simulate_normal(double mu, Index n, RngStream& rng) {
  Vector x(n);
  for (Index j = 0; j < n; ++j) x[j] = mu + draw_normal(rng);
  return x;
}

double gk_quantile(double p, const GKParams& theta) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("gk_quantile: p must lie strictly inside (0,1)");
  }
  const double z = norm_quantile(p);
  // (1 - exp(-gz)) / (1 + exp(-gz)) == tanh(gz/2)
  const double skew = 1.0 + GKParams::c * std::tanh(0.5 * theta.g * z);
  const double tail = std::pow(1.0 + z * z, theta.k);
  return theta.A + theta.B * skew * tail * z;
}

Vector simulate_gk(const GKParams& theta, Index n, RngStream& rng) {
  Vector x(n);
  for (Index j = 0; j < n; ++j) x[j] = gk_quantile(rng.uniform01(), theta);
  return x;
}

Vector simulate_arch1(const ArchParams& theta, Index n, RngStream& rng) {
  Vector x(n);
  double var = theta.alpha0 / (1.0 - theta.alpha1);  // stationary variance
  for (Index j = 0; j < n; ++j) {
    x[j] = std::sqrt(var) * draw_normal(rng);
    var = theta.alpha0 + theta.alpha1 * x[j] * x[j];
  }
  return x;
}

Vector simulate_stereo(const StereoParams& theta, RngStream& rng) {
  const long count = draw_poisson(rng, theta.lambda);
  Vector planar(count);
  for (long i = 0; i < count; ++i) {
    const double v = kStereoThreshold + gpd_quantile(rng.uniform01(), theta.sigma, theta.xi);
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    const double d1 = v, d2 = v * u1, d3 = v * u2;
    // Axis perpendicular to the plane, size-biased by diameter.
    const double pick = rng.uniform01() * (d1 + d2 + d3);
    double in_plane;
    if (pick < d1) {
      in_plane = std::max(d2, d3);
    } else if (pick < d1 + d2) {
      in_plane = std::max(d1, d3);
    } else {
      in_plane = std::max(d1, d2);
    }
    const double offset = draw_uniform(rng, -1.0, 1.0);
    planar[i] = in_plane * std::sqrt(1.0 - offset * offset);
  }
  return planar;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double planar_count_offset(const Vector& x) {
  return (static_cast<double>(x.size()) - 112.0) / 100.0;
}
double planar_count_offset_rel(const Vector& x) {
  return (static_cast<double>(x.size()) - 112.0) / 112.0;
}
double planar_mean(const Vector& x) { return x.size() == 0 ? kInf : x.mean(); }
double planar_median(const Vector& x) {
  return x.size() == 0 ? kInf : quantile(x, 0.5);
}
double planar_prop_le6(const Vector& x) {
  return x.size() == 0 ? kInf : (x.array() <= 6.0).cast<double>().mean();
}
double planar_min(const Vector& x) { return x.size() == 0 ? kInf : x.minCoeff(); }
double planar_max(const Vector& x) { return x.size() == 0 ? kInf : x.maxCoeff(); }

SummarySpec stereo_default_spec() {
  return {SummaryStat::custom("planar_count_offset", planar_count_offset),
          SummaryStat::custom("planar_mean", planar_mean),
          SummaryStat::custom("planar_median", planar_median),
          SummaryStat::custom("planar_prop_le6", planar_prop_le6)};
}

SummarySpec stereo_hard_spec() {
  return {SummaryStat::custom("planar_count_offset_rel", planar_count_offset_rel),
          SummaryStat::custom("planar_min", planar_min),
          SummaryStat::custom("planar_max", planar_max),
          SummaryStat::custom("planar_median", planar_median)};
}

}  // namespace

Vector stereo_summaries(const Vector& planar) {
  return apply_spec_values(stereo_default_spec(), planar);
}

Vector stereo_hard_summaries(const Vector& planar) {
  return apply_spec_values(stereo_hard_spec(), planar);
}

void register_builtin_stats() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    register_custom_stat("planar_count_offset", planar_count_offset);
    register_custom_stat("planar_count_offset_rel", planar_count_offset_rel);
    register_custom_stat("planar_mean", planar_mean);
    register_custom_stat("planar_median", planar_median);
    register_custom_stat("planar_prop_le6", planar_prop_le6);
    register_custom_stat("planar_min", planar_min);
    register_custom_stat("planar_max", planar_max);
  });
}

GenerativeModel make_normal_model() {
  GenerativeModel model;
  model.name = "normal";
  model.param_names = {"mu"};
  model.prior.components = {PriorComponent::gaussian(0.0, 1.0)};
  model.support = [](const Vector& theta) { return std::isfinite(theta[0]); };
  model.simulate = [](const Vector& theta, Index n, RngStream& rng) {
    return simulate_normal(theta[0], n, rng);
  };
  model.summaries = {SummaryStat::moment(1.0)};
  model.true_theta = Vector::Constant(1, 0.0);
  model.default_n = 100;
  model.default_m = 25;
  model.default_proposal_scale = Vector::Constant(1, 0.2);
  return model;
}

GenerativeModel make_gk_model() {
  GenerativeModel model;
  model.name = "gk";
  model.param_names = {"A", "B", "g", "k"};
  model.prior.components = {
      PriorComponent::uniform(0.0, 10.0), PriorComponent::uniform(0.0, 10.0),
      PriorComponent::uniform(0.0, 10.0), PriorComponent::uniform(0.0, 10.0)};
  model.support = [](const Vector& theta) {
    return theta[1] > 0.0 && theta[3] > -0.5;
  };
  model.simulate = [](const Vector& theta, Index n, RngStream& rng) {
    return simulate_gk(GKParams{theta[0], theta[1], theta[2], theta[3]}, n, rng);
  };
  model.summaries = {SummaryStat::moment(1.0), SummaryStat::quantile_at(0.25),
                     SummaryStat::quantile_at(0.5), SummaryStat::quantile_at(0.75)};
  model.true_theta = (Vector(4) << 3.0, 1.0, 2.0, 0.5).finished();
  model.default_n = 1000;
  model.default_m = 40;
  model.default_proposal_scale = (Vector(4) << 0.05, 0.08, 0.2, 0.05).finished();
  return model;
}

GenerativeModel make_arch1_model() {
  GenerativeModel model;
  model.name = "arch1";
  model.param_names = {"alpha0", "alpha1"};
  model.prior.components = {PriorComponent::uniform(0.0, 5.0),
                            PriorComponent::uniform(0.0, 1.0)};
  model.support = [](const Vector& theta) {
    return theta[0] > 0.0 && theta[1] > 0.0 && theta[1] < 1.0;
  };
  model.simulate = [](const Vector& theta, Index n, RngStream& rng) {
    return simulate_arch1(ArchParams{theta[0], theta[1]}, n, rng);
  };
  model.summaries = {SummaryStat::lag1_autocov_sq(), SummaryStat::abs_quantile_at(0.25),
                     SummaryStat::abs_quantile_at(0.5), SummaryStat::abs_quantile_at(0.75)};
  model.true_theta = (Vector(2) << 3.0, 0.75).finished();
  model.default_n = 1000;
  model.default_m = 20;
  model.default_proposal_scale = (Vector(2) << 0.4, 0.08).finished();
  return model;
}

GenerativeModel make_stereo_model(bool hard_summaries) {
  register_builtin_stats();
  GenerativeModel model;
  model.name = "stereo";
  model.param_names = {"lambda", "sigma", "xi"};
  model.prior.components = {PriorComponent::uniform(1.0, 200.0),
                            PriorComponent::uniform(0.0, 10.0),
                            PriorComponent::uniform(-5.0, 5.0)};
  model.support = [](const Vector& theta) {
    return theta[0] > 0.0 && theta[1] > 0.0 && std::isfinite(theta[2]);
  };
  model.simulate = [](const Vector& theta, Index, RngStream& rng) {
    return simulate_stereo(StereoParams{theta[0], theta[1], theta[2]}, rng);
  };
  model.summaries = hard_summaries ? stereo_hard_spec() : stereo_default_spec();
  model.true_theta = (Vector(3) << 110.0, 2.0, 0.1).finished();
  model.default_n = 0;  // dataset size is part of the model
  model.default_m = 25;
  model.default_proposal_scale = (Vector(3) << 8.0, 1.0, 0.3).finished();
  return model;
}

}  // namespace elabc
