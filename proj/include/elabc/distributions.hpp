#pragma once

#include "elabc/rng.hpp"
#include "elabc/types.hpp"

namespace elabc {

/// Standard normal quantile (inverse CDF), rational approximation
/// accurate to about 1e-15 relative over the full open unit interval.
/// Throws DomainError for p outside (0,1).
double norm_quantile(double p);

/// log of the N(mean, sd^2) density.
double norm_logpdf(double x, double mean = 0.0, double sd = 1.0);

/// Quantile of the generalized Pareto excess distribution with scale
/// sigma and shape xi (excess over the threshold, i.e. the returned
/// value is >= 0).  xi == 0 is the exponential limit; xi < 0 gives the
/// bounded support (0, -sigma/xi).
double gpd_quantile(double u, double sigma, double xi);

inline double draw_normal(RngStream& rng) { return norm_quantile(rng.uniform01()); }

inline double draw_uniform(RngStream& rng, double a, double b) {
  return a + (b - a) * rng.uniform01();
}

/// Poisson draw by CDF inversion; one uniform per draw.  Suitable for
/// mean below ~700 (where exp(-mean) stays normal in double precision).
long draw_poisson(RngStream& rng, double mean);

}  // namespace elabc
