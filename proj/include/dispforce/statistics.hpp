#pragma once

#include <cstdint>
#include <random>

// Student-t machinery and a deterministic Gaussian sampler.

namespace dispforce::stats {

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t-distribution with dof degrees of freedom.
double student_t_cdf(double t, double dof);

/// Quantile (inverse CDF) of Student's t-distribution, computed by
/// inverting the incomplete-beta representation of the CDF.
/// Requires 0 < p < 1 and dof >= 1.
double student_t_quantile(double p, double dof);

// mt19937_64 + Box-Muller; bit-reproducible for a fixed seed,
// independent of the standard library's distribution internals.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next(double mean = 0.0, double sd = 1.0);

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dispforce::stats
