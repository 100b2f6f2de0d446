#pragma once

// Regularization-parameter rules and stability estimates for the penalized
// least-squares minimizer: mu(eps) schedules, the radii controlling the
// modulus of convergence, and bounds on the modulus of continuity
//
//   M(eps, rho) = max { ||h|| : ||K h|| <= eps, |||h|||_{w,p} <= rho }.

#include <functional>
#include <string>
#include <vector>

#include "slw/core.hpp"

namespace slw {

/// ||g - K f0|| <= epsilon and |||f0|||_{w,p} <= rho.
struct NoisePrior {
  double epsilon = 0.0;
  double rho = 1.0;

  NoisePrior(double epsilon, double rho);
};

/// mu = eps^2 / rho^p.
double mu_schedule(const NoisePrior& noise, double p);

struct MuRequirementReport {
  std::vector<double> epsilons;
  std::vector<double> mus;
  /// eps^2 / mu(eps).
  std::vector<double> ratios;
  bool mu_vanishes = false;
  bool ratio_vanishes = false;
  /// eps^2 / mu is the same at every grid point.
  bool ratio_constant = false;

  bool satisfied() const { return mu_vanishes && ratio_vanishes; }
  std::string summary() const;
};

/// Empirical check of mu(eps) -> 0 and eps^2 / mu(eps) -> 0 along a strictly
/// decreasing grid of positive noise levels: both sequences must decrease
/// strictly across the grid.
MuRequirementReport check_mu_requirements(const std::vector<double>& epsilons,
                                          const std::function<double(double)>& schedule);

struct PrimedRadii {
  double epsilon = 0.0;
  double rho = 0.0;
};

/// eps' = (eps^2 + mu rho^p)^(1/2), rho' = (rho^p + eps^2 / mu)^(1/p).
PrimedRadii primed_radii(const NoisePrior& noise, double mu, double p);

/// Per-index bounds b_g |h_g|^2 summed <= ||K h||^2 <= sum B_g |h_g|^2.
class SpectralEnvelope {
 public:
  SpectralEnvelope(Vector lower, Vector upper);

  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  Index size() const { return lower_.size(); }

 private:
  Vector lower_;
  Vector upper_;
};

struct ModulusBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower = max_g min(rho w_g^(-1/p), eps B_g^(-1/2)).
/// upper = min over partitions Gamma = G1 u G2 of
///         sqrt(eps^2 / min_{G1} b + rho^2 / min_{G2} w^(2/p)),
/// evaluated over the |Gamma| + 1 partitions where G1 holds the k indices with
/// the largest b (an empty part contributes zero).
ModulusBounds modulus_bounds(const SpectralEnvelope& envelope, const WeightSequence& weights, double p,
                             const NoisePrior& noise);

struct RateValues {
  double lower = 0.0;
  double upper = 0.0;
  double exponent_epsilon = 0.0;
  double exponent_rho = 0.0;
};

/// Power-law sides of the modulus estimate for a smoothing operator of order
/// alpha and a Besov prior with sigma = s + d(1/2 - 1/p):
/// (eps / A_upper)^(sigma/(sigma+alpha)) rho^(alpha/(sigma+alpha)) and the
/// same with A_lower. The constants multiplying each side are not known in
/// closed form and are reported as 1, so these are rates, not bounds.
RateValues besov_modulus_rate(double alpha, double sigma, double a_lower, double a_upper, const NoisePrior& noise);

}  // namespace slw
