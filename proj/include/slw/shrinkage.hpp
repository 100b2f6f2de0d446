#pragma once

// Shrinkage operators S_{w,p}: the minimizer over y of (y - x)^2 + w |y|^p.
//
// For p = 1 this is soft thresholding at w/2. For 1 < p <= 2 it is the
// inverse of F_{w,p}(y) = y + (w p / 2) sign(y) |y|^(p-1).

#include <complex>

#include <Eigen/Core>

#include "slw/core.hpp"

namespace slw {

/// Absolute tolerance of the root finder used for 1 < p < 2.
inline constexpr double kShrinkTolerance = 1e-12;

double soft_threshold(double x, double w);

/// F_{w,p}(y) = y + (w p / 2) sign(y) |y|^(p-1).
double shrink_forward(double y, double w, double p);

double shrink_p(double x, double w, double p);

/// Shrinks the modulus and keeps the phase.
std::complex<double> shrink_complex(std::complex<double> z, double w, double p);

/// Uses w_plus on the positive half-line and w_minus on the negative one.
double shrink_asymmetric(double x, double w_plus, double w_minus, double p);

/// F_{w+,w-,p}(y) = y + (p/2) w+ [y]_+^(p-1) - (p/2) w- [y]_-^(p-1).
double shrink_forward_asymmetric(double y, double w_plus, double w_minus, double p);

/// Componentwise S_{mu w_g, p}. When `divisor` is non-null the effective
/// weight becomes mu w_g / divisor_g (diagonal preconditioning).
Vector shrink_vector(const Vector& h, const PenaltySpec& spec, const Vector* divisor = nullptr);

CoefficientVector shrink_vector(const CoefficientVector& h, const PenaltySpec& spec);

/// Complex coefficients, shrinking moduli. Asymmetric specs are rejected.
Eigen::VectorXcd shrink_vector(const Eigen::VectorXcd& h, const PenaltySpec& spec);

}  // namespace slw
