#pragma once

// Coefficient vectors, weights, penalty specifications and the objective
//
//   Phi(f) = ||K f - g||^2 + mu * sum_g w_g |f_g|^p
//
// together with its surrogate, which adds ||f - a||^2 - ||K (f - a)||^2.

#include <cstddef>
#include <optional>

#include <Eigen/Core>

namespace slw {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

class LinearOperator;

struct GridShape {
  Index rows = 0;
  Index cols = 0;

  Index size() const { return rows * cols; }
  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// A finite coefficient sequence (f_g) over a flat index set, optionally
/// carrying the 2D grid it was flattened from (row-major).
class CoefficientVector {
 public:
  explicit CoefficientVector(Vector values, std::optional<GridShape> grid = std::nullopt);

  static CoefficientVector zeros(Index n);
  static CoefficientVector zeros(GridShape grid);

  Index size() const { return values_.size(); }
  const Vector& values() const { return values_; }
  double operator[](Index i) const { return values_[i]; }
  const std::optional<GridShape>& grid() const { return grid_; }
  double norm() const { return values_.norm(); }

  /// Same grid metadata, new entries.
  CoefficientVector with_values(Vector values) const;

 private:
  Vector values_;
  std::optional<GridShape> grid_;
};

/// Strictly positive weights w_g with their uniform lower bound c = min w_g.
class WeightSequence {
 public:
  explicit WeightSequence(Vector weights);

  static WeightSequence uniform(Index n, double value = 1.0);

  Index size() const { return weights_.size(); }
  const Vector& values() const { return weights_; }
  double operator[](Index i) const { return weights_[i]; }
  double lower_bound() const { return lower_bound_; }

 private:
  Vector weights_;
  double lower_bound_;
};

/// Separate weights for the positive and negative parts of each coefficient.
struct AsymmetricWeights {
  WeightSequence positive;
  WeightSequence negative;
};

class PenaltySpec {
 public:
  PenaltySpec(double p, WeightSequence weights, double mu = 1.0);
  PenaltySpec(double p, WeightSequence weights, double mu, AsymmetricWeights asymmetric);

  double p() const { return p_; }
  double mu() const { return mu_; }
  const WeightSequence& weights() const { return weights_; }
  const std::optional<AsymmetricWeights>& asymmetric() const { return asymmetric_; }
  Index size() const { return weights_.size(); }

  PenaltySpec with_mu(double mu) const;

 private:
  double p_;
  WeightSequence weights_;
  double mu_;
  std::optional<AsymmetricWeights> asymmetric_;
};

struct ObjectiveBreakdown {
  double discrepancy = 0.0;
  double penalty = 0.0;
  double total = 0.0;
};

/// (sum_g w_g |f_g|^p)^(1/p). Ignores mu and any asymmetric split.
double triple_norm(const CoefficientVector& f, const PenaltySpec& spec);

/// mu * sum_g w_g |f_g|^p, or mu * sum_g (w+_g [f_g]_+^p + w-_g [f_g]_-^p)
/// when the spec is asymmetric.
double penalty_value(const Vector& f, const PenaltySpec& spec);

ObjectiveBreakdown objective(const CoefficientVector& f, const Vector& g, const LinearOperator& op,
                             const PenaltySpec& spec);

/// Phi(f) + ||f - a||^2 - ||K (f - a)||^2. Requires op.norm_bound() < 1.
double surrogate_objective(const CoefficientVector& f, const CoefficientVector& a, const Vector& g,
                           const LinearOperator& op, const PenaltySpec& spec);

void require_finite(const Vector& v, const char* what);
void require_same_size(Index a, Index b, const char* what);

}  // namespace slw
