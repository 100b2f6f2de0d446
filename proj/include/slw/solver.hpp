#pragma once

// Thresholded Landweber iteration
//
//   f^n = P_C S_{mu w / d, p}(f^{n-1} + D^{-1} K^*(g - K f^{n-1}))
//
// with optional diagonal preconditioner D (identity by default) and optional
// projection P_C onto the nonnegative cone. Every step minimizes a surrogate
// functional, so the objective never increases; the solver checks this and
// aborts if it does not hold.

#include <optional>
#include <string>
#include <vector>

#include "slw/core.hpp"
#include "slw/operators.hpp"

namespace slw {

enum class Projection { none, nonnegative };

struct SolverConfig {
  int max_iterations = 10000;
  /// Stop once ||f^n - f^{n-1}|| <= step_tolerance * (||f^0|| + 1).
  double step_tolerance = 1e-8;
  /// Stop once Phi(f^{n-1}) - Phi(f^n) <= objective_tolerance * (1 + |Phi|).
  /// Zero disables the rule.
  double objective_tolerance = 0.0;
  /// Diagonal d_g with min d_g > ||K||^2.
  std::optional<Vector> preconditioner;
  Projection projection = Projection::none;
  bool record_trace = true;
};

struct TraceEntry {
  int iteration = 0;
  ObjectiveBreakdown objective;
  double step_norm = 0.0;
  /// Phi^SUR(f^n; f^{n-1}).
  double surrogate = 0.0;
  double elapsed_seconds = 0.0;
};

struct SolveTrace {
  ObjectiveBreakdown initial;
  std::vector<TraceEntry> entries;
  /// Sum over n of ||f^n - f^{n-1}||^2.
  double sum_squared_steps = 0.0;
  /// Strict lower bound of D - K^*K: 1 - ||K||^2 without preconditioning.
  double eta = 0.0;
  /// ||f - T(f)|| at the returned point, T being the iteration map in use.
  double fixed_point_residual = 0.0;
};

enum class SolveStatus { converged_step, converged_objective, max_iterations };

std::string to_string(SolveStatus status);

struct SolveResult {
  CoefficientVector minimizer;
  SolveTrace trace;
  SolveStatus status = SolveStatus::max_iterations;
  int iterations = 0;
};

/// Slack allowed on each descent check, relative to 1 + |Phi|.
inline constexpr double kDescentSlack = 1e-12;

/// f + K^*(g - K f).
CoefficientVector landweber_step(const CoefficientVector& f, const Vector& g, const LinearOperator& op);

/// One step of the iteration map with the shrinkage, preconditioner and
/// projection described by spec and config.
CoefficientVector iterate_step(const CoefficientVector& f, const Vector& g, const LinearOperator& op,
                               const PenaltySpec& spec, const SolverConfig& config = {});

/// Iterates from f0 (zero by default) until a stopping rule fires.
SolveResult solve(const Vector& g, const LinearOperator& op, const PenaltySpec& spec,
                  const SolverConfig& config = {}, const std::optional<CoefficientVector>& f0 = std::nullopt);

/// ||f - S_{mu w, p}(f + K^*(g - K f))||.
double fixed_point_residual(const CoefficientVector& f, const Vector& g, const LinearOperator& op,
                            const PenaltySpec& spec);

/// Same, for the map configured by config.
double fixed_point_residual(const CoefficientVector& f, const Vector& g, const LinearOperator& op,
                            const PenaltySpec& spec, const SolverConfig& config);

}  // namespace slw
