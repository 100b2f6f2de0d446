#pragma once

// Periodic orthonormal wavelet transforms (1D and separable 2D) and
// scale-dependent Besov weights w_lambda = 2^(sigma p |lambda|).
//
// 1D coefficient layout: [a_J | d_J | d_{J-1} | ... | d_1], coarsest first.
// 2D layout is the usual Mallat square: the LL block of level J sits in the
// top-left corner, detail blocks of level j surround the LL block of level j.
// Scale labels |lambda| are 0 for the scaling coefficients and the coarsest
// details, increasing by one per finer level.

#include <string>
#include <string_view>
#include <vector>

#include "slw/core.hpp"
#include "slw/operators.hpp"

namespace slw {

enum class WaveletFamily { haar, db2, db3, db4 };

struct WaveletSpec {
  WaveletFamily family = WaveletFamily::db2;
  int levels = 3;

  /// "haar:3", "db2:4", ... Family names: haar, db1 (= haar), db2, db3, db4.
  static WaveletSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Low-pass analysis filter h; the high-pass is g[n] = (-1)^n h[L-1-n].
const std::vector<double>& scaling_filter(WaveletFamily family);

struct WaveletCoefficients {
  CoefficientVector coefficients;
  std::vector<int> scale_labels;
};

WaveletCoefficients dwt(const Vector& signal, const WaveletSpec& spec);
Vector idwt(const Vector& coefficients, const WaveletSpec& spec);

/// 2D transforms of a row-major image.
WaveletCoefficients dwt2(const Vector& image, GridShape grid, const WaveletSpec& spec);
Vector idwt2(const Vector& coefficients, GridShape grid, const WaveletSpec& spec);

std::vector<int> scale_labels(Index length, const WaveletSpec& spec);
std::vector<int> scale_labels(GridShape grid, const WaveletSpec& spec);

struct BesovWeightSpec {
  double s = 0.0;
  double p = 1.0;
  int dimension = 1;

  /// s + d (1/2 - 1/p).
  double sigma() const;
};

WeightSequence besov_weights(const BesovWeightSpec& spec, const std::vector<int>& labels);

/// K_pixel composed with the inverse wavelet transform:
/// apply = K_pixel o idwt2, adjoint = dwt2 o K_pixel^*.
class ConjugatedOperator final : public LinearOperator {
 public:
  ConjugatedOperator(OperatorHandle pixel_operator, GridShape grid, WaveletSpec spec);

  Index domain_size() const override { return grid_.size(); }
  Index image_size() const override { return pixel_->image_size(); }
  std::string kind() const override { return "wavelet-conjugated " + pixel_->kind(); }
  GridShape grid() const { return grid_; }
  const WaveletSpec& wavelet() const { return spec_; }

 protected:
  Vector do_apply(const Vector& f) const override;
  Vector do_adjoint(const Vector& g) const override;

 private:
  OperatorHandle pixel_;
  GridShape grid_;
  WaveletSpec spec_;
};

/// grid.rows == 1 gives the 1D transform.
std::shared_ptr<const ConjugatedOperator> conjugated_operator(OperatorHandle pixel_operator, GridShape grid,
                                                              const WaveletSpec& spec);

}  // namespace slw
