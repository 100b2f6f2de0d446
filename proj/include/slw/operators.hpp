#pragma once

// Bounded linear operators K with exact adjoints and a stored norm bound.
//
// Every operator carries a norm_bound() such that ||K|| <= norm_bound(). The
// thresholded Landweber iteration needs ||K|| < 1; renormalize() rescales an
// operator (and its data) to get there.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "slw/core.hpp"

namespace slw {

using Matrix = Eigen::MatrixXd;

class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual Index domain_size() const = 0;
  virtual Index image_size() const = 0;
  virtual std::string kind() const = 0;

  double norm_bound() const { return norm_bound_; }

  Vector apply(const Vector& f) const;
  Vector adjoint(const Vector& g) const;

 protected:
  virtual Vector do_apply(const Vector& f) const = 0;
  virtual Vector do_adjoint(const Vector& g) const = 0;

  void set_norm_bound(double bound) { norm_bound_ = bound; }

 private:
  double norm_bound_ = 0.0;
};

using OperatorHandle = std::shared_ptr<const LinearOperator>;

/// Safety margin applied to power-method estimates.
inline constexpr double kNormSafetyFactor = 1.01;
/// Default target for renormalized operators.
inline constexpr double kRenormalizedBound = 0.999;

/// Power-method estimate of ||K|| times kNormSafetyFactor. Deterministic in
/// seed.
double estimate_norm(const LinearOperator& op, int iterations = 200, std::uint64_t seed = 0);

/// K acting diagonally: (K f)_k = d_k f_k. The norm bound is max |d_k|, exact.
class DiagonalOperator final : public LinearOperator {
 public:
  explicit DiagonalOperator(Vector diagonal);

  Index domain_size() const override { return diagonal_.size(); }
  Index image_size() const override { return diagonal_.size(); }
  std::string kind() const override { return "diagonal"; }
  const Vector& diagonal() const { return diagonal_; }

 protected:
  Vector do_apply(const Vector& f) const override;
  Vector do_adjoint(const Vector& g) const override;

 private:
  Vector diagonal_;
};

class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(Matrix matrix, int norm_iterations = 200);

  Index domain_size() const override { return matrix_.cols(); }
  Index image_size() const override { return matrix_.rows(); }
  std::string kind() const override { return "dense"; }
  const Matrix& matrix() const { return matrix_; }

 protected:
  Vector do_apply(const Vector& f) const override;
  Vector do_adjoint(const Vector& g) const override;

 private:
  Matrix matrix_;
};

/// factor * K.
class ScaledOperator final : public LinearOperator {
 public:
  ScaledOperator(OperatorHandle inner, double factor);

  Index domain_size() const override { return inner_->domain_size(); }
  Index image_size() const override { return inner_->image_size(); }
  std::string kind() const override { return "scaled " + inner_->kind(); }
  double factor() const { return factor_; }
  const OperatorHandle& inner() const { return inner_; }

 protected:
  Vector do_apply(const Vector& f) const override;
  Vector do_adjoint(const Vector& g) const override;

 private:
  OperatorHandle inner_;
  double factor_;
};

/// Frame synthesis K z = sum_n z_n psi_n / scale, with adjoint
/// v -> (<v, psi_n>)_n / scale. The frame vectors are the columns of the
/// matrix; scale >= 1 is chosen so the norm bound stays below target.
class FrameSynthesisOperator final : public LinearOperator {
 public:
  explicit FrameSynthesisOperator(Matrix frame_vectors, double target = kRenormalizedBound);

  Index domain_size() const override { return frame_.cols(); }
  Index image_size() const override { return frame_.rows(); }
  std::string kind() const override { return "frame"; }
  const Matrix& frame_vectors() const { return frame_; }
  double scale() const { return scale_; }

 protected:
  Vector do_apply(const Vector& z) const override;
  Vector do_adjoint(const Vector& v) const override;

 private:
  Matrix frame_;
  double scale_ = 1.0;
};

std::shared_ptr<const FrameSynthesisOperator> frame_synthesis_operator(Matrix frame_vectors);

/// Low-pass filter given as the autocorrelation of the indicator of a disk in
/// the frequency plane. radius_fraction is relative to the Nyquist frequency.
struct DiskFilterSpec {
  double radius_fraction = 0.1;
  double peak_response = kRenormalizedBound;
};

/// 2D convolution through zero padding and the DFT:
/// pad -> DFT -> multiply by H -> inverse DFT -> crop. The image sits in the
/// top-left corner of the padded array and the filter is zero-phase about the
/// origin. The adjoint multiplies by conj(H). Norm bound: max |H|.
class ConvolutionOperator final : public LinearOperator {
 public:
  /// response holds H on the pad.rows x (pad.cols/2 + 1) half spectrum of a
  /// real-to-complex DFT, row-major.
  ConvolutionOperator(GridShape grid, GridShape pad, std::vector<std::complex<double>> response);
  ~ConvolutionOperator() override;

  ConvolutionOperator(const ConvolutionOperator&) = delete;
  ConvolutionOperator& operator=(const ConvolutionOperator&) = delete;

  Index domain_size() const override { return grid_.size(); }
  Index image_size() const override { return grid_.size(); }
  std::string kind() const override { return "convolution"; }

  GridShape grid() const { return grid_; }
  GridShape pad() const { return pad_; }
  const std::vector<std::complex<double>>& response() const { return response_; }
  /// Response at the zero frequency.
  double dc_response() const { return response_.front().real(); }

 protected:
  Vector do_apply(const Vector& f) const override;
  Vector do_adjoint(const Vector& g) const override;

 private:
  struct Plans;

  Vector filter(const Vector& f, bool conjugate) const;

  GridShape grid_;
  GridShape pad_;
  std::vector<std::complex<double>> response_;
  std::unique_ptr<Plans> plans_;
};

/// Half-spectrum frequency response of the disk-autocorrelation filter on the
/// padded grid, scaled so its peak equals spec.peak_response. The disk is
/// sampled at frequency-cell centers and its autocorrelation is computed
/// exactly by counting overlaps.
std::vector<std::complex<double>> disk_autocorrelation_response(const DiskFilterSpec& spec, GridShape pad);

std::shared_ptr<const ConvolutionOperator> convolution_operator(const DiskFilterSpec& spec, GridShape grid,
                                                                GridShape pad);

/// A rescaled problem: minimizing ||K' f - g'||^2 + (mu * mu_factor) P(f)
/// has the same minimizers as ||K f - g||^2 + mu P(f).
struct Renormalized {
  OperatorHandle op;
  Vector data;
  double scale = 1.0;
  double mu_factor = 1.0;
};

/// Divides K and g by scale = max(1, bound / target), where bound is the
/// operator's stored norm bound.
Renormalized renormalize(const OperatorHandle& op, const Vector& g, double target = kRenormalizedBound);

/// Operator that is diagonal in an SVD basis: singular values nonincreasing
/// and nonnegative.
class SvdModel {
 public:
  explicit SvdModel(Vector singular_values);

  const Vector& singular_values() const { return singular_values_; }
  Index size() const { return singular_values_.size(); }
  std::shared_ptr<const DiagonalOperator> as_operator() const;

 private:
  Vector singular_values_;
};

/// Closed-form l1 minimizer in the SVD basis:
/// f_k = sigma_k^-2 S_mu(sigma_k <g, u_k>), zero where sigma_k = 0.
/// `projections` holds <g, u_k>.
CoefficientVector thresholded_svd_solve(const SvdModel& model, const Vector& projections, double mu);

}  // namespace slw
