#pragma once

// The 2D deconvolution experiment: a phantom of four small bright ellipses,
// blurred by the disk-autocorrelation filter, corrupted with Poisson noise
// and reconstructed with the thresholded Landweber iteration for several
// (p, mu, projection) cases.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "slw/config.hpp"
#include "slw/core.hpp"
#include "slw/operators.hpp"
#include "slw/solver.hpp"

namespace slw {

struct EllipseSource {
  double center_row = 0.0;
  double center_col = 0.0;
  double semi_axis_row = 0.0;
  double semi_axis_col = 0.0;
};

/// Source positions for a grid, plus the rows/columns of the two diagnostic
/// lines. Sources 0 and 1 are the close pair on the horizontal line, source 2
/// sits on the vertical line, source 3 is isolated.
struct PhantomLayout {
  std::vector<EllipseSource> sources;
  Index horizontal_line = 0;
  Index vertical_line = 0;
  double smoothing_sigma = 1.0;
};

PhantomLayout phantom_layout(GridShape grid);

/// Filled ellipses of unit intensity, smoothed by a Gaussian of one pixel
/// standard deviation. Needs a grid of at least 64 x 64.
CoefficientVector make_phantom(GridShape grid);

struct NoisyData {
  Vector values;
  /// Photons per unit of intensity: counts = Poisson(scale * g).
  double scale = 0.0;
  double max_expected_count = 0.0;
  std::size_t clamped_negatives = 0;
};

/// Draws independent Poisson counts with expected total total_photons and
/// returns them divided by the scale, i.e. in the units of g. Negative
/// entries of g are clamped to zero and counted.
NoisyData add_poisson_noise(const Vector& g, double total_photons, std::uint64_t seed);

/// Local maxima in [begin, end) whose topographic prominence is at least
/// rel_prominence times the largest value in the range.
std::vector<Index> significant_peaks(const Vector& profile, Index begin, Index end, double rel_prominence = 0.1);

Vector row_profile(const Vector& image, GridShape grid, Index row);
Vector column_profile(const Vector& image, GridShape grid, Index col);

struct CaseResult {
  ExperimentCase settings;
  SolveResult solve;
  double seconds = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  PhantomLayout layout;
  CoefficientVector phantom;
  Vector clean_data;
  NoisyData noisy;
  double dc_response = 0.0;
  std::vector<CaseResult> cases;
};

using ProgressCallback = std::function<void(const std::string& message)>;

ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressCallback& progress = {});

/// Writes images, grids, profiles, traces and manifest.txt into dir and
/// returns the written paths.
std::vector<std::filesystem::path> write_experiment(const ExperimentResult& result, const std::filesystem::path& dir);

std::string library_version();

}  // namespace slw
