#pragma once

// Flat key=value configuration (UTF-8, '#' starts a comment) and the
// experiment configuration built from it.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slw/core.hpp"

namespace slw {

using KeyValues = std::map<std::string, std::string>;

/// One `key = value` per line; blank lines and '#' comments are skipped.
/// Later keys override earlier ones.
KeyValues parse_key_values(std::string_view text);
KeyValues read_key_value_file(const std::filesystem::path& path);

/// "256" or "256x128" (rows x cols).
GridShape parse_grid_shape(std::string_view text);
bool parse_bool(std::string_view text);

struct ExperimentCase {
  double p = 1.0;
  double mu = 0.001;
  bool project_nonnegative = false;

  /// "p1_mu0.001", "p2_mu0.0001_nonneg", ...
  std::string name() const;
  friend bool operator==(const ExperimentCase&, const ExperimentCase&) = default;
};

/// Parses "p:mu" or "p:mu:nonneg", comma-separated.
std::vector<ExperimentCase> parse_cases(std::string_view text);

struct ExperimentConfig {
  GridShape grid{256, 256};
  GridShape pad{512, 512};
  double filter_radius_fraction = 0.1;
  double total_photons = 10000.0;
  std::vector<ExperimentCase> cases{{1.0, 0.001, false}, {1.0, 0.001, true}, {2.0, 0.0001, false}, {2.0, 0.0001, true}};
  int iterations = 2000;
  std::uint64_t seed = 20040101;
  std::string output_dir = "experiment_out";
  /// Also render reconstructions with a -2%..+2% window of the phantom peak.
  bool narrow_window = true;

  void validate() const;
  /// Sorted key=value lines describing everything that affects the outputs.
  std::string canonical() const;
  /// FNV-1a of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Keys: grid, pad, filter_radius_fraction, photons, iterations, seed,
/// output, narrow_window, cases, and the single-case shorthand p / mu /
/// project_nonnegative (which replaces the case list).
ExperimentConfig experiment_config_from(const KeyValues& values, ExperimentConfig base = {});

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace slw
