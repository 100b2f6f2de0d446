#pragma once

// File formats.
//
//   grid  : "SLWFGRID", rows (u32 LE), cols (u32 LE), rows*cols f64 LE,
//           row-major.
//   PGM   : binary P5, maxval 65535, 16-bit big-endian samples, with '#'
//           comment lines after the magic.
//   trace : CSV "iter,objective,discrepancy,penalty,step_norm", LF endings,
//           optionally preceded by '#' comment lines.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "slw/core.hpp"
#include "slw/solver.hpp"

namespace slw {

inline constexpr std::string_view kGridMagic = "SLWFGRID";
inline constexpr std::size_t kGridHeaderBytes = 16;

struct GridData {
  GridShape shape;
  Vector values;
};

std::string encode_grid(const Vector& values, GridShape shape);
GridData decode_grid(std::string_view bytes);

void write_grid(const std::filesystem::path& path, const Vector& values, GridShape shape);
GridData read_grid(const std::filesystem::path& path);

/// Linear gray-level window: low maps to 0, high to 65535, values outside are
/// clamped.
struct PgmWindow {
  double low = 0.0;
  double high = 1.0;
};

/// [min, max] of the values (a unit window around a constant image).
PgmWindow full_range_window(const Vector& values);

std::string encode_pgm(const Vector& values, GridShape shape, PgmWindow window,
                       const std::vector<std::string>& comments = {});
void write_pgm(const std::filesystem::path& path, const Vector& values, GridShape shape, PgmWindow window,
               const std::vector<std::string>& comments = {});

struct PgmImage {
  GridShape shape;
  std::vector<std::uint16_t> samples;
  std::vector<std::string> comments;
};
PgmImage decode_pgm(std::string_view bytes);

/// Row 0 holds the initial point with step norm 0.
std::string encode_trace_csv(const SolveTrace& trace, const std::vector<std::string>& comments = {});
void write_trace_csv(const std::filesystem::path& path, const SolveTrace& trace,
                     const std::vector<std::string>& comments = {});

struct TraceRow {
  int iteration = 0;
  double objective = 0.0;
  double discrepancy = 0.0;
  double penalty = 0.0;
  double step_norm = 0.0;
};
std::vector<TraceRow> decode_trace_csv(std::string_view text);

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double value);

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace slw
