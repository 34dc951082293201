#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "procrustes/core.hpp"
#include "procrustes/rigid.hpp"

namespace procrustes::cli {

/// Malformed or unreadable input file; the message carries the path and,
/// where it applies, the 1-based line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "%.17g" — up to 17 significant digits, enough to round-trip a double.
std::string format_real(double v);

/// Point file: one point per nonblank line, coordinates separated by commas
/// and/or whitespace, '#' lines ignored. Every line must carry the same
/// number of coordinates.
PointSetd parse_pointset(const std::filesystem::path& path);
void write_pointset(const std::filesystem::path& path, const PointSetd& points,
                    const std::string& comment = "");

/// Motion file: d rotation rows followed by one translation row, same
/// tokenization as point files. Reading validates that the rotation block is
/// orthogonal (tolerance 1e-6) with positive determinant.
RigidMotiond read_rigid_motion(const std::filesystem::path& path);
void write_rigid_motion(const std::filesystem::path& path, const RigidMotiond& motion,
                        const std::string& comment = "");

}  // namespace procrustes::cli
