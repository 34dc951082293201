#include "procrustes/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace procrustes::cli {

namespace {

struct NumberTable {
  std::vector<std::vector<double>> rows;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

// Shared reader for point and motion files: skips blank and '#' lines, treats
// commas as separators, and reports the first offending line by number.
NumberTable read_number_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");

  NumberTable table;
  std::string line;
  Eigen::Index width = -1;
  for (long line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    if (start == line.size() || line[start] == '#') continue;

    for (char& c : line)
      if (c == ',') c = ' ';

    std::vector<double> row;
    std::size_t pos = start;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      const std::string token = line.substr(pos, end - pos);
      double value = 0.0;
      const char* first = token.data();
      const char* last = token.data() + token.size();
      // from_chars rejects a leading plus; accept one before a digit or dot
      if (last - first >= 2 && *first == '+' &&
          ((first[1] >= '0' && first[1] <= '9') || first[1] == '.'))
        ++first;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ParseError(path.string() + ": line " + std::to_string(line_no) +
                         ": invalid number '" + token + "'");
      row.push_back(value);
      pos = end;
    }

    if (width < 0) width = static_cast<Eigen::Index>(row.size());
    if (static_cast<Eigen::Index>(row.size()) != width)
      throw ParseError(path.string() + ": line " + std::to_string(line_no) + ": expected " +
                       std::to_string(width) + " values, got " + std::to_string(row.size()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_rows(const std::filesystem::path& path, const Matd& rows, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot open file for writing");
  if (!comment.empty()) out << "# " << comment << "\n";
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
      if (j) out << ' ';
      out << format_real(rows(i, j));
    }
    out << "\n";
  }
  if (!out) throw ParseError(path.string() + ": write failed");
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PointSetd parse_pointset(const std::filesystem::path& path) {
  const NumberTable table = read_number_table(path);
  const Eigen::Index n = static_cast<Eigen::Index>(table.rows.size());
  const Eigen::Index d = n > 0 ? static_cast<Eigen::Index>(table.rows.front().size()) : 0;
  PointSetd points(d, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      points(i, j) = table.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return points;
}

void write_pointset(const std::filesystem::path& path, const PointSetd& points,
                    const std::string& comment) {
  write_rows(path, points.transpose(), comment);
}

RigidMotiond read_rigid_motion(const std::filesystem::path& path) {
  const NumberTable table = read_number_table(path);
  const Eigen::Index rows = static_cast<Eigen::Index>(table.rows.size());
  const Eigen::Index d = rows > 0 ? static_cast<Eigen::Index>(table.rows.front().size()) : 0;
  if (rows != d + 1 || d < 1)
    throw ParseError(path.string() + ": motion file must hold d rotation rows of d values plus one translation row");

  RigidMotiond motion;
  motion.rotation = Matd(d, d);
  motion.translation = Vecd(d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      motion.rotation(i, j) = table.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  for (Eigen::Index j = 0; j < d; ++j)
    motion.translation[j] = table.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];

  if (!is_orthogonal(motion.rotation, 1e-6))
    throw ParseError(path.string() + ": rotation block is not orthogonal");
  if (!(determinant(motion.rotation) > 0))
    throw ParseError(path.string() + ": rotation block is not orientation-preserving");
  return motion;
}

void write_rigid_motion(const std::filesystem::path& path, const RigidMotiond& motion,
                        const std::string& comment) {
  const Eigen::Index d = motion.rotation.rows();
  Matd rows(d + 1, d);
  rows.topRows(d) = motion.rotation;
  rows.row(d) = motion.translation.transpose();
  write_rows(path, rows, comment);
}

}  // namespace procrustes::cli
