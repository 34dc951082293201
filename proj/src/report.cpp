#include "procrustes/report.hpp"

#include <cmath>

#include "procrustes/io.hpp"

namespace procrustes::cli {

namespace {

void require_pair(const PointSetd& p, const PointSetd& q) {
  if (p.rows() != q.rows())
    throw std::invalid_argument("point sets disagree on dimension: " + std::to_string(p.rows()) +
                                " vs " + std::to_string(q.rows()));
  if (p.cols() != q.cols())
    throw std::invalid_argument("point sets disagree on count: " + std::to_string(p.cols()) +
                                " vs " + std::to_string(q.cols()));
  if (p.cols() < 1) throw std::invalid_argument("point sets are empty");
}

const char* branch_name(DetBranch b) {
  return b == DetBranch::positive ? "positive" : "negative";
}

std::string join_reals(const Vecd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_real(v[i]);
  }
  return s;
}

std::string json_real_array(const Vecd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_real(v[i]);
  }
  s += "]";
  return s;
}

}  // namespace

AlignReport align_report(AlignMode mode, const PointSetd& p, const PointSetd& q) {
  require_pair(p, q);
  AlignReport r;
  r.mode = mode;
  r.dim = p.rows();
  r.count = p.cols();
  if (mode == AlignMode::rotation) {
    RotationFitd fit = kabsch_umeyama(p, q);
    r.rotation = std::move(fit.rotation);
    r.residual = fit.residual;
    r.trace_value = fit.trace_value;
    r.sigma = std::move(fit.sigma);
    r.det_branch = fit.det_branch;
  } else {
    RigidFitd fit = fit_rigid_motion(p, q);
    r.rotation = std::move(fit.motion.rotation);
    r.translation = std::move(fit.motion.translation);
    r.residual = fit.delta;
    r.trace_value = fit.rotation_fit.trace_value;
    r.sigma = std::move(fit.rotation_fit.sigma);
    r.det_branch = fit.rotation_fit.det_branch;
  }
  r.rmsd = std::sqrt(r.residual / static_cast<double>(r.count));
  return r;
}

EvalReport eval_report(const RigidMotiond& motion, const PointSetd& p, const PointSetd& q) {
  require_pair(p, q);
  if (motion.rotation.rows() != p.rows())
    throw std::invalid_argument("motion dimension does not match the point sets");
  EvalReport r;
  r.dim = p.rows();
  r.count = p.cols();
  r.delta = rigid_objective(motion, p, q);
  r.rmsd = std::sqrt(r.delta / static_cast<double>(r.count));
  return r;
}

std::string to_text(const AlignReport& r) {
  std::string s;
  s += "mode: ";
  s += (r.mode == AlignMode::rigid ? "rigid" : "rotation");
  s += "\n";
  s += "dim: " + std::to_string(r.dim) + "\n";
  s += "count: " + std::to_string(r.count) + "\n";
  s += "rmsd: " + format_real(r.rmsd) + "\n";
  s += "residual: " + format_real(r.residual) + "\n";
  s += "trace_value: " + format_real(r.trace_value) + "\n";
  s += "sigma: " + join_reals(r.sigma) + "\n";
  s += std::string("det_branch: ") + branch_name(r.det_branch) + "\n";
  s += "rotation:\n";
  for (Eigen::Index i = 0; i < r.rotation.rows(); ++i) {
    s += join_reals(r.rotation.row(i).transpose());
    s += "\n";
  }
  if (r.mode == AlignMode::rigid) s += "translation: " + join_reals(r.translation) + "\n";
  return s;
}

std::string to_json(const AlignReport& r) {
  std::string s = "{\n";
  s += "  \"mode\": \"";
  s += (r.mode == AlignMode::rigid ? "rigid" : "rotation");
  s += "\",\n";
  s += "  \"dim\": " + std::to_string(r.dim) + ",\n";
  s += "  \"count\": " + std::to_string(r.count) + ",\n";
  s += "  \"rotation\": [\n";
  for (Eigen::Index i = 0; i < r.rotation.rows(); ++i) {
    s += "    " + json_real_array(r.rotation.row(i).transpose());
    s += (i + 1 < r.rotation.rows()) ? ",\n" : "\n";
  }
  s += "  ],\n";
  if (r.mode == AlignMode::rigid)
    s += "  \"translation\": " + json_real_array(r.translation) + ",\n";
  s += "  \"rmsd\": " + format_real(r.rmsd) + ",\n";
  s += "  \"residual\": " + format_real(r.residual) + ",\n";
  s += "  \"trace_value\": " + format_real(r.trace_value) + ",\n";
  s += "  \"sigma\": " + json_real_array(r.sigma) + ",\n";
  s += std::string("  \"det_branch\": \"") + branch_name(r.det_branch) + "\"\n";
  s += "}\n";
  return s;
}

std::string to_text(const EvalReport& r) {
  std::string s;
  s += "dim: " + std::to_string(r.dim) + "\n";
  s += "count: " + std::to_string(r.count) + "\n";
  s += "delta: " + format_real(r.delta) + "\n";
  s += "rmsd: " + format_real(r.rmsd) + "\n";
  return s;
}

std::string to_json(const EvalReport& r) {
  std::string s = "{\n";
  s += "  \"dim\": " + std::to_string(r.dim) + ",\n";
  s += "  \"count\": " + std::to_string(r.count) + ",\n";
  s += "  \"delta\": " + format_real(r.delta) + ",\n";
  s += "  \"rmsd\": " + format_real(r.rmsd) + "\n";
  s += "}\n";
  return s;
}

}  // namespace procrustes::cli
