#pragma once

#include <string>

#include "procrustes/core.hpp"
#include "procrustes/rigid.hpp"
#include "procrustes/solver.hpp"

namespace procrustes::cli {

enum class AlignMode { rotation, rigid };

/// Everything the alignment surfaces: the fitted transform, the headline
/// RMSD, and the raw objective chain (residual, achieved trace, singular
/// values, determinant branch).
struct AlignReport {
  AlignMode mode = AlignMode::rotation;
  Eigen::Index dim = 0;
  Eigen::Index count = 0;
  Matd rotation;
  Vecd translation;  // empty in rotation mode
  double rmsd = 0.0;
  double residual = 0.0;
  double trace_value = 0.0;
  Vecd sigma;
  DetBranch det_branch = DetBranch::positive;
};

struct EvalReport {
  Eigen::Index dim = 0;
  Eigen::Index count = 0;
  double delta = 0.0;
  double rmsd = 0.0;
};

AlignReport align_report(AlignMode mode, const PointSetd& p, const PointSetd& q);
EvalReport eval_report(const RigidMotiond& motion, const PointSetd& p, const PointSetd& q);

std::string to_text(const AlignReport& r);
std::string to_json(const AlignReport& r);
std::string to_text(const EvalReport& r);
std::string to_json(const EvalReport& r);

}  // namespace procrustes::cli
