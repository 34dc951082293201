#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "procrustes/gen.hpp"
#include "procrustes/io.hpp"
#include "procrustes/report.hpp"
#include "procrustes/svd.hpp"

namespace cli = procrustes::cli;

namespace {

struct AlignArgs {
  std::string p_path, q_path;
  std::string mode = "rigid";
  bool json = false;
};

struct GenArgs {
  int dim = 0;
  long long count = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out_q, out_p, out_truth;
};

struct EvalArgs {
  std::string p_path, q_path, motion_path;
  bool json = false;
};

void run_align(const AlignArgs& args) {
  const auto p = cli::parse_pointset(args.p_path);
  const auto q = cli::parse_pointset(args.q_path);
  const auto mode = args.mode == "rotation" ? cli::AlignMode::rotation : cli::AlignMode::rigid;
  const cli::AlignReport report = cli::align_report(mode, p, q);
  std::cout << (args.json ? cli::to_json(report) : cli::to_text(report));
}

void run_gen(const GenArgs& args) {
  const auto inst = cli::generate_instance(args.dim, args.count, args.noise, args.seed);
  const std::string meta = "procrustes gen d=" + std::to_string(args.dim) +
                           " n=" + std::to_string(args.count) +
                           " noise=" + cli::format_real(args.noise) +
                           " seed=" + std::to_string(args.seed);
  cli::write_pointset(args.out_q, inst.q, meta + " | q points, one per row");
  cli::write_pointset(args.out_p, inst.p, meta + " | p points, one per row");
  cli::write_rigid_motion(args.out_truth, inst.truth,
                          meta + " | truth motion: d rotation rows, then translation");
}

void run_eval(const EvalArgs& args) {
  const auto p = cli::parse_pointset(args.p_path);
  const auto q = cli::parse_pointset(args.q_path);
  const auto motion = cli::read_rigid_motion(args.motion_path);
  const cli::EvalReport report = cli::eval_report(motion, p, q);
  std::cout << (args.json ? cli::to_json(report) : cli::to_text(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigid point-set alignment in d dimensions"};
  app.require_subcommand(1);

  AlignArgs align_args;
  auto* align = app.add_subcommand("align", "Fit the rotation or rigid motion taking q onto p");
  align->add_option("--p", align_args.p_path, "target point file (one point per row)")->required();
  align->add_option("--q", align_args.q_path, "source point file (one point per row)")->required();
  align->add_option("--mode", align_args.mode, "rotation|rigid")
      ->check(CLI::IsMember({"rotation", "rigid"}))
      ->capture_default_str();
  align->add_flag("--json", align_args.json, "emit the report as JSON");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a reproducible synthetic instance");
  gen->add_option("--d", gen_args.dim, "point dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_args.count, "point count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--noise", gen_args.noise, "Gaussian noise sigma")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_args.seed, "64-bit seed")->required();
  gen->add_option("--out-q", gen_args.out_q, "output path for q")->required();
  gen->add_option("--out-p", gen_args.out_p, "output path for p")->required();
  gen->add_option("--out-truth", gen_args.out_truth, "output path for the truth motion")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a stored motion on a point-set pair");
  eval->add_option("--p", eval_args.p_path, "target point file")->required();
  eval->add_option("--q", eval_args.q_path, "source point file")->required();
  eval->add_option("--motion", eval_args.motion_path, "motion file")->required();
  eval->add_flag("--json", eval_args.json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*align)
      run_align(align_args);
    else if (*gen)
      run_gen(gen_args);
    else
      run_eval(eval_args);
  } catch (const procrustes::SvdConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
