#include "procrustes/gen.hpp"

namespace procrustes::cli {

SyntheticInstance generate_instance(int dim, Eigen::Index count, double noise_sigma,
                                    oracle::RngSeed seed) {
  if (dim < 1) throw std::invalid_argument("generate_instance: dimension must be at least 1");
  if (count < 1) throw std::invalid_argument("generate_instance: count must be at least 1");
  if (!(noise_sigma >= 0))
    throw std::invalid_argument("generate_instance: noise sigma must be nonnegative");

  oracle::SplitMix64 rng(seed);

  SyntheticInstance inst;
  inst.truth.rotation = oracle::random_rotation(dim, rng);
  inst.truth.translation = Vecd(dim);
  for (Eigen::Index i = 0; i < dim; ++i) inst.truth.translation[i] = rng.next_uniform(-1.0, 1.0);

  inst.q = PointSetd(dim, count);
  for (Eigen::Index j = 0; j < count; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) inst.q(i, j) = rng.next_uniform(-1.0, 1.0);

  inst.p = apply_rigid_motion(inst.truth, inst.q);
  for (Eigen::Index j = 0; j < count; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) inst.p(i, j) += noise_sigma * rng.next_normal();

  return inst;
}

}  // namespace procrustes::cli
