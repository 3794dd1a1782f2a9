#pragma once

#include <Eigen/Dense>

#include "schifferlab/homology.hpp"
#include "schifferlab/theta.hpp"

namespace schifferlab {

/// Rank-one direction of the period-map differential attached to a point:
/// delta = v v^T in the (omega, conj omega) frames, v the vector of
/// normalized densities, together with its bicanonical projective image.
struct Rank1Direction {
  SurfacePoint point;
  Eigen::VectorXcd v;
  Eigen::MatrixXcd delta;
  Eigen::VectorXcd bicanonical;  // (v_i v_j)_{i <= j}
  double rank_ratio = 0;         // sigma_2 / sigma_1 of delta
};

Rank1Direction schiffer_direction(const HyperellipticCurve& curve, const PeriodData& period,
                                  const SurfacePoint& p);

/// Angle between two complex projective vectors: 0 iff they define the same
/// projective point.
double projective_angle(const Eigen::VectorXcd& u, const Eigen::VectorXcd& w);

struct BreakingRow {
  double eps = 0;
  double min_null = 0;
  ThetaChar argmin;
};

struct BreakingExperiment {
  double min_null_at_zero = 0;
  std::vector<BreakingRow> rows;
  double slope = 0;     // log-log fit of min_null against eps
  bool monotone = false;
};

/// Tracks the smallest even theta null of Pi + eps * delta_pi1 along the eps
/// grid; the first-order update is the exactly specified term of the
/// deformation, so the experiment uses it alone.
BreakingExperiment hyperelliptic_breaking_experiment(const HyperellipticCurve& curve,
                                                     const PeriodData& period,
                                                     const SurfacePoint& p0,
                                                     const std::vector<double>& eps_grid,
                                                     double vanish_threshold = 1e-8);

}  // namespace schifferlab
