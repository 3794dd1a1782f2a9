#pragma once

#include <cstdint>
#include <string>

#include "schifferlab/corpus.hpp"
#include "schifferlab/ivhs.hpp"
#include "schifferlab/lattice.hpp"

namespace schifferlab {

struct Thm42Options {
  int curves = 5;
  int points_per_curve = 5;
  std::vector<double> eps_grid = {1e-5, 1e-4, 1e-3};
  std::uint64_t seed = 7;
  double vanish_threshold = 1e-8;
  double quad_tol = 1e-12;
};

struct Thm42PointRecord {
  std::string curve_name;
  std::vector<std::string> f_coeffs;
  SurfacePoint p0;
  BreakingExperiment experiment;
};

struct Thm42Result {
  std::vector<Thm42PointRecord> records;
  std::string csv;  // columns: curve, eps, min_null, argmin
};

/// Genus-3 desk experiment: seeded random hyperelliptic curves, seeded
/// generic variation points, first-order period update, minimum even theta
/// null along the eps grid. Points whose eps = 1e-4 growth stays below ten
/// times the vanishing threshold are resampled (non-constructive genericity
/// made operational).
Thm42Result run_thm42(const Thm42Options& opts);

struct Thm55Options {
  int instances = 20;
  std::vector<double> eps_grid = {0.0, 1e-4, 1e-3};
  std::uint64_t seed = 11;
  double tol = 1e-8;
  long long bound = 1000000;
  double quad_tol = 1e-12;
};

struct Thm55Instance {
  std::string curve_name;
  std::vector<std::string> f_coeffs;
  SurfacePoint p0;
  SurfacePoint p;
  std::vector<long long> m, n;
  SolitonExperiment experiment;
};

struct Thm55Result {
  std::vector<Thm55Instance> instances;
  std::string csv;  // columns: instance, eps, rational, best_residual
};

/// Genus-2 desk experiment: synthetic rational tangents, first-order
/// perturbation of tangent and lattice, rationality verdicts along the grid.
Thm55Result run_thm55(const Thm55Options& opts);

}  // namespace schifferlab
