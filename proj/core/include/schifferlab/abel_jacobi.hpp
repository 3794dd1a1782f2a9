#pragma once

#include <Eigen/Dense>

#include "schifferlab/homology.hpp"

namespace schifferlab {

struct PathHints {
  std::vector<Complex> waypoints;  // intermediate ordinary waypoints, in order
  std::vector<int> append_cycles;  // indices into homology cycles, each added once
};

struct AJValue {
  SurfacePoint base;
  SurfacePoint target;
  Eigen::VectorXcd value;  // integrals of the normalized differentials
  bool lattice_reduced = false;
  double quadrature_error = 0;
  bool sheet_fix_applied = false;  // path was closed up through a branch point
};

struct AJJet {
  SurfacePoint anchor;
  Chart chart = Chart::OrdinaryT;
  /// derivatives[n-1] = d^n/dtau^n of the map at the anchor, n = 1..N.
  std::vector<Eigen::VectorXcd> derivatives;
  int order() const { return static_cast<int>(derivatives.size()); }
};

/// Abel-Jacobi integral from p0 to p with normalized differentials, along the
/// perturbed straight path through the hinted waypoints. Branch-point
/// endpoints are handled by the square-root substitution chart; when both
/// endpoints are Weierstrass points the overall sign is fixed only up to the
/// free starting lift.
AJValue abel_jacobi(const HyperellipticCurve& curve, const PeriodData& period,
                    const SurfacePoint& p0, const SurfacePoint& p, const PathHints& hints = {},
                    const QuadratureOptions& opts = {});

/// Derivative jets of the Abel-Jacobi map at the anchor, computed from the
/// normalized differential jets (no quadrature): the order-n derivative of
/// the j-th component equals (n-1)! times the tau^{n-1} jet coefficient.
AJJet aj_jet(const HyperellipticCurve& curve, const PeriodData& period,
             const SurfacePoint& anchor, int N);

struct HyperellipticVerdict {
  bool is_hyperelliptic_at_p = false;
  double residual = 0;  // max-norm of the order-2 jet
};

/// Vanishing test for the second derivative of the Abel-Jacobi map.
HyperellipticVerdict hyperelliptic_test(const HyperellipticCurve& curve, const PeriodData& period,
                                        const SurfacePoint& anchor, double threshold = 1e-8);

/// Real coordinates of v in the period lattice frame (columns 1..g are the
/// unit vectors, columns g+1..2g the columns of Pi).
Eigen::VectorXd lattice_coordinates(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi);

/// Distance from v to the nearest period lattice point.
double lattice_residual(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi);

/// v minus the nearest lattice point.
Eigen::VectorXcd lattice_reduce(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi);

}  // namespace schifferlab
