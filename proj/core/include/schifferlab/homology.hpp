#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "schifferlab/curve.hpp"
#include "schifferlab/quadrature.hpp"

namespace schifferlab {

/// Elementary loop around a consecutive pair of branch points: the lift of
/// the straight segment traversed on both square-root branches.
struct EdgeLoop {
  int first = 0;   // branch point indices in the curve's deterministic order
  int second = 0;
};

/// Homology class as an integer combination of the elementary loops, with
/// its canonical label a_1..a_g / b_1..b_g.
struct Cycle {
  std::string label;
  std::vector<int> combo;
};

struct CanonicalHomology {
  std::vector<EdgeLoop> edges;  // the 2g chain loops
  std::vector<int> sigma;       // crossing signs of consecutive loops
  std::vector<Cycle> cycles;    // a_1..a_g then b_1..b_g
};

/// Chain homology basis with the standard hyperelliptic pairing. Canonicity
/// is certified a posteriori by the symmetry and positivity checks in
/// period_matrix. Throws for genus 0.
CanonicalHomology canonical_homology(const HyperellipticCurve& curve);

struct PeriodData {
  int genus = 0;
  CanonicalHomology homology;
  Eigen::MatrixXcd elementary;  // (2g) x g: elementary loop periods of x^{j-1}dx/y
  Eigen::MatrixXcd A;           // A(i,j) = integral of x^{i}dx/y basis i+1 over a_{j+1}
  Eigen::MatrixXcd B;           // same over b-cycles
  Eigen::MatrixXcd C;           // A^{-1}: normalization matrix
  Eigen::MatrixXcd Pi;          // Pi(i,j) = integral of normalized omega_j over b_i
  Eigen::MatrixXcd M;           // (2i Im Pi)^{-1}: dual-basis matrix
  double quadrature_error = 0;  // summed per-segment refinement deltas
  double pi_error = 0;          // propagated estimate for entries of Pi
  double symmetry_residual = 0;
  double im_min_eigenvalue = 0;
};

/// Full period computation with all certificates checked: a-normalization,
/// symmetry of Pi within 100x the quadrature tolerance, Im Pi positive
/// definite (Cholesky). Throws Error("homology_periods", ...) otherwise.
PeriodData period_matrix(const HyperellipticCurve& curve, const QuadratureOptions& opts = {});

/// Contour integral of the unnormalized differential x^{j-1} dx / y over the
/// cycle (j is 1-based).
Complex cycle_integral(const HyperellipticCurve& curve, int j, const Cycle& cycle,
                       const QuadratureOptions& opts = {});

/// Jets of the normalized differentials omega_1..omega_g at the anchor.
std::vector<LocalJet> normalized_jets(const HyperellipticCurve& curve, const PeriodData& period,
                                      const SurfacePoint& anchor, int N);

/// Local holomorphic data of the dual closed forms: the jet of h_k is
/// sum_m M(k,m) * (jet of omega_m). The anti-holomorphic part of the
/// harmonic representative contributes nothing to pure t-derivatives.
std::vector<LocalJet> dual_form_local_data(const PeriodData& period,
                                           const std::vector<LocalJet>& normalized);

}  // namespace schifferlab
