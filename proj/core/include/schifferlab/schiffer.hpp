#pragma once

#include <Eigen/Dense>

#include "schifferlab/homology.hpp"

namespace schifferlab {

/// Power series in epsilon of the period matrix and the holomorphic
/// differential data under the rank-one point variation at p0. The series is
/// produced by the triangular order-by-order solve: the order-n matrix
/// coefficient is evaluated from the variation sum with the perturbed local
/// densities known to order n-1, and the densities are then extended to
/// order n through the dual closed forms.
struct SchifferSeries {
  SurfacePoint p0;
  int order = 0;                            // truncation order N in epsilon
  std::vector<Eigen::MatrixXcd> delta_pi;   // [n-1] = coefficient of eps^n
  std::vector<Eigen::MatrixXcd> c_coeffs;   // differential-correction coefficients
  /// f_star[q][j]: epsilon-order-q part of the perturbed density jet of the
  /// j-th normalized differential at p0 (t-series), q = 0..N-1.
  std::vector<std::vector<Series>> f_star;

  /// Pi + sum_n eps^n delta_pi[n-1].
  Eigen::MatrixXcd perturbed_pi(const Eigen::MatrixXcd& pi, double eps) const;
};

/// Exact first-order coefficient: the outer product v v^T with
/// v = (values of the normalized densities at p0). Caller scales by eps.
Eigen::MatrixXcd first_order_update(const std::vector<LocalJet>& normalized_jets_at_p0);

/// Full epsilon-series to order N at an ordinary point p0. Requires local
/// jets to t-order 2N-1; jet_budget overrides the computed budget and must
/// be at least that (error otherwise).
SchifferSeries schiffer_series(const HyperellipticCurve& curve, const PeriodData& period,
                               const SurfacePoint& p0, int N, int jet_budget = -1);

/// Obstruction sums S_i = sum_k d^i f_k/dt^i (p0) * h_k(p) (derivative flag
/// off) or * h'_k(p) (flag on), for i = 0..max_order. f_jets are the
/// normalized density jets at p0; h_jets the dual-form local data at p != p0.
std::vector<Complex> criterion_sum(const std::vector<LocalJet>& f_jets,
                                   const std::vector<LocalJet>& h_jets, bool derivative,
                                   int max_order);

}  // namespace schifferlab
