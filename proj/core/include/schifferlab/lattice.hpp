#pragma once

#include <Eigen/Dense>

#include "schifferlab/homology.hpp"
#include "schifferlab/schiffer.hpp"

namespace schifferlab {

struct LLLResult {
  std::vector<Eigen::VectorXd> basis;               // reduced vectors
  std::vector<std::vector<long long>> transform;    // reduced[i] = sum_k T[i][k] input[k]
};

/// Textbook LLL with Lovasz parameter delta. Gram-Schmidt runs in extended
/// precision so the penalty-weighted embeddings of the rationality test stay
/// stable. Rank is limited to 8 vectors (ambient dimension to 16).
LLLResult lll_reduce(const std::vector<Eigen::VectorXd>& basis, double delta = 0.99);

/// Determinant of the integer transform, computed exactly; +-1 certifies
/// unimodularity.
long long transform_determinant(const std::vector<std::vector<long long>>& t);

/// Real embedding of Z^g + Pi Z^g: 2g generator columns in R^{2g}.
struct LatticeBasis {
  Eigen::MatrixXd generators;
  double scale = 1;  // max generator norm
};
LatticeBasis period_lattice(const Eigen::MatrixXcd& pi);

struct RationalityVerdict {
  bool is_rational = false;
  std::vector<std::vector<long long>> witnesses;  // integer coefficients, primitive
  std::vector<double> residuals;                  // distance of each witness to the line
  double best_residual = 0;                       // smallest residual among candidates
  long long bound = 0;
  double tol = 0;
};

/// Detects period-lattice points on the complex line spanned by U: the
/// lattice is reduced in an embedding that leaves the two along-line
/// coordinates at weight one and scales the orthogonal block by 1/tol, so a
/// lattice point within tol of the line shows up as a short vector. The
/// verdict is positive when a verified witness with coefficients at most
/// `bound` exists; up to two R-independent witnesses are reported.
RationalityVerdict rationality_test(const Eigen::VectorXcd& u, const Eigen::MatrixXcd& pi,
                                    double tol = 1e-8, long long bound = 1000000);

inline RationalityVerdict rationality_test(const Eigen::VectorXcd& u, const PeriodData& period,
                                           double tol = 1e-8, long long bound = 1000000) {
  return rationality_test(u, period.Pi, tol, bound);
}

struct SolitonRow {
  double eps = 0;
  bool rational = false;
  double best_residual = 0;
};

struct SolitonExperiment {
  Eigen::VectorXcd u0;            // synthetic tangent m + Pi n
  Eigen::VectorXcd du;            // first-order tangent update
  std::vector<SolitonRow> rows;
  std::vector<Complex> criterion; // obstruction sums S_0..S_I at (p0, p), flag off
  double criterion_max = 0;
};

/// Perturbs the synthetic rational tangent U0 = m + Pi n and the lattice by
/// the first-order variation at p0 and tracks the rationality verdict along
/// the eps grid. dU_j = f_j(p0) * sum_k f_k(p0) h_k(p).
SolitonExperiment soliton_breaking_experiment(const HyperellipticCurve& curve,
                                              const PeriodData& period, const SurfacePoint& p,
                                              const SurfacePoint& p0,
                                              const std::vector<long long>& m,
                                              const std::vector<long long>& n,
                                              const std::vector<double>& eps_grid,
                                              double tol = 1e-8, long long bound = 1000000);

}  // namespace schifferlab
