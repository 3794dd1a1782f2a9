#include "schifferlab/ivhs.hpp"

#include <cmath>

#include "schifferlab/schiffer.hpp"

namespace schifferlab {

Rank1Direction schiffer_direction(const HyperellipticCurve& curve, const PeriodData& period,
                                  const SurfacePoint& p) {
  std::vector<LocalJet> jets = normalized_jets(curve, period, p, 0);
  const int g = curve.genus();
  Rank1Direction dir;
  dir.point = p;
  dir.v = Eigen::VectorXcd(g);
  for (int j = 0; j < g; ++j) dir.v(j) = jets[j].value();
  dir.delta = dir.v * dir.v.transpose();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dir.delta);
  dir.rank_ratio = g > 1 ? svd.singularValues()(1) / svd.singularValues()(0) : 0.0;

  dir.bicanonical = Eigen::VectorXcd(g * (g + 1) / 2);
  int idx = 0;
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) dir.bicanonical(idx++) = dir.v(i) * dir.v(j);
  return dir;
}

double projective_angle(const Eigen::VectorXcd& u, const Eigen::VectorXcd& w) {
  const double nu = u.norm(), nw = w.norm();
  if (nu == 0 || nw == 0) throw Error("ivhs_analysis", "zero vector has no projective class");
  // Eigen's dot is Hermitian (conjugate-linear in the first argument).
  const double c = std::min(1.0, std::abs(u.dot(w)) / (nu * nw));
  return std::acos(c);
}

BreakingExperiment hyperelliptic_breaking_experiment(const HyperellipticCurve& curve,
                                                     const PeriodData& period,
                                                     const SurfacePoint& p0,
                                                     const std::vector<double>& eps_grid,
                                                     double vanish_threshold) {
  ThetaHyperellipticReport base = hyperelliptic_theta_test(period.Pi, vanish_threshold);
  if (!base.verdict_hyperelliptic || base.min_even_null >= vanish_threshold)
    throw Error("ivhs_analysis",
                "base period matrix does not carry the hyperelliptic theta certificate");

  std::vector<LocalJet> jets = normalized_jets(curve, period, p0, 0);
  const Eigen::MatrixXcd update = first_order_update(jets);

  BreakingExperiment exp;
  exp.min_null_at_zero = base.min_even_null;
  exp.rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    const Eigen::MatrixXcd pi_eps = period.Pi + eps * update;
    ThetaHyperellipticReport r = hyperelliptic_theta_test(pi_eps, vanish_threshold);
    exp.rows.push_back(BreakingRow{eps, r.min_even_null, r.argmin});
  }

  // Least-squares slope of log(min_null) on log(eps) over the positive grid.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& row : exp.rows) {
    if (row.eps <= 0 || row.min_null <= 0) continue;
    const double x = std::log(row.eps), y = std::log(row.min_null);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  exp.slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

  exp.monotone = true;
  for (size_t i = 0; i + 1 < exp.rows.size(); ++i)
    if (!(exp.rows[i].min_null < exp.rows[i + 1].min_null)) exp.monotone = false;
  return exp;
}

}  // namespace schifferlab
