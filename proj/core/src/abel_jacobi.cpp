#include "schifferlab/abel_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schifferlab/continuation.hpp"

namespace schifferlab {

namespace {

Eigen::VectorXcd to_vec(const std::vector<Complex>& v) {
  Eigen::VectorXcd out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

/// First hop away from a Weierstrass point: short enough that no other
/// branch point can violate the clearance on it.
Complex branch_hop_target(const HyperellipticCurve& curve, const Complex& e,
                          const Complex& toward) {
  const double d = std::min(0.45 * curve.branch_separation(), 0.5 * std::abs(toward - e));
  return e + d * (toward - e) / std::abs(toward - e);
}

bool sheets_match(const Complex& y_arrived, const Complex& y_declared) {
  return std::abs(y_arrived - y_declared) <= std::abs(y_arrived + y_declared);
}

}  // namespace

AJValue abel_jacobi(const HyperellipticCurve& curve, const PeriodData& period,
                    const SurfacePoint& p0, const SurfacePoint& p, const PathHints& hints,
                    const QuadratureOptions& opts) {
  const int g = curve.genus();
  if (p0.kind == SurfacePoint::Kind::Infinity || p.kind == SurfacePoint::Kind::Infinity)
    throw Error("abel_jacobi", "paths terminating at infinity are not supported");

  AJValue out;
  out.base = p0;
  out.target = p;
  out.value = Eigen::VectorXcd::Zero(g);

  QuadratureOptions path_opts = opts;
  const double clearance = 1e-3 * curve.scale();

  // Accumulated unnormalized integrals.
  Eigen::VectorXcd raw = Eigen::VectorXcd::Zero(g);
  double err = 0;

  const Complex x0 = p0.kind == SurfacePoint::Kind::Branch ? curve.branch_x(p0.branch_index) : p0.x;
  const Complex x1 = p.kind == SurfacePoint::Kind::Branch ? curve.branch_x(p.branch_index) : p.x;

  if (!p0.same_place(p)) {
    // Node list: start, waypoints, end (x-plane projections).
    std::vector<Complex> nodes;
    nodes.push_back(x0);
    for (const Complex& w : hints.waypoints) nodes.push_back(w);
    nodes.push_back(x1);

    // Replace branch endpoints by the hop targets; the hop integrals use the
    // square-root substitution.
    Complex germ_y;
    if (p0.kind == SurfacePoint::Kind::Branch) {
      const Complex hop = branch_hop_target(curve, x0, nodes[1]);
      PathIntegral hop_int = branch_to_point_integral(curve, p0.branch_index, hop, path_opts);
      raw += to_vec(hop_int.values);
      err += hop_int.error;
      germ_y = hop_int.y_end;
      nodes[0] = hop;
    } else {
      germ_y = curve.y_on_sheet(x0, p0.sheet);
    }

    const bool target_branch = (p.kind == SurfacePoint::Kind::Branch);
    Complex final_hop;
    if (target_branch) {
      final_hop = branch_hop_target(curve, x1, nodes[nodes.size() - 2]);
      nodes.back() = final_hop;
    }

    // Ordinary polyline between the (possibly adjusted) nodes.
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      std::vector<Complex> leg = perturbed_path(curve, nodes[i], nodes[i + 1], clearance);
      PathIntegral pi = ordinary_path_integral(curve, leg, germ_y, path_opts);
      raw += to_vec(pi.values);
      err += pi.error;
      germ_y = pi.y_end;
    }

    if (target_branch) {
      PathIntegral hop_int = branch_to_point_integral(curve, p.branch_index, final_hop, path_opts);
      // Reverse hop: from final_hop into the branch point, on the lift that
      // matches the continued germ.
      const double sign = sheets_match(hop_int.y_end, germ_y) ? 1.0 : -1.0;
      raw -= sign * to_vec(hop_int.values);
      err += hop_int.error;
    } else {
      const Complex declared = curve.y_on_sheet(x1, p.sheet);
      if (!sheets_match(germ_y, declared)) {
        if (p0.kind == SurfacePoint::Kind::Branch) {
          // The starting lift is free; the other lift negates everything.
          raw = -raw;
        } else {
          // Close up through the nearest branch point: the loop around it
          // carries the path to the declared sheet.
          int nearest = 0;
          double best = std::numeric_limits<double>::infinity();
          for (int k = 0; k < static_cast<int>(curve.branch_points().size()); ++k) {
            const double d = std::abs(curve.branch_x(k) - x1);
            if (d < best) {
              best = d;
              nearest = k;
            }
          }
          PathIntegral fix = branch_to_point_integral(curve, nearest, x1, path_opts);
          const double s1 = sheets_match(fix.y_end, germ_y) ? 1.0 : -1.0;
          raw += -2.0 * s1 * to_vec(fix.values);
          err += 2.0 * fix.error;
          out.sheet_fix_applied = true;
        }
      }
    }
  }

  // Appended cycles contribute their (cached) elementary periods.
  for (int cycle_index : hints.append_cycles) {
    if (cycle_index < 0 || cycle_index >= static_cast<int>(period.homology.cycles.size()))
      throw Error("abel_jacobi", "cycle index out of range");
    const auto& combo = period.homology.cycles[cycle_index].combo;
    for (size_t k = 0; k < combo.size(); ++k)
      if (combo[k] != 0)
        raw += static_cast<double>(combo[k]) * period.elementary.row(k).transpose();
  }

  // Normalize: value_m = sum_j C(m, j) raw_j.
  out.value = period.C * raw;
  out.quadrature_error = err;
  return out;
}

AJJet aj_jet(const HyperellipticCurve& curve, const PeriodData& period,
             const SurfacePoint& anchor, int N) {
  if (N < 1) throw Error("abel_jacobi", "jet order must be at least 1");
  std::vector<LocalJet> jets = normalized_jets(curve, period, anchor, N - 1);
  AJJet out;
  out.anchor = anchor;
  out.chart = jets.front().chart;
  out.derivatives.resize(N);
  const int g = curve.genus();
  double factorial = 1;
  for (int n = 1; n <= N; ++n) {
    if (n >= 2) factorial *= (n - 1);
    Eigen::VectorXcd d(g);
    for (int j = 0; j < g; ++j) d(j) = factorial * jets[j].density.coeff(n - 1);
    out.derivatives[n - 1] = d;
  }
  return out;
}

HyperellipticVerdict hyperelliptic_test(const HyperellipticCurve& curve, const PeriodData& period,
                                        const SurfacePoint& anchor, double threshold) {
  AJJet jet = aj_jet(curve, period, anchor, 2);
  HyperellipticVerdict v;
  v.residual = jet.derivatives[1].cwiseAbs().maxCoeff();
  v.is_hyperelliptic_at_p = v.residual < threshold;
  return v;
}

Eigen::VectorXd lattice_coordinates(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi) {
  const int g = static_cast<int>(pi.rows());
  Eigen::MatrixXd basis(2 * g, 2 * g);
  basis.setZero();
  for (int i = 0; i < g; ++i) basis(i, i) = 1.0;
  basis.block(0, g, g, g) = pi.real();
  basis.block(g, g, g, g) = pi.imag();
  Eigen::VectorXd rhs(2 * g);
  rhs.head(g) = v.real();
  rhs.tail(g) = v.imag();
  return basis.partialPivLu().solve(rhs);
}

double lattice_residual(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi) {
  return lattice_reduce(v, pi).norm();
}

Eigen::VectorXcd lattice_reduce(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& pi) {
  const int g = static_cast<int>(pi.rows());
  Eigen::VectorXd c = lattice_coordinates(v, pi);
  Eigen::VectorXcd out = v;
  for (int i = 0; i < g; ++i) {
    const double mi = std::round(c(i));
    const double ni = std::round(c(g + i));
    out(i) -= Complex(mi, 0);
    out -= ni * pi.col(i);
  }
  return out;
}

}  // namespace schifferlab
