#include "schifferlab/homology.hpp"

#include <algorithm>
#include <cmath>

namespace schifferlab {

namespace {

using IntMat = std::vector<std::vector<long long>>;

IntMat identity(int n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_op(IntMat& m, int target, int source, long long c) {
  for (size_t k = 0; k < m[target].size(); ++k) m[target][k] -= c * m[source][k];
}

void col_op(IntMat& m, int target, int source, long long c) {
  for (size_t k = 0; k < m.size(); ++k) m[k][target] -= c * m[k][source];
}

void swap_rows_cols(IntMat& m, int i, int j) {
  std::swap(m[i], m[j]);
  for (auto& row : m) std::swap(row[i], row[j]);
}

long long ll_round_div(long long a, long long b) {
  // round-to-nearest integer division
  long long q = a / b, r = a % b;
  if (2 * std::abs(r) > std::abs(b)) q += (a > 0) == (b > 0) ? 1 : -1;
  return q;
}

/// Brings the nonsingular skew-symmetric integer matrix K to the standard
/// symplectic form J (a-rows first) by a unimodular congruence; returns S
/// with S K S^T = J. Requires det K = 1, which holds for the chain loops.
IntMat symplectic_transform(IntMat k_mat) {
  const int n = static_cast<int>(k_mat.size());
  IntMat s = identity(n);

  for (int p = 0; p + 1 < n; p += 2) {
    while (true) {
      // Minimal nonzero pivot in the remaining block.
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = p; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          long long v = std::abs(k_mat[i][j]);
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw Error("homology_periods", "degenerate intersection form");
      if (pi != p) {
        swap_rows_cols(k_mat, pi, p);
        std::swap(s[pi], s[p]);
      }
      if (pj != p + 1) {
        swap_rows_cols(k_mat, pj, p + 1);
        std::swap(s[pj], s[p + 1]);
      }
      const long long d = k_mat[p][p + 1];
      // Reduce the rest of rows p and p+1 modulo the pivot.
      bool clean = true;
      for (int k = p + 2; k < n; ++k) {
        if (k_mat[p][k] != 0) {
          long long c = ll_round_div(k_mat[p][k], d);
          if (c != 0) {
            row_op(k_mat, k, p + 1, c);
            col_op(k_mat, k, p + 1, c);
            row_op(s, k, p + 1, c);
          }
          if (k_mat[p][k] != 0) clean = false;
        }
        if (k_mat[p + 1][k] != 0) {
          long long c = ll_round_div(k_mat[p + 1][k], -d);
          if (c != 0) {
            row_op(k_mat, k, p, c);
            col_op(k_mat, k, p, c);
            row_op(s, k, p, c);
          }
          if (k_mat[p + 1][k] != 0) clean = false;
        }
      }
      if (!clean) continue;  // smaller entries appeared; re-pivot
      if (d < 0) {
        swap_rows_cols(k_mat, p, p + 1);
        std::swap(s[p], s[p + 1]);
      }
      if (k_mat[p][p + 1] != 1)
        throw Error("homology_periods", "intersection form is not unimodular");
      break;
    }
  }

  // Permute interleaved (a_1, b_1, a_2, b_2, ...) to (a_1..a_g, b_1..b_g).
  IntMat out(n);
  const int g = n / 2;
  for (int i = 0; i < g; ++i) {
    out[i] = s[2 * i];
    out[g + i] = s[2 * i + 1];
  }
  return out;
}

int crossing_sign(const HyperellipticCurve& curve, const Complex& e_prev, const Complex& v,
                  const Complex& e_next, const Complex& y_probe_in, const Complex& y_probe_out,
                  double rho0) {
  // Local double-cover coordinate tau at v: x = v + tau^2 and
  // y = tau * sqrt(g_v) with g_v(v) = f'(v). The incoming strand of the loop
  // over (e_prev, v) passes through tau = 0 with tangent -tau_in; the
  // outgoing strand of the loop over (v, e_next) leaves with tangent
  // +tau_out. The crossing sign is the orientation of that frame.
  const Complex dfv = curve.f_derivative().eval(v);
  const Complex c_v = std::sqrt(dfv);
  auto tau_of = [&](const Complex& x_probe, const Complex& y_probe) {
    Complex s = std::sqrt(curve.f().eval(x_probe) / (x_probe - v));
    if (std::abs(s - c_v) > std::abs(s + c_v)) s = -s;
    return y_probe / s;
  };
  const Complex x_in = v + rho0 * (e_prev - v) / std::abs(e_prev - v);
  const Complex x_out = v + rho0 * (e_next - v) / std::abs(e_next - v);
  const Complex tau_in = tau_of(x_in, y_probe_in);
  const Complex tau_out = tau_of(x_out, y_probe_out);
  const Complex t_in = -tau_in / std::abs(tau_in);
  const Complex t_out = tau_out / std::abs(tau_out);
  const double orient = (std::conj(t_in) * t_out).imag();
  // Probe directions carry O(rho0 / edge length) error; the clearance rules
  // keep true crossing angles far above this floor.
  if (std::abs(orient) < 1e-4)
    throw Error("homology_periods", "degenerate crossing angle between chain loops");
  return orient > 0 ? 1 : -1;
}

}  // namespace

CanonicalHomology canonical_homology(const HyperellipticCurve& curve) {
  const int g = curve.genus();
  if (g < 1) throw Error("homology_periods", "genus 0 has no cycles");
  const auto& e = curve.branch_points();
  const int n_loops = 2 * g;

  CanonicalHomology h;
  h.edges.reserve(n_loops);
  for (int k = 0; k < n_loops; ++k) h.edges.push_back(EdgeLoop{k, k + 1});

  // Crossing signs of consecutive loops from sqrt-branch probes near the
  // shared vertex.
  h.sigma.resize(n_loops - 1);
  for (int k = 0; k + 1 < n_loops; ++k) {
    const Complex a = e[k], v = e[k + 1], b = e[k + 2];
    const double rho0 =
        1e-5 * std::min({std::abs(v - a), std::abs(b - v), curve.branch_separation()});
    SegmentProbes left = branch_segment_probes(curve, a, v, rho0);
    SegmentProbes right = branch_segment_probes(curve, v, b, rho0);
    h.sigma[k] = crossing_sign(curve, a, v, b, left.y_near_b, right.y_near_a, rho0);
  }

  IntMat k_mat(n_loops, std::vector<long long>(n_loops, 0));
  for (int k = 0; k + 1 < n_loops; ++k) {
    k_mat[k][k + 1] = h.sigma[k];
    k_mat[k + 1][k] = -h.sigma[k];
  }
  IntMat s = symplectic_transform(k_mat);

  h.cycles.resize(2 * g);
  for (int i = 0; i < g; ++i) {
    h.cycles[i].label = "a" + std::to_string(i + 1);
    h.cycles[g + i].label = "b" + std::to_string(i + 1);
  }
  for (int i = 0; i < 2 * g; ++i)
    h.cycles[i].combo = std::vector<int>(s[i].begin(), s[i].end());
  return h;
}

PeriodData period_matrix(const HyperellipticCurve& curve, const QuadratureOptions& opts) {
  const int g = curve.genus();
  PeriodData pd;
  pd.genus = g;
  pd.homology = canonical_homology(curve);

  QuadratureOptions seg_opts = opts;
  if (seg_opts.clearance <= 0) seg_opts.clearance = 1e-3 * curve.scale();

  const auto& e = curve.branch_points();
  pd.elementary = Eigen::MatrixXcd(2 * g, g);
  double err_sum = 0;
  for (int k = 0; k < 2 * g; ++k) {
    SegmentIntegral seg = branch_segment_integral(curve, e[pd.homology.edges[k].first],
                                                  e[pd.homology.edges[k].second], seg_opts);
    for (int j = 0; j < g; ++j) pd.elementary(k, j) = 2.0 * seg.values[j];
    err_sum += 2.0 * seg.error;
  }
  pd.quadrature_error = err_sum;

  Eigen::MatrixXd s_a(g, 2 * g), s_b(g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int k = 0; k < 2 * g; ++k) {
      s_a(i, k) = pd.homology.cycles[i].combo[k];
      s_b(i, k) = pd.homology.cycles[g + i].combo[k];
    }
  pd.A = (s_a * pd.elementary).transpose();
  pd.B = (s_b * pd.elementary).transpose();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pd.A);
  const double cond = svd.singularValues()(0) / svd.singularValues()(g - 1);
  if (!(cond < 1e12))
    throw Error("homology_periods", "a-period matrix is numerically singular (cond " +
                                        format_double(cond) + ")");
  pd.C = pd.A.inverse();
  pd.Pi = (pd.C * pd.B).transpose();

  pd.symmetry_residual = (pd.Pi - pd.Pi.transpose()).cwiseAbs().maxCoeff();
  const double tol = seg_opts.tol;
  if (pd.symmetry_residual > 100 * tol * std::max(1.0, pd.Pi.cwiseAbs().maxCoeff()))
    throw Error("homology_periods", "period matrix failed the symmetry certificate (residual " +
                                        format_double(pd.symmetry_residual) + ")");

  Eigen::MatrixXd im_pi = pd.Pi.imag();
  im_pi = 0.5 * (im_pi + im_pi.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im_pi);
  pd.im_min_eigenvalue = es.eigenvalues().minCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(im_pi);
  if (llt.info() != Eigen::Success || pd.im_min_eigenvalue <= 0)
    throw Error("homology_periods", "Im Pi is not positive definite (min eigenvalue " +
                                        format_double(pd.im_min_eigenvalue) + ")");

  pd.M = (Complex(0, 2) * im_pi.cast<Complex>()).inverse();

  const double c_norm = pd.C.cwiseAbs().maxCoeff() * g;
  pd.pi_error = c_norm * err_sum * (1.0 + pd.Pi.cwiseAbs().maxCoeff());
  return pd;
}

Complex cycle_integral(const HyperellipticCurve& curve, int j, const Cycle& cycle,
                       const QuadratureOptions& opts) {
  if (j < 1 || j > curve.genus()) throw Error("homology_periods", "basis index out of range");
  QuadratureOptions seg_opts = opts;
  if (seg_opts.clearance <= 0) seg_opts.clearance = 1e-3 * curve.scale();
  const auto& e = curve.branch_points();
  Complex acc(0);
  for (size_t k = 0; k < cycle.combo.size(); ++k) {
    if (cycle.combo[k] == 0) continue;
    SegmentIntegral seg = branch_segment_integral(curve, e[k], e[k + 1], seg_opts);
    acc += 2.0 * static_cast<double>(cycle.combo[k]) * seg.values[j - 1];
  }
  return acc;
}

std::vector<LocalJet> normalized_jets(const HyperellipticCurve& curve, const PeriodData& period,
                                      const SurfacePoint& anchor, int N) {
  std::vector<LocalJet> unnorm = curve.differential_jets(anchor, N);
  const int g = curve.genus();
  std::vector<LocalJet> out(g);
  for (int m = 0; m < g; ++m) {
    Series density = Series::zero(N);
    for (int j = 0; j < g; ++j) density = density + period.C(m, j) * unnorm[j].density;
    out[m].anchor = unnorm[m].anchor;
    out[m].chart = unnorm[m].chart;
    out[m].density = density.truncated(N);
  }
  return out;
}

std::vector<LocalJet> dual_form_local_data(const PeriodData& period,
                                           const std::vector<LocalJet>& normalized) {
  const int g = period.genus;
  if (static_cast<int>(normalized.size()) != g)
    throw Error("homology_periods", "expected one normalized jet per basis differential");
  for (int m = 1; m < g; ++m)
    if (!normalized[m].anchor.same_place(normalized[0].anchor) ||
        normalized[m].chart != normalized[0].chart)
      throw Error("homology_periods", "dual-form jets must share a common anchor");

  const int N = normalized[0].order();
  std::vector<LocalJet> out(g);
  for (int k = 0; k < g; ++k) {
    Series density = Series::zero(N);
    for (int m = 0; m < g; ++m) density = density + period.M(k, m) * normalized[m].density;
    out[k].anchor = normalized[0].anchor;
    out[k].chart = normalized[0].chart;
    out[k].density = density.truncated(N);
  }
  return out;
}

}  // namespace schifferlab
