#include "schifferlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

namespace schifferlab {

namespace {

using LD = long double;

struct LLLState {
  int n = 0;  // number of vectors
  int m = 0;  // ambient dimension
  std::vector<std::vector<LD>> b;
  std::vector<std::vector<long long>> t;

  std::vector<std::vector<LD>> mu;
  std::vector<LD> bstar_norm2;

  void gram_schmidt() {
    std::vector<std::vector<LD>> bstar(n, std::vector<LD>(m, 0));
    mu.assign(n, std::vector<LD>(n, 0));
    bstar_norm2.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      bstar[i] = b[i];
      for (int j = 0; j < i; ++j) {
        LD dot = 0;
        for (int k = 0; k < m; ++k) dot += b[i][k] * bstar[j][k];
        mu[i][j] = bstar_norm2[j] > 0 ? dot / bstar_norm2[j] : 0;
        for (int k = 0; k < m; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      LD nrm = 0;
      for (int k = 0; k < m; ++k) nrm += bstar[i][k] * bstar[i][k];
      bstar_norm2[i] = nrm;
    }
  }
};

}  // namespace

LLLResult lll_reduce(const std::vector<Eigen::VectorXd>& basis, double delta) {
  const int n = static_cast<int>(basis.size());
  if (n < 2 || n > 8)
    throw Error("soliton_check", "lll_reduce supports 2..8 basis vectors, got " +
                                     std::to_string(n));
  if (!(delta > 0.25 && delta < 1.0))
    throw Error("soliton_check", "Lovasz parameter must lie in (0.25, 1)");
  const int m = static_cast<int>(basis[0].size());
  if (m > 16) throw Error("soliton_check", "ambient dimension capped at 16");

  LLLState st;
  st.n = n;
  st.m = m;
  st.b.assign(n, std::vector<LD>(m, 0));
  st.t.assign(n, std::vector<long long>(n, 0));
  double scale = 0;
  for (int i = 0; i < n; ++i) {
    if (basis[i].size() != m) throw Error("soliton_check", "ragged basis");
    for (int k = 0; k < m; ++k) st.b[i][k] = basis[i](k);
    st.t[i][i] = 1;
    scale = std::max(scale, basis[i].norm());
  }
  if (scale == 0) throw Error("soliton_check", "degenerate input basis");

  st.gram_schmidt();
  for (int i = 0; i < n; ++i)
    if (st.bstar_norm2[i] < 1e-24L * scale * scale)
      throw Error("soliton_check", "degenerate input basis");

  auto size_reduce = [&](int k, int j) {
    const long long c = static_cast<long long>(std::llroundl(st.mu[k][j]));
    if (c == 0) return false;
    for (int idx = 0; idx < m; ++idx) st.b[k][idx] -= static_cast<LD>(c) * st.b[j][idx];
    for (int idx = 0; idx < n; ++idx) st.t[k][idx] -= c * st.t[j][idx];
    return true;
  };

  int k = 1;
  long long guard = 0;
  while (k < n) {
    if (++guard > 2000000) throw Error("soliton_check", "lll failed to terminate");
    st.gram_schmidt();
    bool changed = false;
    for (int j = k - 1; j >= 0; --j) changed |= size_reduce(k, j);
    if (changed) st.gram_schmidt();
    if (st.bstar_norm2[k] >=
        (static_cast<LD>(delta) - st.mu[k][k - 1] * st.mu[k][k - 1]) * st.bstar_norm2[k - 1]) {
      ++k;
    } else {
      std::swap(st.b[k], st.b[k - 1]);
      std::swap(st.t[k], st.t[k - 1]);
      k = std::max(k - 1, 1);
    }
  }

  LLLResult out;
  out.basis.resize(n);
  for (int i = 0; i < n; ++i) {
    out.basis[i] = Eigen::VectorXd(m);
    for (int idx = 0; idx < m; ++idx) out.basis[i](idx) = static_cast<double>(st.b[i][idx]);
  }
  out.transform = st.t;
  return out;
}

long long transform_determinant(const std::vector<std::vector<long long>>& t) {
  // Bareiss fraction-free elimination in 128-bit.
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = t[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * static_cast<long long>(a[n - 1][n - 1]);
}

LatticeBasis period_lattice(const Eigen::MatrixXcd& pi) {
  const int g = static_cast<int>(pi.rows());
  LatticeBasis lb;
  lb.generators = Eigen::MatrixXd::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) lb.generators(i, i) = 1.0;
  lb.generators.block(0, g, g, g) = pi.real();
  lb.generators.block(g, g, g, g) = pi.imag();
  lb.scale = 0;
  for (int c = 0; c < 2 * g; ++c) lb.scale = std::max(lb.scale, lb.generators.col(c).norm());
  // Linear independence over R (Gram determinant after scaling).
  Eigen::MatrixXd gram = lb.generators.transpose() * lb.generators / (lb.scale * lb.scale);
  if (std::abs(gram.determinant()) < 1e-12)
    throw Error("soliton_check", "period lattice generators are numerically dependent");
  return lb;
}

namespace {

std::vector<long long> primitive_form(std::vector<long long> c) {
  long long g = 0;
  for (long long v : c) g = std::gcd(g, std::llabs(v));
  if (g > 1)
    for (auto& v : c) v /= g;
  for (long long v : c) {
    if (v > 0) break;
    if (v < 0) {
      for (auto& w : c) w = -w;
      break;
    }
  }
  return c;
}

}  // namespace

RationalityVerdict rationality_test(const Eigen::VectorXcd& u, const Eigen::MatrixXcd& pi,
                                    double tol, long long bound) {
  const int g = static_cast<int>(pi.rows());
  if (u.size() != g) throw Error("soliton_check", "tangent vector dimension mismatch");
  if (u.norm() == 0) throw Error("soliton_check", "tangent vector must be nonzero");

  RationalityVerdict verdict;
  verdict.bound = bound;
  verdict.tol = tol;

  if (g == 1) {
    // The complex line of any nonzero tangent is all of C; the lattice meets
    // it in the full rank-2 group, witnessed by 1 and Pi.
    verdict.is_rational = true;
    verdict.witnesses = {{1, 0}, {0, 1}};
    verdict.residuals = {0.0, 0.0};
    verdict.best_residual = 0.0;
    return verdict;
  }

  LatticeBasis lattice = period_lattice(pi);
  const int dim = 2 * g;

  // Orthonormal frame: first two columns span the real image of the complex
  // line (u and iu), the rest its orthogonal complement.
  Eigen::MatrixXd frame(dim, 2);
  for (int i = 0; i < g; ++i) {
    frame(i, 0) = u(i).real();
    frame(g + i, 0) = u(i).imag();
    frame(i, 1) = -u(i).imag();
    frame(g + i, 1) = u(i).real();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(frame);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd q_par = q.leftCols(2);
  Eigen::MatrixXd q_perp = q.rightCols(dim - 2);

  // Penalty embedding: along-line coordinates at weight 1, orthogonal block
  // scaled by 1/tol. The typical lattice scale normalizes the weights.
  const double penalty = 1.0 / tol;
  std::vector<Eigen::VectorXd> embedded(dim);
  for (int c = 0; c < dim; ++c) {
    Eigen::VectorXd v = lattice.generators.col(c) / lattice.scale;
    Eigen::VectorXd w(dim);
    w.head(2) = q_par.transpose() * v;
    w.tail(dim - 2) = penalty * (q_perp.transpose() * v);
    embedded[c] = w;
  }

  LLLResult red = lll_reduce(embedded, 0.99);

  // Candidate coefficient vectors: reduced rows plus small combinations of
  // the two shortest ones.
  std::vector<std::vector<long long>> candidates = red.transform;
  std::vector<int> order(red.basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return red.basis[a].norm() < red.basis[b].norm();
  });
  for (int da = -2; da <= 2; ++da)
    for (int db = -2; db <= 2; ++db) {
      if (da == 0 && db == 0) continue;
      std::vector<long long> combo(dim, 0);
      for (int k = 0; k < dim; ++k)
        combo[k] = da * red.transform[order[0]][k] + db * red.transform[order[1]][k];
      candidates.push_back(std::move(combo));
    }

  std::set<std::vector<long long>> seen;
  struct Hit {
    std::vector<long long> c;
    double residual;
    Complex along;  // parallel component as a complex number
  };
  std::vector<Hit> verified;
  verdict.best_residual = std::numeric_limits<double>::infinity();

  for (auto& cand : candidates) {
    std::vector<long long> c = primitive_form(cand);
    bool zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
    if (zero || !seen.insert(c).second) continue;
    long long maxc = 0;
    for (long long v : c) maxc = std::max(maxc, std::llabs(v));
    if (maxc > bound) continue;

    Eigen::VectorXd point = Eigen::VectorXd::Zero(dim);
    for (int k = 0; k < dim; ++k) point += static_cast<double>(c[k]) * lattice.generators.col(k);
    const Eigen::VectorXd par = q_par.transpose() * point;
    const double residual = (q_perp.transpose() * point).norm();
    verdict.best_residual = std::min(verdict.best_residual, residual);
    if (residual <= tol && par.norm() > 10 * residual)
      verified.push_back(Hit{std::move(c), residual, Complex(par(0), par(1))});
  }

  std::sort(verified.begin(), verified.end(),
            [](const Hit& a, const Hit& b) { return a.residual < b.residual; });

  for (const Hit& h : verified) {
    if (verdict.witnesses.empty()) {
      verdict.witnesses.push_back(h.c);
      verdict.residuals.push_back(h.residual);
      continue;
    }
    if (verdict.witnesses.size() == 1) {
      const Complex z1(verified.front().along);
      const Complex z2(h.along);
      if (std::abs(std::imag(std::conj(z1) * z2)) > 1e-6 * std::abs(z1) * std::abs(z2)) {
        verdict.witnesses.push_back(h.c);
        verdict.residuals.push_back(h.residual);
        break;
      }
    }
  }
  verdict.is_rational = !verdict.witnesses.empty();
  if (!std::isfinite(verdict.best_residual)) verdict.best_residual = lattice.scale;
  return verdict;
}

SolitonExperiment soliton_breaking_experiment(const HyperellipticCurve& curve,
                                              const PeriodData& period, const SurfacePoint& p,
                                              const SurfacePoint& p0,
                                              const std::vector<long long>& m,
                                              const std::vector<long long>& n,
                                              const std::vector<double>& eps_grid, double tol,
                                              long long bound) {
  const int g = curve.genus();
  if (static_cast<int>(m.size()) != g || static_cast<int>(n.size()) != g)
    throw Error("soliton_check", "integer vectors must have length g");
  if (p.same_place(p0))
    throw Error("soliton_check", "tangency point and variation point must differ");

  SolitonExperiment exp;
  exp.u0 = Eigen::VectorXcd::Zero(g);
  for (int i = 0; i < g; ++i) {
    exp.u0(i) += Complex(static_cast<double>(m[i]), 0);
    for (int j = 0; j < g; ++j) exp.u0(i) += static_cast<double>(n[j]) * period.Pi(i, j);
  }
  if (exp.u0.norm() < 1e-12)
    throw Error("soliton_check", "degenerate synthetic construction: zero tangent");

  // First-order data at (p0, p).
  const int jet_order = 6;
  std::vector<LocalJet> f_jets = normalized_jets(curve, period, p0, jet_order);
  std::vector<LocalJet> p_jets = normalized_jets(curve, period, p, 1);
  std::vector<LocalJet> h_jets = dual_form_local_data(period, p_jets);
  exp.criterion = criterion_sum(f_jets, h_jets, /*derivative=*/false, jet_order);
  exp.criterion_max = 0;
  for (const Complex& s : exp.criterion)
    exp.criterion_max = std::max(exp.criterion_max, std::abs(s));

  const Complex s0 = exp.criterion[0];
  exp.du = Eigen::VectorXcd(g);
  for (int j = 0; j < g; ++j) exp.du(j) = f_jets[j].value() * s0;
  if (exp.du.norm() < 1e-12)
    throw Error("soliton_check", "degenerate synthetic construction: vanishing tangent update");

  const Eigen::MatrixXcd update = first_order_update(normalized_jets(curve, period, p0, 0));
  for (double eps : eps_grid) {
    const Eigen::MatrixXcd pi_eps = period.Pi + eps * update;
    const Eigen::VectorXcd u_eps = exp.u0 + eps * exp.du;
    RationalityVerdict v = rationality_test(u_eps, pi_eps, tol, bound);
    exp.rows.push_back(SolitonRow{eps, v.is_rational, v.best_residual});
  }
  return exp;
}

}  // namespace schifferlab
