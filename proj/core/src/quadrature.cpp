#include "schifferlab/quadrature.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace schifferlab {

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-angle initial guess.
  for (int k = 0; k < n; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[k] = x;
    rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Polynomial deflate(const Polynomial& p, const Complex& root) {
  // Synthetic division by (x - root); the remainder is discarded (root is a
  // certified root, so it is at rounding level).
  const auto& c = p.coeffs();
  const int n = static_cast<int>(c.size());
  std::vector<Complex> q(n - 1);
  Complex carry = c[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    q[i] = carry;
    carry = c[i] + carry * root;
  }
  return Polynomial(std::move(q));
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

Complex gauss_chebyshev(const std::function<Complex(double)>& fn, int N) {
  Complex acc(0);
  for (int k = 1; k <= N; ++k) acc += fn(std::cos((2 * k - 1) * std::numbers::pi / (2 * N)));
  return acc * (std::numbers::pi / N);
}

namespace {

/// Values of the continued branch V(u) = sqrt(-G(x(u))) at the Chebyshev
/// nodes, continued outward from u = 0 where V is the principal root.
/// x(u) = mid + rho * u with rho = (e_b - e_a)/2.
std::vector<Complex> chebyshev_branch_values(const Polynomial& neg_g, const Complex& mid,
                                             const Complex& rho, int N) {
  std::vector<double> nodes(N);
  for (int k = 1; k <= N; ++k) nodes[k - 1] = std::cos((2 * k - 1) * std::numbers::pi / (2 * N));
  // nodes are decreasing in k: nodes[0] near +1 ... nodes[N-1] near -1.
  std::vector<Complex> values(N);
  const Complex v_mid = std::sqrt(neg_g.eval(mid));
  // Positive side: from u = 0 up through nodes with u > 0 (reverse order).
  {
    SqrtTracker tracker(neg_g, mid, v_mid);
    for (int i = N / 2 - 1; i >= 0; --i) values[i] = tracker.advance(mid + rho * nodes[i]);
  }
  // Negative side.
  {
    SqrtTracker tracker(neg_g, mid, v_mid);
    for (int i = N / 2; i < N; ++i) values[i] = tracker.advance(mid + rho * nodes[i]);
  }
  return values;
}

}  // namespace

SegmentIntegral branch_segment_integral(const HyperellipticCurve& curve, const Complex& e_a,
                                        const Complex& e_b, const QuadratureOptions& opts) {
  if (opts.clearance > 0 && segment_branch_clearance(curve, e_a, e_b) < opts.clearance)
    throw Error("homology_periods", "integration segment passes within clearance of a branch point");

  const int g = curve.genus();
  Polynomial neg_g = deflate(deflate(curve.f(), e_a), e_b);
  {
    auto coeffs = neg_g.coeffs();
    for (auto& c : coeffs) c = -c;
    neg_g = Polynomial(std::move(coeffs));
  }
  const Complex mid = 0.5 * (e_a + e_b);
  const Complex rho = 0.5 * (e_b - e_a);

  SegmentIntegral result;
  result.values.assign(g, Complex(0));
  std::vector<Complex> prev;
  double delta = std::numeric_limits<double>::infinity();
  for (int N = 16; N <= opts.max_nodes; N *= 2) {
    std::vector<double> nodes(N);
    for (int k = 1; k <= N; ++k) nodes[k - 1] = std::cos((2 * k - 1) * std::numbers::pi / (2 * N));
    std::vector<Complex> v = chebyshev_branch_values(neg_g, mid, rho, N);
    std::vector<Complex> sums(g, Complex(0));
    for (int i = 0; i < N; ++i) {
      const Complex x = mid + rho * nodes[i];
      Complex x_pow(1.0);
      const Complex inv_v = 1.0 / v[i];
      for (int j = 0; j < g; ++j) {
        sums[j] += x_pow * inv_v;
        x_pow *= x;
      }
    }
    const double w = std::numbers::pi / N;
    for (auto& s : sums) s *= w;

    if (!prev.empty()) {
      delta = 0;
      for (int j = 0; j < g; ++j) delta = std::max(delta, std::abs(sums[j] - prev[j]));
      if (delta < opts.tol) {
        result.values = sums;
        result.error = delta;
        result.nodes = N;
        return result;
      }
    }
    prev = std::move(sums);
    result.nodes = N;
  }
  throw Error("homology_periods",
              "segment quadrature did not converge within the node budget (last delta " +
                  format_double(delta) + ")");
}

SegmentProbes branch_segment_probes(const HyperellipticCurve& curve, const Complex& e_a,
                                    const Complex& e_b, double rho0) {
  Polynomial neg_g = deflate(deflate(curve.f(), e_a), e_b);
  {
    auto coeffs = neg_g.coeffs();
    for (auto& c : coeffs) c = -c;
    neg_g = Polynomial(std::move(coeffs));
  }
  const Complex mid = 0.5 * (e_a + e_b);
  const Complex rho = 0.5 * (e_b - e_a);
  const double u_cap = 1.0 - rho0 / std::abs(rho);
  if (u_cap <= 0) throw Error("homology_periods", "probe distance exceeds segment length");

  SegmentProbes probes;
  const Complex v_mid = std::sqrt(neg_g.eval(mid));
  probes.y_mid = rho * v_mid;  // sqrt(1-u^2) = 1 at u = 0
  {
    SqrtTracker tracker(neg_g, mid, v_mid);
    const Complex v = tracker.advance(mid + rho * u_cap);
    probes.y_near_b = rho * std::sqrt(1.0 - u_cap * u_cap) * v;
  }
  {
    SqrtTracker tracker(neg_g, mid, v_mid);
    const Complex v = tracker.advance(mid - rho * u_cap);
    probes.y_near_a = rho * std::sqrt(1.0 - u_cap * u_cap) * v;
  }
  return probes;
}

namespace {

struct PanelResult {
  std::vector<Complex> values;
  Complex y_end;
};

/// One Gauss-Legendre panel along the straight leg [a, b], continuing y from
/// the germ at a through the nodes in order.
PanelResult evaluate_panel(const HyperellipticCurve& curve, const Complex& a, const Complex& b,
                           const Complex& y_a, int order) {
  const auto& rule = gauss_legendre(order);
  const int g = curve.genus();
  PanelResult out;
  out.values.assign(g, Complex(0));
  const Complex half = 0.5 * (b - a);
  const Complex mid = 0.5 * (a + b);
  SqrtTracker tracker(curve.f(), a, y_a);
  // Legendre nodes come out in decreasing order; walk them ascending so the
  // continuation marches monotonically from a to b.
  for (int i = static_cast<int>(rule.nodes.size()) - 1; i >= 0; --i) {
    const Complex x = mid + half * rule.nodes[i];
    const Complex y = tracker.advance(x);
    Complex x_pow(1.0);
    for (int j = 0; j < g; ++j) {
      out.values[j] += rule.weights[i] * x_pow / y;
      x_pow *= x;
    }
  }
  for (auto& v : out.values) v *= half;
  out.y_end = tracker.advance(b);
  return out;
}

void integrate_leg(const HyperellipticCurve& curve, const Complex& a, const Complex& b,
                   Complex& y_germ, double tol, int depth, std::vector<Complex>& acc,
                   double& err_acc) {
  PanelResult whole = evaluate_panel(curve, a, b, y_germ, 16);
  const Complex m = 0.5 * (a + b);
  PanelResult left = evaluate_panel(curve, a, m, y_germ, 16);
  PanelResult right = evaluate_panel(curve, m, b, left.y_end, 16);
  double delta = 0;
  for (size_t j = 0; j < acc.size(); ++j)
    delta = std::max(delta, std::abs(whole.values[j] - (left.values[j] + right.values[j])));
  if (delta < tol || depth >= 24) {
    for (size_t j = 0; j < acc.size(); ++j) acc[j] += left.values[j] + right.values[j];
    err_acc += delta;
    y_germ = right.y_end;
    return;
  }
  integrate_leg(curve, a, m, y_germ, tol * 0.5, depth + 1, acc, err_acc);
  integrate_leg(curve, m, b, y_germ, tol * 0.5, depth + 1, acc, err_acc);
}

}  // namespace

PathIntegral ordinary_path_integral(const HyperellipticCurve& curve,
                                    const std::vector<Complex>& path, const Complex& y_start,
                                    const QuadratureOptions& opts) {
  if (path.size() < 2) {
    PathIntegral out;
    out.values.assign(curve.genus(), Complex(0));
    out.y_end = y_start;
    return out;
  }
  PathIntegral out;
  out.values.assign(curve.genus(), Complex(0));
  Complex germ = y_start;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    integrate_leg(curve, path[i], path[i + 1], germ, opts.tol, 0, out.values, out.error);
  out.y_end = germ;
  return out;
}

PathIntegral branch_to_point_integral(const HyperellipticCurve& curve, int branch_index,
                                      const Complex& q, const QuadratureOptions& opts) {
  const Complex e = curve.branch_x(branch_index);
  const int g = curve.genus();
  Polynomial g_e = deflate(curve.f(), e);  // f / (x - e)
  const Complex sqrt_qe = std::sqrt(q - e);
  const Complex w0 = std::sqrt(g_e.eval(e));  // principal sqrt of f'(e)

  // Integrand in s: 2 sqrt(q-e) x(s)^{j-1} / W(s), analytic on [0, 1].
  PathIntegral out;
  out.values.assign(g, Complex(0));

  std::vector<Complex> prev;
  for (int panels = 4; panels <= 4096; panels *= 2) {
    std::vector<Complex> sums(g, Complex(0));
    SqrtTracker tracker(g_e, e, w0);
    Complex w_end(0);
    const auto& rule = gauss_legendre(16);
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double s0 = static_cast<double>(pnl) / panels;
      const double s1 = static_cast<double>(pnl + 1) / panels;
      const double half = 0.5 * (s1 - s0), mid = 0.5 * (s0 + s1);
      for (int i = static_cast<int>(rule.nodes.size()) - 1; i >= 0; --i) {
        const double s = mid + half * rule.nodes[i];
        const Complex x = e + (q - e) * s * s;
        const Complex w = tracker.advance(x);
        Complex x_pow(1.0);
        for (int j = 0; j < g; ++j) {
          sums[j] += rule.weights[i] * half * 2.0 * sqrt_qe * x_pow / w;
          x_pow *= x;
        }
      }
      if (pnl == panels - 1) w_end = tracker.advance(q);
    }
    if (!prev.empty()) {
      double delta = 0;
      for (int j = 0; j < g; ++j) delta = std::max(delta, std::abs(sums[j] - prev[j]));
      if (delta < opts.tol) {
        out.values = sums;
        out.error = delta;
        out.y_end = sqrt_qe * w_end;  // y(q) on the lift the substitution picked
        return out;
      }
    }
    prev = std::move(sums);
  }
  throw Error("abel_jacobi", "branch-anchored segment quadrature did not converge");
}

}  // namespace schifferlab
