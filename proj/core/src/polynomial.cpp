#include "schifferlab/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace schifferlab {

Complex Polynomial::eval(const Complex& x) const {
  Complex acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(const Complex& x) const {
  Complex p(0), dp(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({Complex(0)});
  std::vector<Complex> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

std::vector<Complex> Polynomial::taylor_shift(const Complex& x0) const {
  // Repeated synthetic division, in place: after pass k, b[k] is the
  // coefficient of t^k in p(x0 + t).
  std::vector<Complex> b = c_;
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k)
    for (int i = n - 2; i >= k; --i) b[i] += x0 * b[i + 1];
  return b;
}

RootSet find_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw Error("curve_model", "root finding needs degree >= 1");
  const Complex lc = p.coeff(d);
  if (std::abs(lc) == 0.0) throw Error("curve_model", "vanishing leading coefficient");

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i) / lc;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error("curve_model", "companion eigenvalue iteration failed");

  RootSet rs;
  rs.roots.resize(d);
  for (int i = 0; i < d; ++i) rs.roots[i] = solver.eigenvalues()(i);

  // Newton polish; eigenvalues of well-separated roots converge in 2-3 steps.
  const Polynomial dp = p.derivative();
  for (auto& r : rs.roots) {
    for (int it = 0; it < 8; ++it) {
      auto [v, dv] = p.eval_with_derivative(r);
      if (std::abs(dv) == 0.0) break;
      Complex step = v / dv;
      r -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
    }
  }

  std::sort(rs.roots.begin(), rs.roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  rs.error_bounds.resize(d);
  rs.residuals.resize(d);
  for (int i = 0; i < d; ++i) {
    auto [v, dv] = p.eval_with_derivative(rs.roots[i]);
    rs.residuals[i] = std::abs(v);
    rs.error_bounds[i] = std::abs(dv) > 0 ? std::abs(v / dv)
                                          : std::numeric_limits<double>::infinity();
  }
  rs.min_separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      rs.min_separation = std::min(rs.min_separation, std::abs(rs.roots[i] - rs.roots[j]));
  return rs;
}

}  // namespace schifferlab
