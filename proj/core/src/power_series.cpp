#include "schifferlab/power_series.hpp"

#include <algorithm>
#include <cmath>

namespace schifferlab {

Series Series::truncated(int order) const {
  std::vector<Complex> out(order + 1, Complex(0));
  for (int s = 0; s <= order && s <= this->order(); ++s) out[s] = c_[s];
  return Series(std::move(out));
}

Complex Series::eval(const Complex& t) const {
  Complex acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex Series::derivative_at_zero(int s) const {
  double fact = 1.0;
  for (int i = 2; i <= s; ++i) fact *= i;
  return fact * coeff(s);
}

Series Series::derivative() const {
  if (c_.size() <= 1) return Series({Complex(0)});
  std::vector<Complex> d(c_.size() - 1);
  for (size_t s = 1; s < c_.size(); ++s) d[s - 1] = static_cast<double>(s) * c_[s];
  return Series(std::move(d));
}

Series Series::rescale_chart(const Complex& lambda) const {
  std::vector<Complex> out(c_.size());
  Complex pow = lambda;  // coefficient s picks up lambda^{s+1}
  for (size_t s = 0; s < c_.size(); ++s) {
    out[s] = c_[s] * pow;
    pow *= lambda;
  }
  return Series(std::move(out));
}

Series operator+(const Series& a, const Series& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> out(n + 1);
  for (int s = 0; s <= n; ++s) out[s] = a.coeff(s) + b.coeff(s);
  return Series(std::move(out));
}

Series operator-(const Series& a, const Series& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> out(n + 1);
  for (int s = 0; s <= n; ++s) out[s] = a.coeff(s) - b.coeff(s);
  return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> out(n + 1, Complex(0));
  for (int i = 0; i <= std::min(n, a.order()); ++i) {
    if (a.coeff(i) == Complex(0)) continue;
    for (int j = 0; j <= n - i && j <= b.order(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  }
  return Series(std::move(out));
}

Series operator*(const Complex& k, const Series& a) {
  std::vector<Complex> out(a.coeffs());
  for (auto& v : out) v *= k;
  return Series(std::move(out));
}

Series series_inverse(const Series& a) {
  if (std::abs(a.coeff(0)) == 0.0)
    throw Error("curve_model", "series inverse requires nonzero constant term");
  const int n = a.order();
  // Newton: x <- x (2 - a x), doubling the number of correct coefficients.
  Series x = Series::constant(1.0 / a.coeff(0), 0);
  int have = 0;
  while (have < n) {
    have = std::min(2 * have + 1, n);
    Series two = Series::constant(2.0, have);
    Series ax = (a.truncated(have) * x.truncated(have)).truncated(have);
    x = (x.truncated(have) * (two - ax)).truncated(have);
  }
  return x.truncated(n);
}

Series series_div(const Series& a, const Series& b) {
  return (a * series_inverse(b.truncated(a.order() > b.order() ? a.order() : b.order())))
      .truncated(std::max(a.order(), b.order()));
}

Series series_sqrt(const Series& a, const Complex& germ) {
  if (std::abs(a.coeff(0)) == 0.0)
    throw Error("curve_model", "series sqrt requires nonzero constant term");
  if (std::abs(germ * germ - a.coeff(0)) > 1e-9 * std::abs(a.coeff(0)))
    throw Error("curve_model", "sqrt germ does not square to the constant term");
  const int n = a.order();
  Series s = Series::constant(germ, 0);
  int have = 0;
  while (have < n) {
    have = std::min(2 * have + 1, n);
    Series at = a.truncated(have);
    Series st = s.truncated(have);
    s = 0.5 * (st + series_div(at, st));
  }
  return s.truncated(n);
}

}  // namespace schifferlab
