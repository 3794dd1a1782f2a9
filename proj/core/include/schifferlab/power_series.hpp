#pragma once

#include <vector>

#include "schifferlab/numeric.hpp"

namespace schifferlab {

/// Truncated power series sum c[s] t^s, s = 0..order. All arithmetic keeps
/// the truncation order of the longer operand unless stated otherwise.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
  static Series zero(int order) { return Series(std::vector<Complex>(order + 1, Complex(0))); }
  static Series constant(const Complex& v, int order) {
    Series s = zero(order);
    s.c_[0] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex coeff(int s) const { return s < static_cast<int>(c_.size()) ? c_[s] : Complex(0); }
  Complex& at(int s) { return c_[s]; }
  const std::vector<Complex>& coeffs() const { return c_; }

  Series truncated(int order) const;
  Complex eval(const Complex& t) const;

  /// s-th derivative value at t = 0, i.e. s! * c[s].
  Complex derivative_at_zero(int s) const;

  Series derivative() const;

  /// Coefficients of f(lambda * t) * lambda: the density transform under the
  /// chart rescaling t -> lambda t (differentials pick up the Jacobian).
  Series rescale_chart(const Complex& lambda) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Complex& k, const Series& a);

 private:
  std::vector<Complex> c_;
};

/// Reciprocal series via Newton iteration; requires a(0) != 0.
Series series_inverse(const Series& a);

Series series_div(const Series& a, const Series& b);

/// Square root via the Newton/Heron iteration on series. `germ` selects the
/// branch: it must satisfy germ^2 = a(0) and is taken as the constant term.
Series series_sqrt(const Series& a, const Complex& germ);

}  // namespace schifferlab
