#pragma once

#include <vector>

#include "schifferlab/numeric.hpp"

namespace schifferlab {

/// Dense univariate polynomial over C, coefficients in ascending degree.
/// Trailing (leading-degree) zeros are the caller's responsibility.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Complex(0); }

  Complex eval(const Complex& x) const;
  /// Value and first derivative in one Horner pass.
  std::pair<Complex, Complex> eval_with_derivative(const Complex& x) const;
  Polynomial derivative() const;

  /// Coefficients of p(x0 + t) as a polynomial in t (repeated synthetic
  /// division; exact in floating arithmetic up to rounding).
  std::vector<Complex> taylor_shift(const Complex& x0) const;

 private:
  std::vector<Complex> c_;
};

struct RootSet {
  std::vector<Complex> roots;          // refined, lexicographic by (Re, Im)
  std::vector<double> error_bounds;    // first-order Newton bound |p(r)/p'(r)|
  std::vector<double> residuals;       // |p(r)|
  double min_separation = 0.0;         // min pairwise distance
};

/// All roots of p: companion-matrix eigenvalues refined by Newton steps.
/// Throws on degree < 1 or vanishing leading coefficient.
RootSet find_roots(const Polynomial& p);

}  // namespace schifferlab
