#pragma once

#include <Eigen/Dense>
#include <vector>

#include "schifferlab/numeric.hpp"

namespace schifferlab {

/// Half-integer characteristic: entries of a and b are 0 or 1 and stand for
/// 0 and 1/2. The convention for the null value is
///   theta[a;b](0, Pi) = sum_n exp(i pi (n+a)' Pi (n+a) + 2 i pi (n+a)' b).
struct ThetaChar {
  std::vector<int> a;
  std::vector<int> b;

  int genus() const { return static_cast<int>(a.size()); }
  /// Even iff 4 a.b = sum a_i b_i is even.
  bool is_even() const {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s % 2 == 0;
  }
  bool operator==(const ThetaChar& o) const { return a == o.a && b == o.b; }
};

struct ThetaConstant {
  ThetaChar characteristic;
  Complex value{};
  double radius = 0;      // lattice truncation radius
  double tail_bound = 0;  // absolute bound on the dropped tail
};

std::vector<ThetaChar> all_characteristics(int genus);
std::vector<ThetaChar> even_characteristics(int genus);

/// Truncated lattice sum with the radius chosen from the Gaussian tail bound
/// of Im Pi so that the dropped tail is below rel_tail (absolute, relative
/// to the unit leading term). radius_override forces a specific radius.
/// Throws if Im Pi is not positive definite or the required radius exceeds
/// the budget.
ThetaConstant theta_null(const Eigen::MatrixXcd& pi, const ThetaChar& chr,
                         double rel_tail = 1e-12, int radius_override = 0);

struct ThetaHyperellipticReport {
  int genus = 0;
  double min_even_null = 0;
  ThetaChar argmin;
  double second_min = 0;
  bool verdict_hyperelliptic = false;  // genus <= 2 is always hyperelliptic
  int vanishing_count = 0;             // even nulls below the threshold
};

/// Scans all even theta nulls. For genus 3 the verdict follows the classical
/// criterion (exactly one vanishing even null); genus 1 and 2 always verdict
/// hyperelliptic and just report the minimum.
ThetaHyperellipticReport hyperelliptic_theta_test(const Eigen::MatrixXcd& pi,
                                                  double vanish_threshold = 1e-8);

}  // namespace schifferlab
