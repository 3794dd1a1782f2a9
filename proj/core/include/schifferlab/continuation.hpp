#pragma once

#include <functional>
#include <vector>

#include "schifferlab/curve.hpp"
#include "schifferlab/numeric.hpp"

namespace schifferlab {

/// Tracks a branch of sqrt(f(x)) along a path by stepwise continuation.
/// Whenever f changes too much between consecutive points the step is
/// bisected, which guarantees the nearest-square-root choice is the analytic
/// one (the relative move of f stays below 1, so the continued root is closer
/// to the previous value than to its negative).
class SqrtTracker {
 public:
  SqrtTracker(const Polynomial& f, const Complex& x0, const Complex& y0)
      : f_(&f), x_(x0), y_(y0) {}

  const Complex& x() const { return x_; }
  const Complex& y() const { return y_; }

  /// Continue to x_next; returns the branch value there.
  Complex advance(const Complex& x_next, int depth = 0);

 private:
  const Polynomial* f_;
  Complex x_;
  Complex y_;
};

/// Straight path from a to b, detoured when it passes within `clearance` of
/// a branch point that is not one of its own endpoints. The detour offsets
/// the midpoint by 1e-3 * leg length, on the side that moves away from the
/// offending branch point (ties resolved toward +i * direction).
std::vector<Complex> perturbed_path(const HyperellipticCurve& curve, const Complex& a,
                                    const Complex& b, double clearance, int depth = 0);

/// Minimal distance from segment [a, b] to any branch point other than those
/// equal (within tol) to the endpoints.
double segment_branch_clearance(const HyperellipticCurve& curve, const Complex& a,
                                const Complex& b);

double point_segment_distance(const Complex& p, const Complex& a, const Complex& b);

}  // namespace schifferlab
