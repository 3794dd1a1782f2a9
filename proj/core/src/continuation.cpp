#include "schifferlab/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schifferlab {

Complex SqrtTracker::advance(const Complex& x_next, int depth) {
  if (depth > 48) throw Error("curve_model", "sqrt continuation step collapsed to zero");
  const Complex f_next = f_->eval(x_next);
  const Complex f_here = f_->eval(x_);
  const double scale = std::max(std::abs(f_here), std::abs(f_next));
  if (scale == 0.0) throw Error("curve_model", "sqrt continuation hit a branch point");
  if (std::abs(f_next - f_here) > 0.5 * scale) {
    advance(x_ + 0.5 * (x_next - x_), depth + 1);
    return advance(x_next, depth + 1);
  }
  Complex root = std::sqrt(f_next);
  if (std::abs(root - y_) > std::abs(root + y_)) root = -root;
  x_ = x_next;
  y_ = root;
  return y_;
}

double point_segment_distance(const Complex& p, const Complex& a, const Complex& b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * d.real() + (p.imag() - a.imag()) * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double segment_branch_clearance(const HyperellipticCurve& curve, const Complex& a,
                                const Complex& b) {
  const double endpoint_tol = 1e-12 * std::max(1.0, curve.scale());
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& e : curve.branch_points()) {
    if (std::abs(e - a) < endpoint_tol || std::abs(e - b) < endpoint_tol) continue;
    best = std::min(best, point_segment_distance(e, a, b));
  }
  return best;
}

std::vector<Complex> perturbed_path(const HyperellipticCurve& curve, const Complex& a,
                                    const Complex& b, double clearance, int depth) {
  std::vector<Complex> path{a, b};
  if (depth > 8) return path;
  if (segment_branch_clearance(curve, a, b) >= clearance) return path;

  const Complex d = b - a;
  const double len = std::abs(d);
  if (len == 0.0) return path;
  const Complex normal = Complex(0, 1) * (d / len);
  const double offset = 1e-3 * len;

  // Side rule: pick the offset that maximizes clearance; ties go to +normal.
  const Complex mid = a + 0.5 * d;
  const Complex cand_plus = mid + offset * normal;
  const Complex cand_minus = mid - offset * normal;
  const double cl_plus = std::min(segment_branch_clearance(curve, a, cand_plus),
                                  segment_branch_clearance(curve, cand_plus, b));
  const double cl_minus = std::min(segment_branch_clearance(curve, a, cand_minus),
                                   segment_branch_clearance(curve, cand_minus, b));
  const Complex via = (cl_plus >= cl_minus) ? cand_plus : cand_minus;

  std::vector<Complex> left = perturbed_path(curve, a, via, clearance, depth + 1);
  std::vector<Complex> right = perturbed_path(curve, via, b, clearance, depth + 1);
  left.insert(left.end(), right.begin() + 1, right.end());
  return left;
}

}  // namespace schifferlab
