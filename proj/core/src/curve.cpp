#include "schifferlab/curve.hpp"

#include <algorithm>
#include <cmath>

#include "schifferlab/continuation.hpp"

namespace schifferlab {

bool SurfacePoint::same_place(const SurfacePoint& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Ordinary:
      return x == o.x && sheet == o.sheet;
    case Kind::Branch:
      return branch_index == o.branch_index;
    case Kind::Infinity:
      return true;
  }
  return false;
}

HyperellipticCurve HyperellipticCurve::from_spec(const CurveSpec& spec) {
  HyperellipticCurve c;
  c.name_ = spec.name;
  if (spec.f_coeffs.empty()) throw Error("curve_model", "empty coefficient list");
  for (const auto& s : spec.f_coeffs) c.exact_.push_back(Rational::parse(s));
  while (c.exact_.size() > 1 && c.exact_.back().is_zero()) c.exact_.pop_back();

  const int degree = static_cast<int>(c.exact_.size()) - 1;
  if (degree < 3)
    throw Error("curve_model", "degree " + std::to_string(degree) + " < 3 defines no positive genus");

  std::vector<Complex> coeffs(c.exact_.size());
  for (size_t k = 0; k < c.exact_.size(); ++k) coeffs[k] = Complex(c.exact_[k].to_double(), 0.0);
  c.f_ = Polynomial(coeffs);
  c.df_ = c.f_.derivative();
  c.genus_ = (degree - 1) / 2;

  RootSet roots = find_roots(c.f_);
  c.branch_points_ = roots.roots;
  c.max_residual_ = *std::max_element(roots.residuals.begin(), roots.residuals.end());

  double max_bound = 0;
  for (double b : roots.error_bounds) max_bound = std::max(max_bound, b);
  if (!(roots.min_separation > 10.0 * std::max(max_bound, 1e-300)) ||
      !std::isfinite(roots.min_separation))
    throw Error("curve_model", "f is not squarefree to working precision (root gap " +
                                   format_double(roots.min_separation) + ", error bound " +
                                   format_double(max_bound) + ")");
  c.separation_ = roots.min_separation;

  double scale = 0;
  for (const auto& a : c.branch_points_)
    for (const auto& b : c.branch_points_) scale = std::max(scale, std::abs(a - b));
  c.scale_ = std::max(scale, 1e-3);

  double max_re = c.branch_points_.front().real();
  for (const auto& e : c.branch_points_) max_re = std::max(max_re, e.real());
  c.reference_ = Complex(max_re + 0.75 * c.scale_, 0.0);
  return c;
}

Complex HyperellipticCurve::y_on_sheet(const Complex& x, int sheet) const {
  const Complex f_ref = f_.eval(reference_);
  SqrtTracker tracker(f_, reference_, std::sqrt(f_ref));
  const double clearance = 1e-3 * scale_;
  std::vector<Complex> path = perturbed_path(*this, reference_, x, clearance);
  for (size_t i = 1; i < path.size(); ++i) tracker.advance(path[i]);
  return sheet >= 0 ? tracker.y() : -tracker.y();
}

SurfacePoint HyperellipticCurve::branch_point_at(int index) const {
  if (index < 0 || index >= static_cast<int>(branch_points_.size()))
    throw Error("curve_model", "branch index out of range");
  SurfacePoint p = SurfacePoint::branch(index);
  p.x = branch_points_[index];
  return p;
}

std::vector<LocalJet> HyperellipticCurve::differential_jets(const SurfacePoint& anchor,
                                                            int N) const {
  if (N < 0) throw Error("curve_model", "jet order must be nonnegative");
  if (N > kMaxJetOrder)
    throw Error("curve_model", "jet order " + std::to_string(N) + " exceeds the configured maximum");

  std::vector<LocalJet> jets;
  jets.reserve(genus_);

  if (anchor.kind == SurfacePoint::Kind::Ordinary) {
    const Complex x0 = anchor.x;
    const double near = separation_ * 1e-6;
    for (const Complex& e : branch_points_)
      if (std::abs(x0 - e) < std::max(near, 1e-12))
        throw Error("curve_model",
                    "anchor lies at a zero of y; use the branch chart at a Weierstrass point");
    // f(x0 + t) as a series in t, then y(t) = sqrt on the declared sheet.
    std::vector<Complex> shifted = f_.taylor_shift(x0);
    shifted.resize(std::max<size_t>(shifted.size(), N + 1), Complex(0));
    Series f_series = Series(std::move(shifted)).truncated(N);
    const Complex germ = y_on_sheet(x0, anchor.sheet);
    Series y_series = series_sqrt(f_series, germ);
    Series inv_y = series_inverse(y_series);
    // x(t)^{j-1} accumulates as a polynomial series; dx/dt = 1.
    Series x_power = Series::constant(1.0, N);
    Series x_series = Series::zero(N);
    x_series.at(0) = x0;
    if (N >= 1) x_series.at(1) = 1.0;
    for (int j = 1; j <= genus_; ++j) {
      LocalJet jet;
      jet.anchor = anchor;
      jet.chart = Chart::OrdinaryT;
      jet.density = (x_power * inv_y).truncated(N);
      jets.push_back(std::move(jet));
      if (j < genus_) x_power = (x_power * x_series).truncated(N);
    }
    return jets;
  }

  if (anchor.kind == SurfacePoint::Kind::Branch) {
    const Complex e = branch_points_.at(anchor.branch_index);
    // x = e + tau^2, dx = 2 tau dtau, f(e + u) = u * H(u) with H(0) = f'(e).
    std::vector<Complex> shifted = f_.taylor_shift(e);
    // Drop the (numerically tiny) constant term and divide by u.
    std::vector<Complex> h_u(shifted.begin() + 1, shifted.end());
    if (h_u.empty() || std::abs(h_u[0]) == 0.0)
      throw Error("curve_model", "branch anchor is not a simple root");
    // H as a series in tau: substitute u = tau^2.
    Series h_tau = Series::zero(N);
    for (size_t s = 0; s < h_u.size() && 2 * s <= static_cast<size_t>(N); ++s)
      h_tau.at(2 * s) = h_u[s];
    const Complex germ = std::sqrt(h_tau.coeff(0));  // principal branch at the root
    Series sqrt_h = series_sqrt(h_tau, germ);
    Series inv_sqrt_h = series_inverse(sqrt_h);
    // density_j = 2 (e + tau^2)^{j-1} / sqrt(H(tau^2))
    Series x_series = Series::zero(N);
    x_series.at(0) = e;
    if (N >= 2) x_series.at(2) = 1.0;
    Series x_power = Series::constant(1.0, N);
    for (int j = 1; j <= genus_; ++j) {
      LocalJet jet;
      jet.anchor = anchor;
      jet.chart = Chart::BranchTau;
      jet.density = (2.0 * (x_power * inv_sqrt_h)).truncated(N);
      jets.push_back(std::move(jet));
      if (j < genus_) x_power = (x_power * x_series).truncated(N);
    }
    return jets;
  }

  // Branch point at infinity, odd degree only: x = 1/tau^2 and
  // y = tau^{-d} sqrt(lc * prod(1 - e_k tau^2)); the density of
  // x^{j-1} dx / y is -2 tau^{2(g-j)} / sqrt(lc * prod(1 - e_k tau^2)).
  if (!has_infinite_branch())
    throw Error("curve_model", "even-degree models have no branch point at infinity");
  Series radicand = Series::constant(f_.coeff(degree()), N);
  for (const Complex& e : branch_points_) {
    Series factor = Series::zero(N);
    factor.at(0) = 1.0;
    if (N >= 2) factor.at(2) = -e;
    radicand = (radicand * factor).truncated(N);
  }
  const Complex germ = std::sqrt(radicand.coeff(0));
  Series inv_sqrt = series_inverse(series_sqrt(radicand, germ));
  for (int j = 1; j <= genus_; ++j) {
    LocalJet jet;
    jet.anchor = anchor;
    jet.chart = Chart::BranchTau;
    Series density = Series::zero(N);
    const int shift = 2 * (genus_ - j);
    for (int s = 0; s + shift <= N; ++s) density.at(s + shift) = -2.0 * inv_sqrt.coeff(s);
    jet.density = std::move(density);
    jets.push_back(std::move(jet));
  }
  return jets;
}

LocalJet HyperellipticCurve::differential_jet(int j, const SurfacePoint& anchor, int N) const {
  if (j < 1 || j > genus_) throw Error("curve_model", "basis index out of range");
  return differential_jets(anchor, N)[j - 1];
}

}  // namespace schifferlab
