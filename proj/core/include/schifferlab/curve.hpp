#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schifferlab/numeric.hpp"
#include "schifferlab/polynomial.hpp"
#include "schifferlab/power_series.hpp"

namespace schifferlab {

/// Point on the double cover y^2 = f(x). Ordinary points carry a sheet tag;
/// Weierstrass points are addressed by branch index (finite roots in the
/// curve's deterministic order) or the infinity marker on odd-degree models.
struct SurfacePoint {
  enum class Kind { Ordinary, Branch, Infinity };

  Kind kind = Kind::Ordinary;
  Complex x{};
  int sheet = +1;        // +1 / -1, meaningful for ordinary points
  int branch_index = -1; // meaningful for branch points

  static SurfacePoint ordinary(const Complex& x, int sheet) {
    return SurfacePoint{Kind::Ordinary, x, sheet, -1};
  }
  static SurfacePoint branch(int index) {
    return SurfacePoint{Kind::Branch, Complex(0), +1, index};
  }
  static SurfacePoint infinity() { return SurfacePoint{Kind::Infinity, Complex(0), +1, -1}; }

  bool same_place(const SurfacePoint& o) const;
};

/// Local chart of a jet: t = x - x0 on a fixed sheet at an ordinary anchor,
/// or tau with x = e + tau^2 at a branch anchor.
enum class Chart { OrdinaryT, BranchTau };

/// Truncated expansion of a differential: its local expression is
/// (sum coeff[s] t^s) dt in the anchor chart.
struct LocalJet {
  SurfacePoint anchor;
  Chart chart = Chart::OrdinaryT;
  Series density;

  int order() const { return density.order(); }
  Complex value() const { return density.coeff(0); }
  /// d^s(density)/dt^s at the anchor = s! * coeff[s].
  Complex derivative(int s) const { return density.derivative_at_zero(s); }
};

struct CurveSpec {
  std::vector<std::string> f_coeffs;  // decimal strings, ascending degree
  std::string name;
};

class HyperellipticCurve {
 public:
  /// Validates the spec, certifies the branch points, computes the genus.
  /// Throws Error("curve_model", ...) for non-squarefree f, degree < 3, or a
  /// malformed coefficient list.
  static HyperellipticCurve from_spec(const CurveSpec& spec);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& exact_coeffs() const { return exact_; }
  const Polynomial& f() const { return f_; }
  const Polynomial& f_derivative() const { return df_; }
  int degree() const { return f_.degree(); }
  int genus() const { return genus_; }
  bool has_infinite_branch() const { return degree() % 2 == 1; }

  /// Finite roots of f in deterministic lexicographic (Re, Im) order.
  const std::vector<Complex>& branch_points() const { return branch_points_; }
  double branch_separation() const { return separation_; }
  double max_root_residual() const { return max_residual_; }
  /// Largest pairwise branch distance; the length scale for clearances.
  double scale() const { return scale_; }

  /// Reference point for the sheet convention: sheet "+" carries the
  /// principal square root of f at this point.
  Complex reference_point() const { return reference_; }

  /// y on the requested sheet at an ordinary x, by continuation of the
  /// reference germ along the (perturbed) straight path from the reference.
  Complex y_on_sheet(const Complex& x, int sheet) const;

  /// Jet of the unnormalized differential x^{j-1} dx / y at the anchor,
  /// truncated at order N. j is 1-based (1 <= j <= genus).
  LocalJet differential_jet(int j, const SurfacePoint& anchor, int N) const;

  /// Jets of all g unnormalized differentials at once (shares the series
  /// inversions).
  std::vector<LocalJet> differential_jets(const SurfacePoint& anchor, int N) const;

  SurfacePoint branch_point_at(int index) const;
  Complex branch_x(int index) const { return branch_points_.at(index); }

  static constexpr int kMaxJetOrder = 128;

 private:
  std::string name_;
  std::vector<Rational> exact_;
  Polynomial f_;
  Polynomial df_;
  int genus_ = 0;
  std::vector<Complex> branch_points_;
  double separation_ = 0;
  double max_residual_ = 0;
  double scale_ = 1;
  Complex reference_;
};

}  // namespace schifferlab
