#pragma once

#include <vector>

#include "schifferlab/continuation.hpp"
#include "schifferlab/curve.hpp"

namespace schifferlab {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule (cached).
const GaussLegendreRule& gauss_legendre(int n);

/// Integrates fn over [-1,1] against the Chebyshev weight (1-u^2)^{-1/2}
/// with the N-point Gauss-Chebyshev rule: (pi/N) sum fn(cos((2k-1)pi/2N)).
Complex gauss_chebyshev(const std::function<Complex(double)>& fn, int N);

struct SegmentIntegral {
  std::vector<Complex> values;  // integral of x^{j-1} dx / y, j = 1..g
  double error = 0;             // last node-doubling delta (max over j)
  int nodes = 0;
};

struct QuadratureOptions {
  double tol = 1e-12;
  int max_nodes = 1 << 17;
  double clearance = 0.0;  // absolute; 0 disables the clearance error
};

/// Integral between two branch points along the straight segment, on the
/// branch of y fixed by the principal square root of -f/((x-e_a)(x-e_b)) at
/// the segment midpoint. The Chebyshev weight absorbs both endpoint
/// singularities; nodes double until the estimate is stable.
SegmentIntegral branch_segment_integral(const HyperellipticCurve& curve, const Complex& e_a,
                                        const Complex& e_b, const QuadratureOptions& opts);

/// y values on the segment branch near the two endpoints, at distance rho0
/// along the segment. Used to orient cycle crossings at shared vertices.
struct SegmentProbes {
  Complex y_near_a;
  Complex y_near_b;
  Complex y_mid;  // value at the segment midpoint (the branch-defining germ)
};
SegmentProbes branch_segment_probes(const HyperellipticCurve& curve, const Complex& e_a,
                                    const Complex& e_b, double rho0);

struct PathIntegral {
  std::vector<Complex> values;  // integral of x^{j-1} dx / y, j = 1..g
  double error = 0;
  Complex y_end;                // continued branch at the endpoint
};

/// Integral along a polyline of ordinary points, continuing y from the germ
/// (path.front(), y_start). Adaptive Gauss-Legendre panels.
PathIntegral ordinary_path_integral(const HyperellipticCurve& curve,
                                    const std::vector<Complex>& path, const Complex& y_start,
                                    const QuadratureOptions& opts);

/// Integral from a Weierstrass point e to an ordinary point q along the
/// straight segment, with the substitution x = e + (q - e) s^2 absorbing the
/// endpoint singularity. The branch is fixed by the principal square roots
/// of (q - e) and of f'(e); negate the result for the other lift.
PathIntegral branch_to_point_integral(const HyperellipticCurve& curve, int branch_index,
                                      const Complex& q, const QuadratureOptions& opts);

}  // namespace schifferlab
