#include "schifferlab/corpus.hpp"

#include <cmath>

#include "schifferlab/continuation.hpp"

namespace schifferlab {

HyperellipticCurve random_squarefree_curve(Rng& rng, const CorpusOptions& opts) {
  if (opts.genus < 1) throw Error("cli", "corpus genus must be at least 1");
  const int degree = 2 * opts.genus + 1;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    CurveSpec spec;
    spec.name = "random-g" + std::to_string(opts.genus);
    spec.f_coeffs.resize(degree + 1);
    for (int k = 0; k <= degree; ++k) {
      long long c = rng.uniform_int(-opts.coeff_range, opts.coeff_range);
      if (k == degree && c == 0) c = 1 + rng.uniform_int(0, opts.coeff_range - 1);
      spec.f_coeffs[k] = std::to_string(c);
    }
    HyperellipticCurve curve;
    try {
      curve = HyperellipticCurve::from_spec(spec);
    } catch (const Error&) {
      continue;  // non-squarefree or degenerate draw
    }
    if (curve.branch_separation() < opts.min_separation_rel * curve.scale()) continue;

    // Chain segments must clear the other branch points, or the period
    // quadrature stalls.
    const auto& e = curve.branch_points();
    bool clear = true;
    for (size_t k = 0; k + 1 < e.size(); ++k)
      if (segment_branch_clearance(curve, e[k], e[k + 1]) <
          opts.min_chain_clearance_rel * curve.scale())
        clear = false;
    if (!clear) continue;
    return curve;
  }
  throw Error("cli", "corpus sampler exhausted its attempts");
}

SurfacePoint random_ordinary_point(const HyperellipticCurve& curve, Rng& rng) {
  Complex centroid(0);
  for (const Complex& e : curve.branch_points()) centroid += e;
  centroid /= static_cast<double>(curve.branch_points().size());

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Complex x = centroid + rng.uniform_complex(0.9 * curve.scale());
    bool ok = true;
    for (const Complex& e : curve.branch_points())
      if (std::abs(x - e) < 0.1 * curve.scale()) ok = false;
    if (!ok) continue;
    const int sheet = rng.uniform_int(0, 1) == 0 ? +1 : -1;
    return SurfacePoint::ordinary(x, sheet);
  }
  throw Error("cli", "point sampler exhausted its attempts");
}

}  // namespace schifferlab
