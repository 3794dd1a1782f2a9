#pragma once

#include "schifferlab/curve.hpp"
#include "schifferlab/numeric.hpp"

namespace schifferlab {

struct CorpusOptions {
  int genus = 2;
  int coeff_range = 5;                // integer coefficients in [-range, range]
  double min_separation_rel = 0.05;   // relative to the branch-point spread
  double min_chain_clearance_rel = 0.02;
  int max_attempts = 500;
};

/// Seeded random odd-degree squarefree curve with integer coefficients,
/// resampled until the branch points are well separated and the chain
/// segments have clearance. Deterministic for a fixed rng state.
HyperellipticCurve random_squarefree_curve(Rng& rng, const CorpusOptions& opts);

/// Ordinary point away from every branch point (distance at least
/// 0.1 * scale), with a random sheet.
SurfacePoint random_ordinary_point(const HyperellipticCurve& curve, Rng& rng);

}  // namespace schifferlab
