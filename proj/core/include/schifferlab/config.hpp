#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schifferlab/numeric.hpp"

namespace schifferlab {

/// Global run configuration. The arithmetic of this build is IEEE double
/// (about 16 significant digits); asking for more is a domain error rather
/// than a silent downgrade.
struct RunConfig {
  int precision_digits = 16;
  double quad_tol = 1e-12;
  double theta_vanish_threshold = 1e-8;
  double hyper_threshold = 1e-8;
  double rationality_tol = 1e-8;
  long long rationality_bound = 1000000;
  double lll_delta = 0.99;
  std::vector<double> eps_grid = {1e-5, 1e-4, 1e-3};
  std::uint64_t seed = 7;
  std::string out_dir = "out";

  void validate() const {
    if (precision_digits < 6 || precision_digits > 17)
      throw Error("cli", "working precision of this build is IEEE double (6..17 digits)");
    if (quad_tol <= 0 || theta_vanish_threshold <= 0 || hyper_threshold <= 0 ||
        rationality_tol <= 0)
      throw Error("cli", "tolerances must be positive");
    if (!(lll_delta > 0.25 && lll_delta < 1.0))
      throw Error("cli", "lll delta must lie in (0.25, 1)");
    for (double e : eps_grid)
      if (e < 0) throw Error("cli", "eps grid entries must be nonnegative");
  }
};

}  // namespace schifferlab
