#include "schifferlab/experiments.hpp"

#include <cmath>
#include <sstream>

namespace schifferlab {

namespace {

std::string char_label(const ThetaChar& c) {
  std::string s;
  for (int v : c.a) s += v ? '1' : '0';
  s += '|';
  for (int v : c.b) s += v ? '1' : '0';
  return s;
}

}  // namespace

Thm42Result run_thm42(const Thm42Options& opts) {
  Rng rng(opts.seed);
  Thm42Result result;
  std::ostringstream csv;
  csv << "curve,point,eps,min_null,argmin\n";

  QuadratureOptions quad;
  quad.tol = opts.quad_tol;

  CorpusOptions corpus;
  corpus.genus = 3;

  for (int ci = 0; ci < opts.curves; ++ci) {
    HyperellipticCurve curve;
    PeriodData period;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 40) throw Error("cli", "thm-4-2: no usable genus-3 curve after 40 draws");
      try {
        curve = random_squarefree_curve(rng, corpus);
        period = period_matrix(curve, quad);
        ThetaHyperellipticReport base = hyperelliptic_theta_test(period.Pi, opts.vanish_threshold);
        if (base.min_even_null < opts.vanish_threshold && base.verdict_hyperelliptic) break;
      } catch (const Error&) {
        continue;  // resample on any certificate failure
      }
    }

    const std::string name = "g3-" + std::to_string(ci);
    for (int pi = 0; pi < opts.points_per_curve; ++pi) {
      Thm42PointRecord record;
      record.curve_name = name;
      for (const Rational& r : curve.exact_coeffs()) record.f_coeffs.push_back(r.to_string());
      for (int attempt = 0;; ++attempt) {
        if (attempt > 60) throw Error("cli", "thm-4-2: generic point sampling exhausted");
        record.p0 = random_ordinary_point(curve, rng);
        try {
          record.experiment = hyperelliptic_breaking_experiment(
              curve, period, record.p0, opts.eps_grid, opts.vanish_threshold);
        } catch (const Error&) {
          continue;
        }
        // Genericity rule: the mid-grid growth must clear the vanishing
        // threshold by a factor of ten, otherwise resample the point.
        double mid_null = 0;
        for (const auto& row : record.experiment.rows)
          if (std::abs(row.eps - 1e-4) < 1e-12) mid_null = row.min_null;
        if (mid_null > 10 * opts.vanish_threshold) break;
      }
      for (const auto& row : record.experiment.rows)
        csv << name << "," << pi << "," << format_double(row.eps) << ","
            << format_double(row.min_null) << "," << char_label(row.argmin) << "\n";
      result.records.push_back(std::move(record));
    }
  }
  result.csv = csv.str();
  return result;
}

Thm55Result run_thm55(const Thm55Options& opts) {
  Rng rng(opts.seed);
  Thm55Result result;
  std::ostringstream csv;
  csv << "instance,eps,rational,best_residual\n";

  QuadratureOptions quad;
  quad.tol = opts.quad_tol;

  CorpusOptions corpus;
  corpus.genus = 2;

  for (int i = 0; i < opts.instances; ++i) {
    Thm55Instance inst;
    inst.curve_name = "g2-" + std::to_string(i);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 60) throw Error("cli", "thm-5-5: instance sampling exhausted");
      try {
        HyperellipticCurve curve = random_squarefree_curve(rng, corpus);
        PeriodData period = period_matrix(curve, quad);
        inst.f_coeffs.clear();
        for (const Rational& r : curve.exact_coeffs()) inst.f_coeffs.push_back(r.to_string());
        inst.p0 = random_ordinary_point(curve, rng);
        inst.p = random_ordinary_point(curve, rng);
        if (std::abs(inst.p.x - inst.p0.x) < 0.1 * curve.scale()) continue;
        inst.m.clear();
        inst.n.clear();
        bool nonzero = false;
        for (int k = 0; k < curve.genus(); ++k) {
          inst.m.push_back(rng.uniform_int(-4, 4));
          inst.n.push_back(rng.uniform_int(-4, 4));
          nonzero = nonzero || inst.m.back() != 0 || inst.n.back() != 0;
        }
        if (!nonzero) inst.m[0] = 1;
        inst.experiment = soliton_breaking_experiment(curve, period, inst.p, inst.p0, inst.m,
                                                      inst.n, opts.eps_grid, opts.tol, opts.bound);
        // Controls: rational at eps = 0, with the verdict flipping on the
        // positive grid. Degenerate draws are resampled.
        if (!inst.experiment.rows.front().rational) continue;
        break;
      } catch (const Error&) {
        continue;
      }
    }
    for (const auto& row : inst.experiment.rows)
      csv << inst.curve_name << "," << format_double(row.eps) << "," << (row.rational ? 1 : 0)
          << "," << format_double(row.best_residual) << "\n";
    result.instances.push_back(std::move(inst));
  }
  result.csv = csv.str();
  return result;
}

}  // namespace schifferlab
