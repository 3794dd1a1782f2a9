#include "schifferlab/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace schifferlab {

std::vector<ThetaChar> all_characteristics(int genus) {
  std::vector<ThetaChar> out;
  const int total = 1 << (2 * genus);
  out.reserve(total);
  for (int mask = 0; mask < total; ++mask) {
    ThetaChar c;
    c.a.resize(genus);
    c.b.resize(genus);
    for (int i = 0; i < genus; ++i) {
      c.a[i] = (mask >> i) & 1;
      c.b[i] = (mask >> (genus + i)) & 1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ThetaChar> even_characteristics(int genus) {
  std::vector<ThetaChar> out;
  for (auto& c : all_characteristics(genus))
    if (c.is_even()) out.push_back(c);
  return out;
}

ThetaConstant theta_null(const Eigen::MatrixXcd& pi, const ThetaChar& chr, double rel_tail,
                         int radius_override) {
  const int g = static_cast<int>(pi.rows());
  if (pi.cols() != g || chr.genus() != g)
    throw Error("theta_tools", "characteristic/period dimension mismatch");
  if ((pi - pi.transpose()).cwiseAbs().maxCoeff() > 1e-8 * std::max(1.0, pi.cwiseAbs().maxCoeff()))
    throw Error("theta_tools", "period matrix is not symmetric");

  Eigen::MatrixXd y = 0.5 * (pi.imag() + pi.imag().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min <= 0) throw Error("theta_tools", "Im Pi is not positive definite");

  double a_norm = 0;
  for (int i = 0; i < g; ++i) a_norm += 0.25 * chr.a[i] * chr.a[i];
  a_norm = std::sqrt(a_norm);

  // Tail over lattice sup-norm shells s >= S:
  //   count(s) <= (2s+1)^g - (2s-1)^g, |term| <= exp(-pi lambda (s - |a|)^2).
  auto tail_from = [&](int s0) {
    double tail = 0;
    for (int s = s0; s < s0 + 400; ++s) {
      const double count = std::pow(2.0 * s + 1, g) - std::pow(2.0 * s - 1, g);
      const double dist = std::max(0.0, s - a_norm);
      const double term = count * std::exp(-std::numbers::pi * lambda_min * dist * dist);
      tail += term;
      if (term < 1e-300) break;
    }
    return tail;
  };

  int radius = radius_override;
  if (radius <= 0) {
    radius = 1;
    while (radius <= 64 && tail_from(radius) > rel_tail) ++radius;
    if (radius > 64)
      throw Error("theta_tools", "truncation radius budget exceeded; Im Pi too ill-conditioned");
  }

  ThetaConstant out;
  out.characteristic = chr;
  out.radius = radius;
  out.tail_bound = tail_from(radius);

  // Deterministic lexicographic box sum over |n_i| <= radius.
  std::vector<int> n(g, -radius);
  Eigen::VectorXd na(g), bb(g);
  for (int i = 0; i < g; ++i) bb(i) = 0.5 * chr.b[i];
  Complex acc(0);
  while (true) {
    for (int i = 0; i < g; ++i) na(i) = n[i] + 0.5 * chr.a[i];
    Complex quad(0);
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) quad += na(i) * pi(i, j) * na(j);
    }
    const Complex phase =
        Complex(0, std::numbers::pi) * quad + Complex(0, 2 * std::numbers::pi) * na.dot(bb);
    acc += std::exp(phase);

    int idx = 0;
    while (idx < g && ++n[idx] > radius) {
      n[idx] = -radius;
      ++idx;
    }
    if (idx == g) break;
  }
  out.value = acc;
  return out;
}

ThetaHyperellipticReport hyperelliptic_theta_test(const Eigen::MatrixXcd& pi,
                                                  double vanish_threshold) {
  const int g = static_cast<int>(pi.rows());
  if (g < 1 || g > 3)
    throw Error("theta_tools", "hyperellipticity scan supports genus 1..3 only");

  ThetaHyperellipticReport report;
  report.genus = g;
  double best = std::numeric_limits<double>::infinity();
  double second = best;
  for (const ThetaChar& c : even_characteristics(g)) {
    const double v = std::abs(theta_null(pi, c).value);
    if (v < vanish_threshold) ++report.vanishing_count;
    if (v < best) {
      second = best;
      best = v;
      report.argmin = c;
    } else if (v < second) {
      second = v;
    }
  }
  report.min_even_null = best;
  report.second_min = second;
  report.verdict_hyperelliptic = (g <= 2) || (report.vanishing_count == 1);
  return report;
}

}  // namespace schifferlab
