#include "schifferlab/schiffer.hpp"

#include <cmath>

namespace schifferlab {

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

Eigen::MatrixXcd SchifferSeries::perturbed_pi(const Eigen::MatrixXcd& pi, double eps) const {
  Eigen::MatrixXcd out = pi;
  double pw = 1;
  for (int n = 1; n <= order; ++n) {
    pw *= eps;
    out += pw * delta_pi[n - 1];
  }
  return out;
}

Eigen::MatrixXcd first_order_update(const std::vector<LocalJet>& normalized_jets_at_p0) {
  const int g = static_cast<int>(normalized_jets_at_p0.size());
  Eigen::VectorXcd v(g);
  for (int j = 0; j < g; ++j) v(j) = normalized_jets_at_p0[j].value();
  return v * v.transpose();
}

SchifferSeries schiffer_series(const HyperellipticCurve& curve, const PeriodData& period,
                               const SurfacePoint& p0, int N, int jet_budget) {
  if (p0.kind != SurfacePoint::Kind::Ordinary)
    throw Error("schiffer_engine", "variation point must be an ordinary point in this version");
  if (N < 1) throw Error("schiffer_engine", "epsilon order must be at least 1");
  const int needed = 2 * N - 1;
  if (jet_budget < 0) jet_budget = needed;
  if (jet_budget < needed)
    throw Error("schiffer_engine", "insufficient jet budget: need t-order " +
                                       std::to_string(needed) + ", got " +
                                       std::to_string(jet_budget));

  const int g = curve.genus();
  std::vector<LocalJet> base = normalized_jets(curve, period, p0, jet_budget);
  std::vector<LocalJet> dual = dual_form_local_data(period, base);

  SchifferSeries s;
  s.p0 = p0;
  s.order = N;
  s.delta_pi.reserve(N);
  s.c_coeffs.reserve(N);
  s.f_star.resize(N);
  s.f_star[0].reserve(g);
  for (int j = 0; j < g; ++j) s.f_star[0].push_back(base[j].density);

  // Derivative tables: d^r at 0 for the base densities and the dual data.
  auto deriv = [](const Series& f, int r) { return f.derivative_at_zero(r); };

  for (int n = 1; n <= N; ++n) {
    Eigen::MatrixXcd cn = Eigen::MatrixXcd::Zero(g, g);
    for (int np = 1; np <= n; ++np) {
      const int q = n - np;  // epsilon order borrowed from the perturbed density
      if (q >= static_cast<int>(s.f_star.size()) || s.f_star[q].empty()) continue;
      const double pref = 1.0 / (factorial(np) * factorial(np - 1));
      for (int m = 0; m <= np - 1; ++m) {
        const int sdx = np - 1 - m;
        const double b = binomial(np - 1, m);
        for (int j = 0; j < g; ++j) {
          const Complex dj = deriv(s.f_star[q][j], np - 1 + m);
          if (dj == Complex(0)) continue;
          for (int k = 0; k < g; ++k)
            cn(j, k) += pref * b * dj * deriv(base[k].density, sdx);
        }
      }
    }
    s.c_coeffs.push_back(cn);
    s.delta_pi.push_back(cn);

    if (n < N) {
      // Extend the perturbed densities: order-n part is sum_k C^(n)_{jk} e_k.
      s.f_star[n].reserve(g);
      for (int j = 0; j < g; ++j) {
        Series acc = Series::zero(jet_budget);
        for (int k = 0; k < g; ++k) acc = acc + cn(j, k) * dual[k].density;
        s.f_star[n].push_back(acc.truncated(jet_budget));
      }
    }
  }
  return s;
}

std::vector<Complex> criterion_sum(const std::vector<LocalJet>& f_jets,
                                   const std::vector<LocalJet>& h_jets, bool derivative,
                                   int max_order) {
  if (f_jets.empty() || h_jets.size() != f_jets.size())
    throw Error("schiffer_engine", "criterion sum needs matching jet lists");
  if (f_jets[0].anchor.same_place(h_jets[0].anchor))
    throw Error("schiffer_engine", "anchor mismatch: the obstruction point must differ from p0");
  if (f_jets[0].order() < max_order)
    throw Error("schiffer_engine", "f-jets truncated below the requested order");

  const int g = static_cast<int>(f_jets.size());
  std::vector<Complex> sums(max_order + 1, Complex(0));
  for (int i = 0; i <= max_order; ++i)
    for (int k = 0; k < g; ++k) {
      const Complex h = derivative ? h_jets[k].derivative(1) : h_jets[k].value();
      sums[i] += f_jets[k].derivative(i) * h;
    }
  return sums;
}

}  // namespace schifferlab
