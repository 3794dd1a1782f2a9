#include "schifferlab/serialize.hpp"

#include <fstream>
#include <sstream>

namespace schifferlab {

Json complex_to_json(const Complex& z) {
  return Json::array({format_double(z.real()), format_double(z.imag())});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("cli", "complex values must be [re, im] arrays");
  auto part = [](const Json& v) {
    return v.is_string() ? parse_decimal(v.get<std::string>()) : v.get<double>();
  };
  return Complex(part(j[0]), part(j[1]));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("cli", "matrix payload must be a nonempty array");
  const Eigen::Index rows = j.size();
  const Eigen::Index cols = j[0].size();
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  return m;
}

Json vector_to_json(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Eigen::VectorXcd vector_from_json(const Json& j) {
  Eigen::VectorXcd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json curve_spec_to_json(const CurveSpec& spec) {
  return Json{{"f_coeffs", spec.f_coeffs}, {"name", spec.name}};
}

CurveSpec curve_spec_from_json(const Json& j) {
  CurveSpec spec;
  if (!j.contains("f_coeffs") || !j["f_coeffs"].is_array())
    throw Error("curve_model", "curve spec needs an f_coeffs array");
  for (const auto& c : j["f_coeffs"]) {
    if (c.is_string())
      spec.f_coeffs.push_back(c.get<std::string>());
    else if (c.is_number_integer())
      spec.f_coeffs.push_back(std::to_string(c.get<long long>()));
    else if (c.is_number())
      spec.f_coeffs.push_back(format_double(c.get<double>()));
    else
      throw Error("curve_model", "coefficients must be decimal strings");
  }
  spec.name = j.value("name", "");
  return spec;
}

Json curve_info_to_json(const HyperellipticCurve& curve) {
  Json branches = Json::array();
  for (const Complex& e : curve.branch_points()) branches.push_back(complex_to_json(e));
  return Json{{"name", curve.name()},
              {"degree", curve.degree()},
              {"genus", curve.genus()},
              {"branch_points", branches},
              {"branch_separation", format_double(curve.branch_separation())},
              {"max_root_residual", format_double(curve.max_root_residual())},
              {"infinite_branch", curve.has_infinite_branch()}};
}

Json surface_point_to_json(const SurfacePoint& p) {
  switch (p.kind) {
    case SurfacePoint::Kind::Ordinary:
      return Json{{"kind", "ordinary"},
                  {"x", complex_to_json(p.x)},
                  {"sheet", p.sheet >= 0 ? "+" : "-"}};
    case SurfacePoint::Kind::Branch:
      return Json{{"kind", "branch"}, {"index", p.branch_index}};
    case SurfacePoint::Kind::Infinity:
      return Json{{"kind", "infinity"}};
  }
  throw Error("cli", "unknown point kind");
}

SurfacePoint surface_point_from_json(const Json& j) {
  const std::string kind = j.value("kind", "ordinary");
  if (kind == "ordinary") {
    SurfacePoint p = SurfacePoint::ordinary(complex_from_json(j.at("x")),
                                            j.value("sheet", "+") == "-" ? -1 : +1);
    return p;
  }
  if (kind == "branch") return SurfacePoint::branch(j.at("index").get<int>());
  if (kind == "infinity") return SurfacePoint::infinity();
  throw Error("cli", "unknown point kind '" + kind + "'");
}

Json period_data_to_json(const PeriodData& pd) {
  return Json{{"A", matrix_to_json(pd.A)},
              {"B", matrix_to_json(pd.B)},
              {"Pi", matrix_to_json(pd.Pi)},
              {"M", matrix_to_json(pd.M)},
              {"err", format_double(pd.pi_error)},
              {"symmetry_residual", format_double(pd.symmetry_residual)},
              {"im_min_eigenvalue", format_double(pd.im_min_eigenvalue)}};
}

PeriodData period_data_from_json(const Json& j) {
  PeriodData pd;
  pd.A = matrix_from_json(j.at("A"));
  pd.B = matrix_from_json(j.at("B"));
  pd.Pi = matrix_from_json(j.at("Pi"));
  pd.M = matrix_from_json(j.at("M"));
  pd.genus = static_cast<int>(pd.Pi.rows());
  pd.C = pd.A.inverse();
  pd.pi_error = parse_decimal(j.at("err").get<std::string>());
  if (j.contains("symmetry_residual"))
    pd.symmetry_residual = parse_decimal(j["symmetry_residual"].get<std::string>());
  if (j.contains("im_min_eigenvalue"))
    pd.im_min_eigenvalue = parse_decimal(j["im_min_eigenvalue"].get<std::string>());
  return pd;
}

Json aj_value_to_json(const AJValue& v) {
  return Json{{"value", vector_to_json(v.value)},
              {"lattice_reduced", v.lattice_reduced},
              {"base", surface_point_to_json(v.base)},
              {"target", surface_point_to_json(v.target)},
              {"err", format_double(v.quadrature_error)}};
}

AJValue aj_value_from_json(const Json& j) {
  AJValue v;
  v.value = vector_from_json(j.at("value"));
  v.lattice_reduced = j.value("lattice_reduced", false);
  if (j.contains("base")) v.base = surface_point_from_json(j["base"]);
  if (j.contains("target")) v.target = surface_point_from_json(j["target"]);
  if (j.contains("err")) v.quadrature_error = parse_decimal(j["err"].get<std::string>());
  return v;
}

Json aj_jet_to_json(const AJJet& jet) {
  Json orders = Json::array();
  for (const auto& d : jet.derivatives) orders.push_back(vector_to_json(d));
  return Json{{"anchor", surface_point_to_json(jet.anchor)},
              {"chart", jet.chart == Chart::OrdinaryT ? "t" : "tau"},
              {"derivatives", orders}};
}

Json schiffer_series_to_json(const SchifferSeries& s) {
  Json orders = Json::array();
  for (int n = 1; n <= s.order; ++n)
    orders.push_back(Json{{"n", n}, {"dPi", matrix_to_json(s.delta_pi[n - 1])}});
  Json c = Json::array();
  for (const auto& m : s.c_coeffs) c.push_back(matrix_to_json(m));
  return Json{{"p0", surface_point_to_json(s.p0)}, {"orders", orders}, {"C", c}};
}

Json theta_char_to_json(const ThetaChar& c) {
  auto halves = [](const std::vector<int>& v) {
    Json arr = Json::array();
    for (int x : v) arr.push_back(x ? "0.5" : "0");
    return arr;
  };
  return Json::array({halves(c.a), halves(c.b)});
}

ThetaChar theta_char_from_json(const Json& j) {
  ThetaChar c;
  auto read = [](const Json& arr, std::vector<int>& out) {
    for (const auto& v : arr) {
      const double x = v.is_string() ? parse_decimal(v.get<std::string>()) : v.get<double>();
      out.push_back(x > 0.25 ? 1 : 0);
    }
  };
  read(j.at(0), c.a);
  read(j.at(1), c.b);
  return c;
}

Json theta_constant_to_json(const ThetaConstant& t) {
  return Json{{"characteristic", theta_char_to_json(t.characteristic)},
              {"value", complex_to_json(t.value)},
              {"tail", format_double(t.tail_bound)},
              {"radius", t.radius}};
}

ThetaConstant theta_constant_from_json(const Json& j) {
  ThetaConstant t;
  t.characteristic = theta_char_from_json(j.at("characteristic"));
  t.value = complex_from_json(j.at("value"));
  t.tail_bound = parse_decimal(j.at("tail").get<std::string>());
  t.radius = j.value("radius", 0.0);
  return t;
}

Json theta_report_to_json(const ThetaHyperellipticReport& r) {
  return Json{{"genus", r.genus},
              {"min_even_null", format_double(r.min_even_null)},
              {"argmin", theta_char_to_json(r.argmin)},
              {"second_min", format_double(r.second_min)},
              {"vanishing_count", r.vanishing_count},
              {"verdict_hyperelliptic", r.verdict_hyperelliptic}};
}

Json rationality_to_json(const RationalityVerdict& v) {
  Json residuals = Json::array();
  for (double r : v.residuals) residuals.push_back(format_double(r));
  return Json{{"rational", v.is_rational},
              {"witnesses", v.witnesses},
              {"residuals", residuals},
              {"best_residual", format_double(v.best_residual)},
              {"bound", v.bound}};
}

RationalityVerdict rationality_from_json(const Json& j) {
  RationalityVerdict v;
  v.is_rational = j.at("rational").get<bool>();
  for (const auto& w : j.at("witnesses")) v.witnesses.push_back(w.get<std::vector<long long>>());
  for (const auto& r : j.at("residuals"))
    v.residuals.push_back(parse_decimal(r.get<std::string>()));
  v.best_residual = parse_decimal(j.at("best_residual").get<std::string>());
  v.bound = j.at("bound").get<long long>();
  return v;
}

Json run_config_to_json(const RunConfig& cfg) {
  Json eps = Json::array();
  for (double e : cfg.eps_grid) eps.push_back(format_double(e));
  return Json{{"precision", cfg.precision_digits},
              {"quad_tol", format_double(cfg.quad_tol)},
              {"theta_vanish_threshold", format_double(cfg.theta_vanish_threshold)},
              {"hyper_threshold", format_double(cfg.hyper_threshold)},
              {"rationality_tol", format_double(cfg.rationality_tol)},
              {"rationality_bound", cfg.rationality_bound},
              {"lll_delta", format_double(cfg.lll_delta)},
              {"eps_grid", eps},
              {"seed", cfg.seed},
              {"out", cfg.out_dir}};
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig cfg;
  auto num = [](const Json& v) {
    return v.is_string() ? parse_decimal(v.get<std::string>()) : v.get<double>();
  };
  if (j.contains("precision")) cfg.precision_digits = j["precision"].get<int>();
  if (j.contains("quad_tol")) cfg.quad_tol = num(j["quad_tol"]);
  if (j.contains("theta_vanish_threshold"))
    cfg.theta_vanish_threshold = num(j["theta_vanish_threshold"]);
  if (j.contains("hyper_threshold")) cfg.hyper_threshold = num(j["hyper_threshold"]);
  if (j.contains("rationality_tol")) cfg.rationality_tol = num(j["rationality_tol"]);
  if (j.contains("rationality_bound"))
    cfg.rationality_bound = j["rationality_bound"].get<long long>();
  if (j.contains("lll_delta")) cfg.lll_delta = num(j["lll_delta"]);
  if (j.contains("eps_grid")) {
    cfg.eps_grid.clear();
    for (const auto& e : j["eps_grid"]) cfg.eps_grid.push_back(num(e));
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  cfg.validate();
  return cfg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error("cli", "cannot write '" + path + "'");
  out << contents;
}

}  // namespace schifferlab
