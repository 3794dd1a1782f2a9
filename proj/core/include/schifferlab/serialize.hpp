#pragma once

#include <nlohmann/json.hpp>

#include "schifferlab/abel_jacobi.hpp"
#include "schifferlab/config.hpp"
#include "schifferlab/curve.hpp"
#include "schifferlab/homology.hpp"
#include "schifferlab/lattice.hpp"
#include "schifferlab/schiffer.hpp"
#include "schifferlab/theta.hpp"

namespace schifferlab {

using Json = nlohmann::json;

/// Complex numbers serialize as two-element arrays of decimal strings
/// everywhere in the interchange format.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd vector_from_json(const Json& j);

Json curve_spec_to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const Json& j);

Json curve_info_to_json(const HyperellipticCurve& curve);

Json surface_point_to_json(const SurfacePoint& p);
SurfacePoint surface_point_from_json(const Json& j);

Json period_data_to_json(const PeriodData& pd);
/// Rebuilds the matrix payload (A, B, Pi, M, err); homology combos and
/// elementary periods are recomputed from the curve when needed.
PeriodData period_data_from_json(const Json& j);

Json aj_value_to_json(const AJValue& v);
AJValue aj_value_from_json(const Json& j);

Json aj_jet_to_json(const AJJet& jet);

Json schiffer_series_to_json(const SchifferSeries& s);

Json theta_char_to_json(const ThetaChar& c);
ThetaChar theta_char_from_json(const Json& j);
Json theta_constant_to_json(const ThetaConstant& t);
ThetaConstant theta_constant_from_json(const Json& j);
Json theta_report_to_json(const ThetaHyperellipticReport& r);

Json rationality_to_json(const RationalityVerdict& v);
RationalityVerdict rationality_from_json(const Json& j);

Json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace schifferlab
