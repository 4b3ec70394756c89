#pragma once

// nlohmann-based encoders shared by the solver and pipeline serializers.

#include <nlohmann/json.hpp>

#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/rrr.hpp"
#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::solvers::detail {

using nlohmann::json;

json encode(const Vector& v);
json encode(const Matrix& m);
Vector decode_vector(const json& j);
Matrix decode_matrix(const json& j);

json encode(const LinearModel& m);
json encode(const LogisticModel& m);
json encode(const LinearMap& m);
json encode(const Standardizer& s);
json encode(const CvReport& r);

LinearModel decode_linear_model(const json& j);
LogisticModel decode_logistic_model(const json& j);
LinearMap decode_linear_map(const json& j);
Standardizer decode_standardizer(const json& j);
CvReport decode_cv_report(const json& j);

/// Wraps body with format/version tags; check_header validates them.
json tagged(std::string_view format, json body);
void check_header(const json& j, std::string_view format, int version);
json parse_document(const std::string& text, std::string_view what);

}  // namespace lingbridge::solvers::detail
