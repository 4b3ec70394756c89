#pragma once

#include <string>

#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/rrr.hpp"
#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::solvers {

/// JSON documents carry {"format": <type>, "format_version": 1, ...}.
/// Loading rejects other formats or versions with InputError.
inline constexpr int kModelFormatVersion = 1;

std::string to_json(const LinearModel& m);
std::string to_json(const LogisticModel& m);
std::string to_json(const LinearMap& m);
std::string to_json(const Standardizer& s);
std::string to_json(const CvReport& r);

LinearModel linear_model_from_json(const std::string& text);
LogisticModel logistic_model_from_json(const std::string& text);
LinearMap linear_map_from_json(const std::string& text);
Standardizer standardizer_from_json(const std::string& text);
CvReport cv_report_from_json(const std::string& text);

}  // namespace lingbridge::solvers
