#include "lingbridge/solvers/serialize.hpp"

#include "solvers/json_io.hpp"

namespace lingbridge::solvers {

namespace detail {

json encode(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json encode(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Vector r = m.row(i).transpose();
    rows.push_back(encode(r));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Vector decode_vector(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Matrix decode_matrix(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows) throw InputError("matrix: row count mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Vector r = decode_vector(data[static_cast<std::size_t>(i)]);
    if (r.size() != cols) throw InputError("matrix: ragged row " + std::to_string(i));
    m.row(i) = r.transpose();
  }
  return m;
}

json encode(const LinearModel& m) {
  return {{"weights", encode(m.weights)},
          {"intercept", m.intercept},
          {"alpha", m.params.alpha},
          {"l1_ratio", m.params.l1_ratio},
          {"converged", m.converged},
          {"iterations", m.iterations}};
}

LinearModel decode_linear_model(const json& j) {
  LinearModel m;
  m.weights = decode_vector(j.at("weights"));
  m.intercept = j.at("intercept").get<double>();
  m.params.alpha = j.at("alpha").get<double>();
  m.params.l1_ratio = j.at("l1_ratio").get<double>();
  m.converged = j.value("converged", true);
  m.iterations = j.value("iterations", std::size_t{0});
  return m;
}

json encode(const LogisticModel& m) {
  return {{"weights", encode(m.weights)},
          {"intercept", m.intercept},
          {"C", m.c_inv_reg},
          {"converged", m.converged},
          {"iterations", m.iterations}};
}

LogisticModel decode_logistic_model(const json& j) {
  LogisticModel m;
  m.weights = decode_vector(j.at("weights"));
  m.intercept = j.at("intercept").get<double>();
  m.c_inv_reg = j.at("C").get<double>();
  m.converged = j.value("converged", true);
  m.iterations = j.value("iterations", std::size_t{0});
  return m;
}

json encode(const LinearMap& m) {
  return {{"coefficients", encode(m.coefficients)},
          {"intercepts", encode(m.intercepts)},
          {"rank_bound", m.rank_bound},
          {"rank_clamped", m.rank_clamped}};
}

LinearMap decode_linear_map(const json& j) {
  LinearMap m;
  m.coefficients = decode_matrix(j.at("coefficients"));
  m.intercepts = decode_vector(j.at("intercepts"));
  m.rank_bound = j.at("rank_bound").get<std::size_t>();
  m.rank_clamped = j.value("rank_clamped", false);
  if (m.intercepts.size() != m.coefficients.cols()) throw InputError("linear map: intercept count mismatch");
  return m;
}

json encode(const Standardizer& s) {
  return {{"means", encode(s.means)}, {"stds", encode(s.stds)}, {"constant", s.constant}};
}

Standardizer decode_standardizer(const json& j) {
  Standardizer s;
  s.means = decode_vector(j.at("means"));
  s.stds = decode_vector(j.at("stds"));
  s.constant = j.at("constant").get<std::vector<bool>>();
  if (s.stds.size() != s.means.size() || s.constant.size() != static_cast<std::size_t>(s.means.size())) {
    throw InputError("standardizer: length mismatch");
  }
  if ((s.stds.array() <= 0.0).any()) throw InputError("standardizer: non-positive std");
  return s;
}

json encode(const CvReport& r) {
  return {{"metric", std::string(to_string(r.metric))},
          {"k_folds", r.k_folds},
          {"seed", r.seed},
          {"grid", r.grid},
          {"fold_scores", r.fold_scores},
          {"mean_scores", r.mean_scores},
          {"best_index", r.best_index}};
}

CvReport decode_cv_report(const json& j) {
  CvReport r;
  r.metric = parse_cv_metric(j.at("metric").get<std::string>());
  r.k_folds = j.at("k_folds").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.grid = j.at("grid").get<std::vector<GridPoint>>();
  r.fold_scores = j.at("fold_scores").get<std::vector<std::vector<double>>>();
  r.mean_scores = j.at("mean_scores").get<std::vector<double>>();
  r.best_index = j.at("best_index").get<std::size_t>();
  if (r.best_index >= r.grid.size() && !r.grid.empty()) throw InputError("cv report: best_index out of range");
  return r;
}

json tagged(std::string_view format, json body) {
  json out = {{"format", std::string(format)}, {"format_version", kModelFormatVersion}};
  out.update(body);
  return out;
}

void check_header(const json& j, std::string_view format, int version) {
  if (!j.is_object() || !j.contains("format") || j["format"] != std::string(format)) {
    throw InputError("expected a '" + std::string(format) + "' document");
  }
  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw InputError(std::string(format) + ": missing integer format_version");
  }
  const auto found = j["format_version"].get<long long>();
  if (found != version) {
    throw InputError(std::string(format) + " format_version " + std::to_string(found) +
                     " is not supported (this build reads version " + std::to_string(version) + ")");
  }
}

json parse_document(const std::string& text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

namespace {

template <class T, class Decode>
T load(const std::string& text, std::string_view format, Decode decode) {
  const auto j = detail::parse_document(text, format);
  detail::check_header(j, format, kModelFormatVersion);
  try {
    return decode(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(format) + ": " + e.what());
  }
}

}  // namespace

std::string to_json(const LinearModel& m) { return detail::tagged("lingbridge.linear_model", detail::encode(m)).dump(2); }
std::string to_json(const LogisticModel& m) {
  return detail::tagged("lingbridge.logistic_model", detail::encode(m)).dump(2);
}
std::string to_json(const LinearMap& m) { return detail::tagged("lingbridge.linear_map", detail::encode(m)).dump(2); }
std::string to_json(const Standardizer& s) {
  return detail::tagged("lingbridge.standardizer", detail::encode(s)).dump(2);
}
std::string to_json(const CvReport& r) { return detail::tagged("lingbridge.cv_report", detail::encode(r)).dump(2); }

LinearModel linear_model_from_json(const std::string& text) {
  return load<LinearModel>(text, "lingbridge.linear_model", detail::decode_linear_model);
}
LogisticModel logistic_model_from_json(const std::string& text) {
  return load<LogisticModel>(text, "lingbridge.logistic_model", detail::decode_logistic_model);
}
LinearMap linear_map_from_json(const std::string& text) {
  return load<LinearMap>(text, "lingbridge.linear_map", detail::decode_linear_map);
}
Standardizer standardizer_from_json(const std::string& text) {
  return load<Standardizer>(text, "lingbridge.standardizer", detail::decode_standardizer);
}
CvReport cv_report_from_json(const std::string& text) {
  return load<CvReport>(text, "lingbridge.cv_report", detail::decode_cv_report);
}

}  // namespace lingbridge::solvers
