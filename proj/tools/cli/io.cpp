#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lingbridge/common.hpp"
#include "lingbridge/csv.hpp"

namespace lingbridge::cli {
namespace fs = std::filesystem;

OutputDir::OutputDir(const RunConfig& config)
    : dir_(config.out), command_(config.command), hash_(config_hash(config)), seed_(config.seed) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create output directory " + dir_.string() + ": " + ec.message());
}

namespace {

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
  if (!f) throw Error("write failed: " + path.string());
}

}  // namespace

void OutputDir::write(const std::string& file, const std::string& content) {
  write_text(dir_ / file, content);
  nlohmann::ordered_json meta = {{"file", file}, {"command", command_}, {"config_hash", hash_}, {"seed", seed_}};
  write_text(dir_ / (file + ".meta.json"), meta.dump(1) + "\n");
}

void OutputDir::write_matrix(const std::string& file, const featx::FeatureMatrix& m) {
  std::ostringstream s;
  featx::write_feature_csv(s, m);
  write(file, s.str());
}

void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw InputError(what + " path is required");
  if (!fs::is_regular_file(path)) throw InputError(what + " not found: " + path);
}

std::string labels_csv(const std::vector<std::string>& ids, const Vector& labels) {
  std::ostringstream s;
  csv::write_row(s, {"narration_id", "label"});
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto label = labels(static_cast<Eigen::Index>(i)) > 0.5 ? corpus::Label::dementia : corpus::Label::control;
    csv::write_row(s, {ids[i], std::string(corpus::to_string(label))});
  }
  return s.str();
}

Vector read_labels(const std::string& path, const std::vector<std::string>& ids) {
  auto records = csv::read_file(path);
  if (records.empty() || records[0].fields != csv::Row{"narration_id", "label"}) {
    throw InputError(path + ": expected header narration_id,label");
  }
  std::map<std::string, double> by_id;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (f.size() != 2) throw InputError(path + ":" + std::to_string(records[r].line) + ": expected 2 fields");
    auto label = corpus::parse_label(f[1]);
    if (!by_id.emplace(f[0], label == corpus::Label::dementia ? 1.0 : 0.0).second) {
      throw InputError(path + ": duplicate narration_id '" + f[0] + "'");
    }
  }
  Vector out(static_cast<Eigen::Index>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = by_id.find(ids[i]);
    if (it == by_id.end()) throw InputError(path + ": no label for '" + ids[i] + "'");
    out(static_cast<Eigen::Index>(i)) = it->second;
  }
  return out;
}

std::string severity_csv(const std::vector<std::string>& ids, const Vector& severity) {
  std::ostringstream s;
  csv::write_row(s, {"patient_id", "severity"});
  for (std::size_t i = 0; i < ids.size(); ++i) {
    csv::write_row(s, {ids[i], csv::format_double(severity(static_cast<Eigen::Index>(i)))});
  }
  return s.str();
}

std::pair<std::vector<std::string>, Vector> read_severity(const std::string& path) {
  auto records = csv::read_file(path);
  if (records.empty() || records[0].fields != csv::Row{"patient_id", "severity"}) {
    throw InputError(path + ": expected header patient_id,severity");
  }
  std::vector<std::string> ids;
  std::vector<double> values;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    auto where = path + ":" + std::to_string(records[r].line);
    if (f.size() != 2) throw InputError(where + ": expected 2 fields");
    ids.push_back(f[0]);
    values.push_back(csv::parse_double(f[1], where));
  }
  return {ids, Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

std::string task_scores_csv(const corpus::TaskScoreTable& table) {
  std::ostringstream s;
  csv::Row header{"patient_id"};
  header.insert(header.end(), table.task_names.begin(), table.task_names.end());
  csv::write_row(s, header);
  for (std::size_t i = 0; i < table.patient_ids.size(); ++i) {
    csv::Row row{table.patient_ids[i]};
    for (Eigen::Index t = 0; t < table.scores.cols(); ++t) {
      row.push_back(csv::format_double(table.scores(static_cast<Eigen::Index>(i), t)));
    }
    csv::write_row(s, row);
  }
  return s.str();
}

}  // namespace lingbridge::cli
