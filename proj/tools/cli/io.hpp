#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/feature_matrix.hpp"

namespace lingbridge::cli {

/// Single writer for one command's outputs. Every file gets a
/// `<file>.meta.json` sidecar with the command, config hash and seed.
class OutputDir {
 public:
  explicit OutputDir(const RunConfig& config);

  const std::filesystem::path& path() const noexcept { return dir_; }
  void write(const std::string& file, const std::string& content);
  void write_matrix(const std::string& file, const featx::FeatureMatrix& m);

 private:
  std::filesystem::path dir_;
  std::string command_;
  std::string hash_;
  std::uint64_t seed_;
};

/// Throws InputError("<what> not found: <path>") for a missing file.
void require_file(const std::string& path, const std::string& what);

std::string labels_csv(const std::vector<std::string>& ids, const Vector& labels);
/// Reads `narration_id,label` and returns labels in the order of `ids`.
Vector read_labels(const std::string& path, const std::vector<std::string>& ids);

std::string severity_csv(const std::vector<std::string>& ids, const Vector& severity);
/// Reads `patient_id,severity`.
std::pair<std::vector<std::string>, Vector> read_severity(const std::string& path);

std::string task_scores_csv(const corpus::TaskScoreTable& table);

}  // namespace lingbridge::cli
