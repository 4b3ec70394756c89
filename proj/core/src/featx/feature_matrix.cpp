#include "lingbridge/featx/feature_matrix.hpp"

#include <fstream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "lingbridge/csv.hpp"

namespace lingbridge::featx {

void FeatureVector::push(std::string name, double value) {
  names.push_back(std::move(name));
  values.push_back(value);
}

void FeatureVector::append(const FeatureVector& other) {
  names.insert(names.end(), other.names.begin(), other.names.end());
  values.insert(values.end(), other.values.begin(), other.values.end());
}

std::optional<std::size_t> FeatureVector::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

double FeatureVector::at(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InputError("feature '" + std::string(name) + "' not present");
  return values[*idx];
}

Vector FeatureVector::as_vector() const {
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::optional<std::size_t> FeatureMatrix::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

FeatureMatrix FeatureMatrix::select_columns(const std::vector<std::string>& wanted) const {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  FeatureMatrix out;
  out.row_ids = row_ids;
  out.names = wanted;
  out.values.resize(values.rows(), static_cast<Eigen::Index>(wanted.size()));
  std::string missing;
  for (std::size_t j = 0; j < wanted.size(); ++j) {
    auto it = index.find(wanted[j]);
    if (it == index.end()) {
      missing += (missing.empty() ? "" : ", ") + wanted[j];
      continue;
    }
    out.values.col(static_cast<Eigen::Index>(j)) = values.col(static_cast<Eigen::Index>(it->second));
  }
  if (!missing.empty()) throw InputError("feature matrix lacks columns: " + missing);
  return out;
}

FeatureMatrix FeatureMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  FeatureMatrix out;
  out.names = names;
  out.values.resize(static_cast<Eigen::Index>(rows.size()), values.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row_ids.push_back(row_ids.at(rows[i]));
    out.values.row(static_cast<Eigen::Index>(i)) = values.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

FeatureVector FeatureMatrix::row(std::size_t r) const {
  FeatureVector v;
  v.names = names;
  v.values.resize(names.size());
  for (std::size_t j = 0; j < names.size(); ++j) {
    v.values[j] = values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
  }
  return v;
}

FeatureMatrix FeatureMatrix::from_rows(std::vector<std::string> row_ids, const std::vector<FeatureVector>& rows) {
  if (row_ids.size() != rows.size()) throw InputError("row id count does not match row count");
  FeatureMatrix m;
  m.row_ids = std::move(row_ids);
  if (!rows.empty()) m.names = rows.front().names;
  m.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(m.names.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].names != m.names) {
      throw InputError("feature columns of row '" + m.row_ids[r] + "' are not aligned with the first row");
    }
    for (std::size_t j = 0; j < m.names.size(); ++j) {
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = rows[r].values[j];
    }
  }
  return m;
}

FeatureMatrix read_feature_csv(std::istream& in) {
  const auto records = csv::read(in);
  if (records.empty()) throw InputError("feature CSV is empty");
  const auto& header = records.front().fields;
  if (header.empty() || header.front() != "narration_id") {
    throw InputError("feature CSV header must start with narration_id");
  }
  FeatureMatrix m;
  m.names.assign(header.begin() + 1, header.end());
  std::unordered_set<std::string> unique(m.names.begin(), m.names.end());
  if (unique.size() != m.names.size()) throw InputError("feature CSV has duplicate column names");
  const std::size_t width = m.names.size();
  m.values.resize(static_cast<Eigen::Index>(records.size() - 1), static_cast<Eigen::Index>(width));
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "feature CSV line " + std::to_string(rec.line);
    if (rec.fields.size() != width + 1) throw InputError(where + ": wrong number of cells");
    m.row_ids.push_back(rec.fields.front());
    for (std::size_t j = 0; j < width; ++j) {
      m.values(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(j)) =
          csv::parse_double(rec.fields[j + 1], where);
    }
  }
  return m;
}

FeatureMatrix load_feature_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return read_feature_csv(in);
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& m) {
  csv::Row header{"narration_id"};
  header.insert(header.end(), m.names.begin(), m.names.end());
  csv::write_row(out, header);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    csv::Row row{m.row_ids[r]};
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(csv::format_double(m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j))));
    }
    csv::write_row(out, row);
  }
}

}  // namespace lingbridge::featx
