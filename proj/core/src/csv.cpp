#include "lingbridge/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "lingbridge/common.hpp"

namespace lingbridge::csv {

std::vector<Record> read(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  std::size_t line = 1;
  current.line = 1;

  auto finish_row = [&] {
    if (row_has_content) {
      current.fields.push_back(std::move(field));
      records.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (!row_has_content && c != '\n' && c != '\r') {
      row_has_content = true;
      current.line = line;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        finish_row();
        ++line;
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw InputError("unterminated quoted CSV field starting before line " + std::to_string(line));
  finish_row();
  return records;
}

std::vector<Record> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return read(in);
}

void write_row(std::ostream& out, const Row& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out << f;
    } else {
      out << '"';
      for (char c : f) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    }
  }
  out << '\n';
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // folds -0 into 0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view context) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError(std::string(context) + ": not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace lingbridge::csv
