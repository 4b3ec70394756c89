#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lingbridge::csv {

using Row = std::vector<std::string>;

/// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
/// newlines. Empty physical lines are skipped. Each row is paired with the
/// 1-based line number it started on.
struct Record {
  std::size_t line = 0;
  Row fields;
};
std::vector<Record> read(std::istream& in);
std::vector<Record> read_file(const std::string& path);

void write_row(std::ostream& out, const Row& fields);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Parses a full-precision decimal; throws InputError naming `context` on
/// anything that is not a finite number.
double parse_double(std::string_view text, std::string_view context);

}  // namespace lingbridge::csv
