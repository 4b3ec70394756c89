#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace lingbridge {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad files, violated preconditions,
/// invalid configuration. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Bracketed-tree syntax error at a byte offset of the input string.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Numerical failure during fitting or evaluation (exit code 2 in the CLI).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Each index is
/// processed exactly once; results must be written to per-index slots.
/// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

/// True when every entry is finite.
bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

}  // namespace lingbridge
