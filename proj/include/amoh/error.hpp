#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace amoh {

enum class ErrorKind {
  DivisionByZeroPoly,
  TrivialAlgebra,
  InternalLimitExceeded,
  NotInSemigroup,
  BadDegree,
  NotComposable,
  PreconditionViolated,
  NotMonic,
  InternalInconsistency,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& what)
      : Error(ErrorKind::ParseError, what),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace amoh
