#pragma once

#include <stdexcept>
#include <string>

namespace echkit {

// Error taxonomy mirrors the CLI exit codes: validation/precondition -> 3,
// numeric trouble -> 4. Checker *failures* are ordinary return values, not
// exceptions.
enum class ErrorKind { validation, numeric };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ValidationError : public Error {
public:
  explicit ValidationError(std::string msg) : Error(ErrorKind::validation, std::move(msg)) {}
};

class NumericError : public Error {
public:
  explicit NumericError(std::string msg) : Error(ErrorKind::numeric, std::move(msg)) {}
};

}  // namespace echkit
