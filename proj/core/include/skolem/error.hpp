#pragma once

#include <stdexcept>
#include <string>

namespace skolem {

// Broad failure classes; the CLI maps these onto exit codes.
enum class ErrorKind {
  parse,
  invalid_input,
  infeasible,
  search_exhausted,
  verification_failed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(ErrorKind::parse, message) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::invalid_input, message) {}
};

class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& message) : Error(ErrorKind::infeasible, message) {}
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& message)
      : Error(ErrorKind::search_exhausted, message) {}
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& message)
      : Error(ErrorKind::verification_failed, message) {}
};

}  // namespace skolem
