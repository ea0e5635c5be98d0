#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lmax {

// Failure classes; the CLI maps each class to a fixed process exit status.
enum class ErrorKind {
  Parse,       // malformed input files or flag values            -> exit 2
  Contract,    // precondition or invariant violations            -> exit 2
  Capacity,    // work beyond the configured caps                 -> exit 3
  Experiment,  // a statistical experiment cannot be set up       -> exit 4
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }

  // Stable machine-readable identifier, e.g. "BudgetTooLarge".
  const std::string& code() const { return code_; }

  int exit_status() const {
    switch (kind_) {
      case ErrorKind::Parse:
      case ErrorKind::Contract:
        return 2;
      case ErrorKind::Capacity:
        return 3;
      case ErrorKind::Experiment:
        return 4;
    }
    return 1;
  }

  static Error parse(const std::string& message) {
    return {ErrorKind::Parse, "ParseError", message};
  }
  static Error contract(const std::string& message) {
    return {ErrorKind::Contract, "ContractViolation", message};
  }
  static Error capacity(std::string code, const std::string& message) {
    return {ErrorKind::Capacity, std::move(code), message};
  }
  static Error experiment(std::string code, const std::string& message) {
    return {ErrorKind::Experiment, std::move(code), message};
  }

 private:
  ErrorKind kind_;
  std::string code_;
};

}  // namespace lmax
