#pragma once

#include <stdexcept>
#include <string>

namespace norbit {

enum class ErrorKind {
  Usage,        // malformed input (parse errors, size mismatch)
  Validation,   // input violates a type rule
  Bound,        // configured search or size bound exceeded
  Unsupported,  // requested case lies outside what is implemented
  Recipe,       // infinitesimal-character recipe parity pattern violated
  Oracle,       // numeric oracle disagreement
  Overflow,     // exact arithmetic overflow
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace norbit
