#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ism {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed configuration, out-of-range parameters.
class ConfigError : public Error {
 public:
  struct Diagnostic {
    int line = 0;  // 0 when not tied to a source line
    std::string message;
  };

  explicit ConfigError(const std::string& what) : Error(what) {}
  explicit ConfigError(std::vector<Diagnostic> diags);

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// Blow-up, non-convergence, CFL violations.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Arguments outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ism
