#include "ism/error.hpp"

namespace ism {

namespace {

std::string join(const std::vector<ConfigError::Diagnostic>& diags) {
  std::string s;
  for (const auto& d : diags) {
    if (!s.empty()) s += '\n';
    if (d.line > 0) s += "line " + std::to_string(d.line) + ": ";
    s += d.message;
  }
  return s;
}

}  // namespace

ConfigError::ConfigError(std::vector<Diagnostic> diags) : Error(join(diags)), diags_(std::move(diags)) {}

}  // namespace ism
