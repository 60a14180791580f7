#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace lenscontact {

/// One residual checked against its tolerance. `claim` names the identity
/// being verified (e.g. "volume-identity").
struct Check {
  std::string name;
  std::string claim;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Machine-readable outcome of one CLI command.
struct Report {
  std::string command;
  std::string inputs_digest;
  std::vector<Check> checks;
  nlohmann::json values = nlohmann::json::object();
  double wall_seconds = 0.0;

  /// Appends a check passing iff residual ≤ tolerance (NaN fails).
  Check& add(std::string name, std::string claim, double residual, double tolerance);
  /// Appends a boolean check.
  Check& add_flag(std::string name, std::string claim, bool ok);

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// FNV-1a digest (hex) of the given text.
std::string digest(const std::string& text);

}  // namespace lenscontact
