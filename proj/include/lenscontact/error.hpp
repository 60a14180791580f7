#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lenscontact {

enum class ErrorKind {
  InvalidLens,
  NotInOverlap,
  UnsupportedOrder,
  ProfileConstruction,
  InvalidProfile,
  NotContact,
  InvalidRotation,
  MetricGauge,
  Numeric,
  ModelViolation,
  WrongClass,
  InvalidDeformation,
  NotComparable,
  DeformationPipeline,
  Domain,
  Schema,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lenscontact
