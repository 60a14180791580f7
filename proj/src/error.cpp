#include "lenscontact/error.hpp"

namespace lenscontact {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLens: return "invalid-lens";
    case ErrorKind::NotInOverlap: return "not-in-overlap";
    case ErrorKind::UnsupportedOrder: return "unsupported-order";
    case ErrorKind::ProfileConstruction: return "profile-construction";
    case ErrorKind::InvalidProfile: return "invalid-profile";
    case ErrorKind::NotContact: return "not-contact";
    case ErrorKind::InvalidRotation: return "invalid-rotation";
    case ErrorKind::MetricGauge: return "metric-gauge";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::ModelViolation: return "model-violation";
    case ErrorKind::WrongClass: return "wrong-class";
    case ErrorKind::InvalidDeformation: return "invalid-deformation";
    case ErrorKind::NotComparable: return "not-comparable";
    case ErrorKind::DeformationPipeline: return "deformation-pipeline";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

}  // namespace lenscontact
