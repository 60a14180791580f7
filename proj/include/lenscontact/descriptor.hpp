#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "lenscontact/contact_form.hpp"

namespace lenscontact {

inline constexpr int kSchemaVersion = 1;

/// Persistent description of a form: (lens, τ₀, φ₀, profile) plus free-form
/// metadata. Derived quantities are never stored.
struct FormDescriptor {
  int schema_version = kSchemaVersion;
  LensParams lens;
  double tau0 = 1.0;
  double phi0 = 0.0;
  std::vector<double> profile_coeffs;
  nlohmann::json meta = nlohmann::json::object();

  friend bool operator==(const FormDescriptor&, const FormDescriptor&) = default;
};

FormDescriptor describe(const ContactForm& form, nlohmann::json meta = nlohmann::json::object());

/// Validated ContactForm (errors as from ContactForm::from_triple).
ContactForm to_form(const FormDescriptor& d);

nlohmann::json to_json(const FormDescriptor& d);

/// Error(Schema) naming the missing or malformed field.
FormDescriptor descriptor_from_json(const nlohmann::json& j);

std::string print_descriptor(const FormDescriptor& d);
FormDescriptor parse_descriptor(const std::string& text);

FormDescriptor load_descriptor(const std::string& path);
void save_descriptor(const FormDescriptor& d, const std::string& path);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace lenscontact
