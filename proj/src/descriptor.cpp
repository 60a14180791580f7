#include "lenscontact/descriptor.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lenscontact/error.hpp"

namespace lenscontact {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorKind::Schema, "missing field '" + path + name + "'");
  }
  return obj.at(name);
}

double number_field(const json& obj, const char* name, const std::string& path = "") {
  const json& v = field(obj, name, path);
  if (!v.is_number()) {
    throw Error(ErrorKind::Schema, "field '" + path + name + "' must be a number");
  }
  return v.get<double>();
}

std::int64_t integer_field(const json& obj, const char* name, const std::string& path = "") {
  const json& v = field(obj, name, path);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::Schema, "field '" + path + name + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

FormDescriptor describe(const ContactForm& form, json meta) {
  FormDescriptor d;
  d.lens = form.lens();
  d.tau0 = form.tau0();
  d.phi0 = form.phi0();
  d.profile_coeffs.assign(form.profile().coeffs().begin(), form.profile().coeffs().end());
  d.meta = std::move(meta);
  return d;
}

ContactForm to_form(const FormDescriptor& d) {
  const LensParams lens = make_lens(d.lens.p, d.lens.q);
  if (!(lens == d.lens)) {
    throw Error(ErrorKind::Schema, "lens.m and lens.s do not match lens.p and lens.q");
  }
  ProfileSpec profile(d.profile_coeffs, BoundaryData::from_triple(lens, d.tau0, d.phi0));
  return ContactForm::from_triple(std::move(profile), d.tau0, d.phi0, lens);
}

json to_json(const FormDescriptor& d) {
  return json{{"schema_version", d.schema_version},
              {"lens", {{"p", d.lens.p}, {"q", d.lens.q}, {"m", d.lens.m}, {"s", d.lens.s}}},
              {"tau0", d.tau0},
              {"phi0", d.phi0},
              {"profile", {{"type", "poly-in-u"}, {"coeffs", d.profile_coeffs}}},
              {"meta", d.meta}};
}

FormDescriptor descriptor_from_json(const json& j) {
  FormDescriptor d;
  d.schema_version = static_cast<int>(integer_field(j, "schema_version"));
  if (d.schema_version != kSchemaVersion) {
    throw Error(ErrorKind::Schema,
                "unsupported schema_version " + std::to_string(d.schema_version));
  }
  const json& lens = field(j, "lens", "");
  d.lens.p = integer_field(lens, "p", "lens.");
  d.lens.q = integer_field(lens, "q", "lens.");
  d.lens.m = integer_field(lens, "m", "lens.");
  d.lens.s = integer_field(lens, "s", "lens.");
  d.tau0 = number_field(j, "tau0");
  d.phi0 = number_field(j, "phi0");

  const json& profile = field(j, "profile", "");
  const json& type = field(profile, "type", "profile.");
  if (!type.is_string() || type.get<std::string>() != "poly-in-u") {
    throw Error(ErrorKind::Schema, "field 'profile.type' must be \"poly-in-u\"");
  }
  const json& coeffs = field(profile, "coeffs", "profile.");
  if (!coeffs.is_array() || coeffs.empty()) {
    throw Error(ErrorKind::Schema, "field 'profile.coeffs' must be a non-empty array");
  }
  for (const json& c : coeffs) {
    if (!c.is_number()) {
      throw Error(ErrorKind::Schema, "field 'profile.coeffs' must hold numbers");
    }
    d.profile_coeffs.push_back(c.get<double>());
  }
  if (j.contains("meta")) {
    if (!j.at("meta").is_object()) {
      throw Error(ErrorKind::Schema, "field 'meta' must be an object");
    }
    d.meta = j.at("meta");
  }
  return d;
}

std::string print_descriptor(const FormDescriptor& d) { return to_json(d).dump(2) + "\n"; }

FormDescriptor parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
  return descriptor_from_json(j);
}

FormDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot read descriptor '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str());
}

void save_descriptor(const FormDescriptor& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Schema, "cannot write descriptor '" + path + "'");
  out << print_descriptor(d);
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

}  // namespace lenscontact
