#include "lenscontact/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lenscontact/descriptor.hpp"

namespace lenscontact {

Check& Report::add(std::string name, std::string claim, double residual, double tolerance) {
  checks.push_back({std::move(name), std::move(claim), residual, tolerance, residual <= tolerance});
  return checks.back();
}

Check& Report::add_flag(std::string name, std::string claim, bool ok) {
  checks.push_back({std::move(name), std::move(claim), ok ? 0.0 : 1.0, 0.0, ok});
  return checks.back();
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const Check& c : checks) {
    rows.push_back({{"name", c.name},
                    {"claim", c.claim},
                    {"residual", c.residual},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
  }
  return {{"command", command},   {"inputs_digest", inputs_digest},
          {"pass", pass()},       {"checks", rows},
          {"values", values},     {"wall_seconds", wall_seconds}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << " [" << inputs_digest << "]\n";
  for (const Check& c : checks) {
    out << (c.pass ? "  PASS " : "  FAIL ") << c.name << " (" << c.claim
        << "): residual " << format_double(c.residual) << " <= "
        << format_double(c.tolerance) << "\n";
  }
  for (const auto& [key, value] : values.items()) out << "  " << key << " = " << value.dump() << "\n";
  out << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lenscontact
