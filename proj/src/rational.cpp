#include "lenscontact/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lenscontact/error.hpp"

namespace lenscontact {

namespace {

using boost::multiprecision::cpp_int;

// Floor division for a positive divisor.
cpp_int floor_div(const cpp_int& a, const cpp_int& b) {
  cpp_int q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

}  // namespace

std::vector<Fraction> convergents(double x, std::int64_t max_den, std::size_t max_count) {
  if (!std::isfinite(x)) throw Error(ErrorKind::Domain, "convergents of a non-finite value");
  if (max_den < 1) throw Error(ErrorKind::Domain, "max_den must be positive");

  // x is a dyadic rational; expand it exactly.
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  cpp_int num = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  cpp_int den = 1;
  exponent -= 53;
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }

  std::vector<Fraction> out;
  cpp_int h_prev = 1, h_prev2 = 0;
  cpp_int k_prev = 0, k_prev2 = 1;
  const cpp_int limit = max_den;
  while (out.size() < max_count && den != 0) {
    const cpp_int a = floor_div(num, den);
    const cpp_int h = a * h_prev + h_prev2;
    const cpp_int k = a * k_prev + k_prev2;
    if (k > limit) break;
    if (boost::multiprecision::abs(h) > cpp_int(std::numeric_limits<std::int64_t>::max())) break;
    out.push_back({static_cast<std::int64_t>(h), static_cast<std::int64_t>(k)});
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const cpp_int rem = num - a * den;
    num = den;
    den = rem;
  }
  return out;
}

std::optional<Fraction> rational_detect(double x, std::int64_t max_den, double tol) {
  for (const Fraction& c : convergents(x, max_den)) {
    if (std::abs(std::fma(static_cast<double>(c.den), x, -static_cast<double>(c.num))) < tol) {
      return c;
    }
  }
  return std::nullopt;
}

double mod1(double x) {
  const double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

double mod1_distance(double a, double b) {
  const double d = mod1(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace lenscontact
