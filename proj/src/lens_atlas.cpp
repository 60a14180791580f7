#include "lenscontact/lens_atlas.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kTwoPi;

// Returns x with a·x ≡ 1 mod n, 0 ≤ x < n (requires gcd(a, n) = 1).
std::int64_t modular_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return ((t0 % n) + n) % n;
}

void require_overlap(const ChartPoint& pt) {
  if (!(pt.r > 0.0 && pt.r < 1.0)) {
    throw Error(ErrorKind::NotInOverlap,
                "r = " + std::to_string(pt.r) + " is not in (0, 1)");
  }
}

ChartPoint apply(const IntMatrix2& mat, Chart target, const ChartPoint& pt) {
  const double th = pt.theta.value();
  const double z = pt.z.value();
  const double th2 = static_cast<double>(mat[0][0]) * th + static_cast<double>(mat[0][1]) * z;
  const double z2 = static_cast<double>(mat[1][0]) * th + static_cast<double>(mat[1][1]) * z;
  return ChartPoint(target, 1.0 - pt.r, Angle(th2), Angle(z2));
}

}  // namespace

LensParams make_lens(std::int64_t p, std::int64_t q) {
  if (p <= 0) {
    throw Error(ErrorKind::InvalidLens, "p must be positive, got " + std::to_string(p));
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::InvalidLens, "gcd(" + std::to_string(p) + ", " +
                                            std::to_string(q) + ") != 1");
  }
  if (p == 1) return {1, q, 1, 0};
  const std::int64_t s = modular_inverse(q, p);
  const __int128 num = 1 - static_cast<__int128>(s) * q;
  const std::int64_t m = static_cast<std::int64_t>(num / p);
  return {p, q, m, s};
}

double reduce_angle(double radians) {
  double x = std::fmod(radians, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

Angle::Angle(double radians) : value_(reduce_angle(radians)) {}

double circle_distance(Angle a, Angle b) {
  const double d = std::abs(a.value() - b.value());
  return std::min(d, kTwoPi - d);
}

ChartPoint::ChartPoint(Chart c, double radius, Angle th, Angle zz)
    : chart(c), r(radius), theta(radius == 0.0 ? Angle() : th), z(zz) {}

double point_distance(const ChartPoint& a, const ChartPoint& b) {
  return std::max({std::abs(a.r - b.r), circle_distance(a.theta, b.theta),
                   circle_distance(a.z, b.z)});
}

IntMatrix2 transition_matrix(const LensParams& lens) {
  return {{{-lens.q, lens.m}, {lens.p, lens.s}}};
}

IntMatrix2 inverse_transition_matrix(const LensParams& lens) {
  return {{{-lens.s, lens.m}, {lens.p, lens.q}}};
}

IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

ChartPoint transition(const LensParams& lens, const ChartPoint& pt) {
  require_overlap(pt);
  if (pt.chart != Chart::One) {
    throw Error(ErrorKind::NotInOverlap, "transition expects a chart-1 point");
  }
  return apply(transition_matrix(lens), Chart::Zero, pt);
}

ChartPoint transition_inverse(const LensParams& lens, const ChartPoint& pt) {
  require_overlap(pt);
  if (pt.chart != Chart::Zero) {
    throw Error(ErrorKind::NotInOverlap, "transition_inverse expects a chart-0 point");
  }
  return apply(inverse_transition_matrix(lens), Chart::One, pt);
}

ChartPoint torus_action(const LensParams& lens, Angle dtheta, Angle dz,
                        const ChartPoint& pt) {
  const double a = dtheta.value();
  const double b = dz.value();
  if (pt.chart == Chart::Zero) {
    return ChartPoint(Chart::Zero, pt.r, Angle(pt.theta.value() + a), Angle(pt.z.value() + b));
  }
  const double th = pt.theta.value() - static_cast<double>(lens.s) * a +
                    static_cast<double>(lens.m) * b;
  const double z = pt.z.value() + static_cast<double>(lens.p) * a +
                   static_cast<double>(lens.q) * b;
  return ChartPoint(Chart::One, pt.r, Angle(th), Angle(z));
}

ChartPoint canonicalize(const LensParams& lens, const ChartPoint& pt) {
  if (pt.r < 0.5) return pt;
  if (pt.r >= 1.0) {
    // Boundary of one chart is the core of the other.
    return pt.chart == Chart::Zero
               ? apply(inverse_transition_matrix(lens), Chart::One, pt)
               : apply(transition_matrix(lens), Chart::Zero, pt);
  }
  if (pt.r == 0.5) return pt.chart == Chart::Zero ? pt : transition(lens, pt);
  return pt.chart == Chart::Zero ? transition_inverse(lens, pt) : transition(lens, pt);
}

}  // namespace lenscontact
