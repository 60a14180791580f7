#pragma once

#include <array>
#include <cstdint>

namespace lenscontact {

/// Arithmetic data of L(p,q): gcd(p,q) = 1 and m·p + s·q = 1, with the
/// canonical choice 0 ≤ s < p (s ≡ q⁻¹ mod p), or (m, s) = (1, 0) when p = 1.
struct LensParams {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t m = 1;
  std::int64_t s = 0;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

LensParams make_lens(std::int64_t p, std::int64_t q);

/// Angular coordinate, always stored reduced to [0, 2π).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  double value() const { return value_; }

  friend Angle operator+(Angle a, Angle b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.value_ - b.value_); }
  friend bool operator==(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

double reduce_angle(double radians);

/// Distance on the circle: min(|a − b|, 2π − |a − b|).
double circle_distance(Angle a, Angle b);

enum class Chart : int { Zero = 0, One = 1 };

constexpr int index(Chart c) { return static_cast<int>(c); }
constexpr Chart other(Chart c) { return c == Chart::Zero ? Chart::One : Chart::Zero; }

/// A point in cylindrical coordinates (r, θ, z) of one toroidal chart. On the
/// core circle (r = 0) θ is meaningless and stored as 0.
struct ChartPoint {
  Chart chart = Chart::Zero;
  double r = 0.0;
  Angle theta;
  Angle z;

  ChartPoint() = default;
  ChartPoint(Chart c, double radius, Angle th, Angle zz);
};

/// Largest coordinate mismatch between two points of the same chart
/// (|Δr| and circle distances of θ, z).
double point_distance(const ChartPoint& a, const ChartPoint& b);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// (θ, z) block of the chart-1 → chart-0 transition: [[−q, m], [p, s]].
IntMatrix2 transition_matrix(const LensParams& lens);
/// Its integer inverse [[−s, m], [p, q]].
IntMatrix2 inverse_transition_matrix(const LensParams& lens);
IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b);

/// Chart 1 → chart 0 on the overlap 0 < r < 1:
/// (r, θ, z) ↦ (1 − r, −qθ + mz, pθ + sz).
ChartPoint transition(const LensParams& lens, const ChartPoint& pt);

/// Chart 0 → chart 1 on the overlap: (r, θ, z) ↦ (1 − r, −sθ + mz, pθ + qz).
ChartPoint transition_inverse(const LensParams& lens, const ChartPoint& pt);

/// T²-action. In chart 0 a translation of (θ, z); in chart 1 the conjugated
/// action (θ − sθ' + mz', z + pθ' + qz').
ChartPoint torus_action(const LensParams& lens, Angle dtheta, Angle dz,
                        const ChartPoint& pt);

/// Representation with r ≤ 1/2; r = 1/2 resolves to chart 0.
ChartPoint canonicalize(const LensParams& lens, const ChartPoint& pt);

}  // namespace lenscontact
