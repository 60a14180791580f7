#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace lenscontact {

/// Value and first four derivatives of a scalar function of one variable at a
/// point. Arithmetic follows the Leibniz rule, so composing jets gives exact
/// derivatives of sums, products and quotients.
class Jet {
 public:
  static constexpr std::size_t kOrder = 4;

  constexpr Jet() = default;
  constexpr explicit Jet(std::array<double, kOrder + 1> d) : d_(d) {}

  static constexpr Jet constant(double c) { return Jet({c, 0, 0, 0, 0}); }

  constexpr double operator[](std::size_t k) const { return d_[k]; }
  constexpr double& operator[](std::size_t k) { return d_[k]; }
  constexpr double value() const { return d_[0]; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double c) {
    a.d_[0] += c;
    return a;
  }
  friend Jet operator+(double c, Jet a) { return a + c; }
  friend Jet operator-(double c, const Jet& a) { return (a * -1.0) + c; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  Jet reciprocal() const;

  /// Jet of x ↦ f(1 − x) given the jet of f at 1 − x: odd derivatives flip sign.
  Jet reflected() const;

  /// Jet of the derivative, dropping the unknown highest order (set to 0).
  Jet derivative() const;

 private:
  std::array<double, kOrder + 1> d_{};
};

/// A radial coefficient function r ↦ jet at r.
using RadialFn = std::function<Jet(double)>;

}  // namespace lenscontact
