#include "lenscontact/jet.hpp"

namespace lenscontact {

namespace {

constexpr double kBinomial[5][5] = {
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
};

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t k = 0; k <= kOrder; ++k) d_[k] += o.d_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t k = 0; k <= kOrder; ++k) d_[k] -= o.d_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& v : d_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out;
  for (std::size_t n = 0; n <= Jet::kOrder; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) acc += kBinomial[n][k] * a[k] * b[n - k];
    out[n] = acc;
  }
  return out;
}

Jet Jet::reciprocal() const {
  // From h·v = 1: v⁽ⁿ⁾ = −(Σ_{k=1..n} C(n,k) h⁽ᵏ⁾ v⁽ⁿ⁻ᵏ⁾)/h.
  Jet v;
  v[0] = 1.0 / d_[0];
  for (std::size_t n = 1; n <= kOrder; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += kBinomial[n][k] * d_[k] * v[n - k];
    v[n] = -acc / d_[0];
  }
  return v;
}

Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

Jet Jet::reflected() const {
  Jet out = *this;
  out[1] = -out[1];
  out[3] = -out[3];
  return out;
}

Jet Jet::derivative() const {
  return Jet({d_[1], d_[2], d_[3], d_[4], 0.0});
}

}  // namespace lenscontact
