#include "lenscontact/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "lenscontact/error.hpp"

namespace lenscontact::numerics {

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  double l1 = 0.0;
  // gauss_kronrod's tolerance is relative to the L1 norm; derive it from the
  // absolute target once the scale of the integrand is known.
  const double coarse = gauss_kronrod<double, 15>::integrate(f, lo, hi, 0, 0.0, &error, &l1);
  const double scale = std::max(l1, std::abs(coarse));
  const double eps = std::numeric_limits<double>::epsilon();
  double rel_tol = scale > 0.0 ? std::max(abs_tol / scale, 4.0 * eps) : 4.0 * eps;
  const double value =
      gauss_kronrod<double, 15>::integrate(f, lo, hi, 30, rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > std::max(abs_tol, 64.0 * eps * l1)) {
    throw Error(ErrorKind::Numeric, "quadrature did not converge (error estimate " +
                                        std::to_string(error) + ")");
  }
  return {value, error};
}

double invert_increasing(const std::function<double(double)>& target,
                         const std::function<double(double)>& slope, double y,
                         double lo, double hi, double bisect_width, double tol) {
  double flo = target(lo) - y;
  double fhi = target(hi) - y;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo > 0.0 || fhi < 0.0) {
    throw Error(ErrorKind::Numeric, "inversion target outside the bracket");
  }
  while (hi - lo > bisect_width) {
    const double mid = 0.5 * (lo + hi);
    const double fm = target(mid) - y;
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = target(x) - y;
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    const double d = slope(x);
    double next = (d > 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= tol || hi - lo <= tol) return next;
    x = next;
  }
  throw Error(ErrorKind::Numeric, "Newton polish did not converge");
}

double Sampler::open(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  double x = dist(rng_);
  while (x <= lo) x = dist(rng_);
  return x;
}

}  // namespace lenscontact::numerics
