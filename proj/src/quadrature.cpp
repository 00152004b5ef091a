#include "gbr/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gbr/errors.hpp"

namespace gbr {

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  QuadResult out;
  double error = 0.0;
  out.value = Rule::integrate(f, a, b, 15, tol, &error);
  out.error = error;
  // The reported estimate is relative to the L1 norm; accept either an
  // absolute or a relative pass.
  const double scale = std::max(1.0, std::abs(out.value));
  out.converged = error <= tol * scale * 100.0 || error <= 1e-9;
  return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  const QuadResult r = integrate_adaptive(f, a, b, tol);
  if (!r.converged)
    throw QuadratureError("adaptive quadrature did not reach tolerance", r.error);
  return r.value;
}

}  // namespace gbr
