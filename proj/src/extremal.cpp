#include "gbr/extremal.hpp"

#include <cmath>

namespace gbr {

ExtremalPair build_extremal_pair(const PsiModel& model, int truncation_order) {
  const Series psi = psi_series(model, truncation_order);
  const Series log_deriv = div_by_z(sub(psi, Series::constant(1.0, psi.order())));
  const Series kprime = exp_series(integrate(log_deriv));  // = f0 / z
  ExtremalPair pair{mul_by_z(kprime), integrate(kprime), kprime, model, truncation_order};
  return pair;
}

namespace {

/// (psi(-s) - 1)/s extended by its limit -psi'(0) at s = 0.
double neg_log_deriv(const PsiModel& model, double s) {
  if (s == 0.0) return -model.prime0();
  return (psi_eval(model, -s) - 1.0) / s;
}

}  // namespace

double kprime_at(const PsiModel& model, double x, double quad_tol) {
  if (std::abs(x) >= 1.0) throw PreconditionError("kprime_at requires |x| < 1");
  if (model.has_closed_form_eval()) {
    const double D = model.d();
    const double E = model.e();
    if (E == 0.0) return std::exp(D * x);
    return std::pow(1.0 + E * x, (D - E) / E);
  }
  const double inner = integrate_or_throw(
      [&](double s) {
        if (s == 0.0) return model.prime0();
        return (psi_eval(model, s) - 1.0) / s;
      },
      0.0, x, quad_tol);
  return std::exp(inner);
}

double starlike_distance(const PsiModel& model, double quad_tol) {
  const double integral =
      integrate_or_throw([&](double s) { return neg_log_deriv(model, s); }, 0.0, 1.0, quad_tol);
  return std::exp(integral);
}

double convex_distance(const PsiModel& model, double quad_tol) {
  if (model.has_closed_form_eval()) {
    return integrate_or_throw([&](double s) { return kprime_at(model, -s, quad_tol); }, 0.0, 1.0,
                              quad_tol);
  }
  // Nested route: k'(-s) = exp int_0^s (psi(-u)-1)/u du.
  return integrate_or_throw(
      [&](double s) {
        if (s == 0.0) return 1.0;
        const double inner = integrate_or_throw(
            [&](double u) { return neg_log_deriv(model, u); }, 0.0, s, quad_tol);
        return std::exp(inner);
      },
      0.0, 1.0, quad_tol);
}

double ks_distance(const PsiModel& model, double quad_tol) {
  return integrate_or_throw(
      [&](double t) { return psi_eval(model, -t) / (1.0 + t * t); }, 0.0, 1.0, quad_tol);
}

double cs_distance(const PsiModel& model, double quad_tol) {
  const auto inner_integrand = [&](double t) {
    return psi_eval(model, -t) * std::sqrt(kprime_at(model, -t * t, quad_tol));
  };
  return integrate_or_throw(
      [&](double s) {
        if (s == 0.0) return 1.0;  // limit of (1/s) int_0^s, integrand -> 1 at 0
        const double inner = integrate_or_throw(inner_integrand, 0.0, s, quad_tol);
        return inner / s;
      },
      0.0, 1.0, quad_tol);
}

}  // namespace gbr
