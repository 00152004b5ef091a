#pragma once

#include <functional>

namespace gbr {

constexpr double kDefaultQuadTol = 1e-11;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Nodes are interior,
/// so integrands only need finite limits at the endpoints.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol = kDefaultQuadTol);

/// Same, but throws QuadratureError (with the achieved error) on failure.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double tol = kDefaultQuadTol);

}  // namespace gbr
