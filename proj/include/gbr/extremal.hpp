#pragma once

#include "gbr/psi.hpp"
#include "gbr/quadrature.hpp"
#include "gbr/series.hpp"

namespace gbr {

/// The growth/coefficient majorants of a Ma-Minda class: the starlike
/// extremal f0 (= h_psi) with f0 = z exp int_0^z (psi(t)-1)/t dt, and the
/// convex extremal k_psi with 1 + z k''/k' = psi, so k' = f0/z.
struct ExtremalPair {
  Series f0;
  Series k_psi;
  Series k_psi_prime;
  PsiModel psi;
  int truncation_order;
};

ExtremalPair build_extremal_pair(const PsiModel& model, int truncation_order);

/// -f0(-1) = exp int_0^1 (psi(-s)-1)/s ds, the class's Koebe-type lower bound
/// on d(0, boundary). Adaptive quadrature; the integrand's s->0 limit is
/// -psi'(0).
double starlike_distance(const PsiModel& model, double quad_tol = kDefaultQuadTol);

/// -k_psi(-1) = int_0^1 k'(-s) ds.
double convex_distance(const PsiModel& model, double quad_tol = kDefaultQuadTol);

/// int_0^1 psi(-t)/(1+t^2) dt, the distance bound for the odd close-to-convex
/// class.
double ks_distance(const PsiModel& model, double quad_tol = kDefaultQuadTol);

/// int_0^1 (1/s) int_0^s psi(-t) sqrt(k'(-t^2)) dt ds, the distance bound for
/// convexity with respect to symmetric points.
double cs_distance(const PsiModel& model, double quad_tol = kDefaultQuadTol);

/// k'(x) = exp int_0^x (psi(s)-1)/s ds on (-1,1). Closed form for the
/// Janowski family, quadrature otherwise.
double kprime_at(const PsiModel& model, double x, double quad_tol = kDefaultQuadTol);

}  // namespace gbr
