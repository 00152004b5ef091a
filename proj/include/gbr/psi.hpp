#pragma once

#include <string>
#include <vector>

#include "gbr/series.hpp"

namespace gbr {

/// A Ma-Minda generating function: analytic on the disk with psi(0)=1 and
/// psi'(0)>0, mapping onto a domain starlike with respect to 1. The Janowski
/// family (1+Dz)/(1+Ez) covers the classical and order-alpha cases; Custom
/// models carry raw Taylor data and are evaluated through the series engine.
///
/// Custom admissibility (univalence, starlikeness w.r.t. 1, positive real
/// part, symmetry about the real axis) is not validated here: it cannot be
/// decided from finite Taylor data and remains the caller's assertion.
class PsiModel {
 public:
  enum class Kind { Janowski, OrderAlpha, Classical, Custom };

  static PsiModel janowski(double D, double E);      // -1 <= E < D <= 1
  static PsiModel order_alpha(double alpha);         // 0 <= alpha < 1
  static PsiModel classical();                       // (1+z)/(1-z)
  static PsiModel custom(std::vector<Complex> coeffs);  // c0 must be 1
  /// One coefficient per line as "re im"; line k is the coefficient of z^k
  /// and line 0 must read "1 0".
  static PsiModel custom_from_file(const std::string& path);

  Kind kind() const { return kind_; }
  bool has_closed_form_eval() const { return kind_ != Kind::Custom; }

  /// Effective Janowski parameters: Classical = (1,-1), OrderAlpha(a) =
  /// (1-2a,-1). Precondition: not Custom.
  double d() const;
  double e() const;
  double alpha() const;  // OrderAlpha only

  /// psi'(0), i.e. the linear Taylor coefficient.
  double prime0() const;

  std::string str() const;

 private:
  PsiModel() = default;
  Kind kind_ = Kind::Classical;
  double d_ = 1.0;
  double e_ = -1.0;
  double alpha_ = 0.0;
  std::vector<Complex> custom_;

  friend Series psi_series(const PsiModel&, int);
  friend double psi_eval(const PsiModel&, double);
  friend double psi_majorant_tail(const PsiModel&, int, double);
};

/// Taylor coefficients of psi up to order T: c0=1, c_n=(D-E)(-E)^{n-1} for the
/// Janowski family; stored data (truncated or zero-extended) for Custom.
Series psi_series(const PsiModel& model, int truncation_order);

/// Pointwise value on the real axis. Closed form for the Janowski family
/// (valid on [-1,1] away from poles); certified series evaluation for Custom.
double psi_eval(const PsiModel& model, double x);

/// M_t^N(psi) = sum_{n>=N} |c_n| t^n, in closed form where available.
double psi_majorant_tail(const PsiModel& model, int N, double t);

}  // namespace gbr
