#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "gbr/extremal.hpp"
#include "gbr/weights.hpp"

namespace gbr {

/// Exponent m of the inner argument z^m; "inf" is first class and sends r^m
/// to its pointwise limit 0 on [0,1).
struct MExponent {
  int value = 1;
  bool is_inf = false;

  static MExponent finite(int m);
  static MExponent infinite();
  static MExponent parse(const std::string& s);  // digits or "inf"

  double apply(double r) const { return is_inf ? 0.0 : std::pow(r, value); }
  std::string str() const { return is_inf ? "inf" : std::to_string(value); }
};

enum class ClassTag {
  GenStarlike,          // generic Ma-Minda starlike, user-chosen bounds
  GenStarlikeExtremal,  // bounds taken from the extremal coefficients; capped
  Janowski,             // closed-form Janowski corollary
  OrderAlpha,           // closed-form order-alpha corollary
  ClassicalStarlike,    // closed-form classical corollary, RHS 1/4
  KsClass,              // odd close-to-convex; capped
  ScConjugate,          // starlike w.r.t. conjugate points; capped
  CcConjugate,          // convex w.r.t. conjugate points; capped
  CsSymmetric           // convex w.r.t. symmetric points; capped
};

const char* to_string(ClassTag tag);
ClassTag class_tag_parse(const std::string& s);

/// Classes whose theorems cap the reported radius at min(1/3, r0).
bool is_capped_class(ClassTag tag);
/// Classes with the beta-blend |f'|/|f| left side (the starlike family).
bool is_blend_class(ClassTag tag);

struct NumericConfig {
  int T = 256;
  double root_tol = 1e-12;
  double quad_tol = 1e-11;
  double r_max = 1.0 - 1e-6;
};

struct RadiusProblem {
  ClassTag tag = ClassTag::ClassicalStarlike;
  double beta = 0.0;  // in [0,1]; ignored by the capped section-3 classes
  MExponent m;
  int N = 1;
  PsiModel psi = PsiModel::classical();
  WeightSequence weights = WeightSequence::power_tail(1);
  CoeffBoundProvider bounds = CoeffBoundProvider::classical_n();
  NumericConfig num;
};

struct SharpnessProbe {
  bool skipped = false;
  std::string skip_reason;
  double delta = 1e-3;
  double lhs_excess = 0.0;          // LHS(r0+delta) - RHS, expected > 0
  bool coefficients_positive = false;  // the extremal's t_n > 0 hypothesis
};

struct RadiusResult {
  double r0 = 0.0;
  double rb = 0.0;
  bool capped = false;
  double residual = 0.0;
  bool condition_ok = true;
  bool monotone_ok = true;  // LHS increasing on a 64-point grid below the bracket
};

/// The assembled equation LHS(r) = RHS of one theorem instance. `lhs` throws
/// DivergenceError when a certified evaluation is impossible at r.
struct RadiusEquation {
  std::function<double(double)> lhs;
  double rhs = 0.0;
  bool capped = false;
};

/// Builds the equation for the problem's class (useful for diagnostics and
/// tests); solve() wraps this with the scan/bisection contract.
RadiusEquation build_equation(const RadiusProblem& p);

/// Finds the minimal positive root of LHS(r) = RHS by a 512-point ascending
/// scan to the first sign change followed by bisection, then applies the
/// class's cap rule. Throws SolveError (ConditionViolated, NoRootInRange,
/// DivergenceBeforeRoot).
RadiusResult solve(const RadiusProblem& p);

// Per-theorem entry points; each checks the tag and dispatches to solve().
RadiusResult solve_gen_starlike(const RadiusProblem& p);
RadiusResult solve_gen_starlike_extremal(const RadiusProblem& p);
RadiusResult solve_janowski(const RadiusProblem& p);
RadiusResult solve_order_alpha(const RadiusProblem& p);
RadiusResult solve_classical(const RadiusProblem& p);
RadiusResult solve_ks(const RadiusProblem& p);
RadiusResult solve_sc(const RadiusProblem& p);
RadiusResult solve_cc(const RadiusProblem& p);
RadiusResult solve_cs(const RadiusProblem& p);

/// Evaluates LHS just beyond r0 and inspects the extremal coefficients; only
/// meaningful when the result is uncapped. Never throws: a failed excess
/// check is reported in the probe.
SharpnessProbe sharpness_probe(const RadiusProblem& p, const RadiusResult& res);

}  // namespace gbr
