#include "gbr/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace gbr {

MExponent MExponent::finite(int m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  return MExponent{m, false};
}

MExponent MExponent::infinite() { return MExponent{1, true}; }

MExponent MExponent::parse(const std::string& s) {
  if (s == "inf") return infinite();
  return finite(std::stoi(s));
}

const char* to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::GenStarlike: return "gen-starlike";
    case ClassTag::GenStarlikeExtremal: return "gen-starlike-extremal";
    case ClassTag::Janowski: return "janowski";
    case ClassTag::OrderAlpha: return "order-alpha";
    case ClassTag::ClassicalStarlike: return "classical";
    case ClassTag::KsClass: return "ks";
    case ClassTag::ScConjugate: return "sc";
    case ClassTag::CcConjugate: return "cc";
    case ClassTag::CsSymmetric: return "cs";
  }
  return "?";
}

ClassTag class_tag_parse(const std::string& s) {
  if (s == "gen-starlike") return ClassTag::GenStarlike;
  if (s == "gen-starlike-extremal") return ClassTag::GenStarlikeExtremal;
  if (s == "janowski") return ClassTag::Janowski;
  if (s == "order-alpha") return ClassTag::OrderAlpha;
  if (s == "classical") return ClassTag::ClassicalStarlike;
  if (s == "ks") return ClassTag::KsClass;
  if (s == "sc") return ClassTag::ScConjugate;
  if (s == "cc") return ClassTag::CcConjugate;
  if (s == "cs") return ClassTag::CsSymmetric;
  throw PreconditionError("unknown class tag: " + s);
}

bool is_capped_class(ClassTag tag) {
  switch (tag) {
    case ClassTag::GenStarlikeExtremal:
    case ClassTag::KsClass:
    case ClassTag::ScConjugate:
    case ClassTag::CcConjugate:
    case ClassTag::CsSymmetric:
      return true;
    default:
      return false;
  }
}

bool is_blend_class(ClassTag tag) {
  switch (tag) {
    case ClassTag::GenStarlike:
    case ClassTag::GenStarlikeExtremal:
    case ClassTag::Janowski:
    case ClassTag::OrderAlpha:
    case ClassTag::ClassicalStarlike:
      return true;
    default:
      return false;
  }
}

namespace {

Series even_geometric(int truncation_order) {
  std::vector<Complex> c(static_cast<size_t>(truncation_order) + 1, Complex{});
  for (int n = 0; n <= truncation_order; n += 2) c[static_cast<size_t>(n)] = 1.0;
  return Series(std::move(c));
}

/// t^{2N-2} * sum t^{2k}, the series of t^{2N-2}/(1-t^2).
MajorantSeries shifted_even_geometric(int N, int truncation_order) {
  std::vector<double> c(static_cast<size_t>(truncation_order) + 1, 0.0);
  for (int n = 2 * N - 2; n <= truncation_order; n += 2) c[static_cast<size_t>(n)] = 1.0;
  return MajorantSeries(std::move(c));
}

double real_certified(const EvalResult& r, double where) {
  const Complex v = certified_value(r, where);
  return v.real();
}

/// Effective order-alpha parameter of a Janowski-family model with E = -1.
double alpha_of(const PsiModel& psi) {
  if (!psi.has_closed_form_eval() || psi.e() != -1.0)
    throw PreconditionError("order-alpha form requires a model with E = -1");
  return (1.0 - psi.d()) / 2.0;
}

void validate(const RadiusProblem& p) {
  if (!(p.beta >= 0.0 && p.beta <= 1.0)) throw PreconditionError("beta must lie in [0,1]");
  if (p.N < 1) throw PreconditionError("N must be >= 1");
  if (!p.m.is_inf && p.m.value < 1) throw PreconditionError("m must be >= 1");
  if (p.num.T < 32) throw PreconditionError("truncation order must be >= 32");
}

CoeffBoundProvider effective_bounds(const RadiusProblem& p, const ExtremalPair& pair) {
  switch (p.tag) {
    case ClassTag::GenStarlike:
      return p.bounds;
    case ClassTag::GenStarlikeExtremal:
      return CoeffBoundProvider::extremal_derived(pair.f0);
    case ClassTag::Janowski:
      return CoeffBoundProvider::janowski_product(p.psi.d(), p.psi.e());
    case ClassTag::OrderAlpha:
      return CoeffBoundProvider::order_alpha_product(alpha_of(p.psi));
    case ClassTag::ClassicalStarlike:
      if (p.psi.d() != 1.0 || p.psi.e() != -1.0)
        throw PreconditionError("classical form requires psi = (1+z)/(1-z)");
      return CoeffBoundProvider::classical_n();
    default:
      return p.bounds;  // unused by the section-3 equations
  }
}

struct EquationState {
  RadiusProblem p;
  ExtremalPair pair;
  std::optional<CoeffBoundProvider> bounds;
  // Section-3 precomputations (built only for the tags that need them).
  std::optional<Series> growth_series;      // bound on |g(z^m)|, evaluated at r^m
  std::optional<MajorantSeries> rn_kernel;  // integrand series of R^N

  EquationState(RadiusProblem prob, ExtremalPair extremal)
      : p(std::move(prob)), pair(std::move(extremal)) {}
};

double wsum_at(const EquationState& st, double r) {
  return weighted_sum(*st.bounds, st.p.weights, r, st.p.num.root_tol * 1e-2).value;
}

}  // namespace

RadiusEquation build_equation(const RadiusProblem& p) {
  validate(p);
  auto st = std::make_shared<EquationState>(p, build_extremal_pair(p.psi, p.num.T));
  RadiusEquation eq;
  eq.capped = is_capped_class(p.tag);

  if (is_blend_class(p.tag)) st->bounds = effective_bounds(p, st->pair);

  switch (p.tag) {
    case ClassTag::GenStarlike:
    case ClassTag::GenStarlikeExtremal: {
      eq.rhs = starlike_distance(p.psi, p.num.quad_tol);
      const Series f0p = derivative(st->pair.f0);
      eq.lhs = [st, f0p](double r) {
        const double x = st->p.m.apply(r);
        const double grow = real_certified(eval(st->pair.f0, x), r);
        const double dist = real_certified(eval(f0p, x), r);
        return st->p.beta * dist + (1.0 - st->p.beta) * grow + wsum_at(*st, r);
      };
      break;
    }
    case ClassTag::Janowski: {
      const double D = p.psi.d();
      const double E = p.psi.e();
      eq.rhs = E == 0.0 ? std::exp(-D) : std::pow(1.0 - E, (D - E) / E);
      eq.lhs = [st, D, E](double r) {
        const double x = st->p.m.apply(r);
        double blend;
        if (E == 0.0) {
          blend = std::exp(D * x) *
                  (st->p.beta + (1.0 - st->p.beta * (1.0 - D)) * x);
        } else {
          blend = st->p.beta * (1.0 + D * x) * std::pow(1.0 + E * x, (D - 2.0 * E) / E) +
                  (1.0 - st->p.beta) * x * std::pow(1.0 + E * x, (D - E) / E);
        }
        return blend + wsum_at(*st, r);
      };
      break;
    }
    case ClassTag::OrderAlpha:
    case ClassTag::ClassicalStarlike: {
      const double a = p.tag == ClassTag::ClassicalStarlike ? 0.0 : alpha_of(p.psi);
      if (p.tag == ClassTag::ClassicalStarlike && alpha_of(p.psi) != 0.0)
        throw PreconditionError("classical form requires psi = (1+z)/(1-z)");
      eq.rhs = std::pow(4.0, a - 1.0);
      eq.lhs = [st, a](double r) {
        const double x = st->p.m.apply(r);
        const double blend =
            st->p.beta * (1.0 + (1.0 - 2.0 * a) * x) / std::pow(1.0 - x, 3.0 - 2.0 * a) +
            (1.0 - st->p.beta) * x / std::pow(1.0 - x, 2.0 - 2.0 * a);
        return blend + wsum_at(*st, r);
      };
      break;
    }
    case ClassTag::KsClass: {
      eq.rhs = ks_distance(p.psi, p.num.quad_tol);
      const Series psi_s = psi_series(p.psi, p.num.T);
      st->growth_series = integrate(mul(psi_s, even_geometric(p.num.T)));
      st->rn_kernel =
          mul(tail_part(majorant(psi_s), p.N), shifted_even_geometric(p.N, p.num.T));
      eq.lhs = [st](double r) {
        const double x = st->p.m.apply(r);
        const double term1 = real_certified(eval(*st->growth_series, x), r);
        const double rn = certified_value(integral(*st->rn_kernel, r), r);
        return term1 + rn;
      };
      break;
    }
    case ClassTag::ScConjugate: {
      eq.rhs = starlike_distance(p.psi, p.num.quad_tol);
      const Series psi_s = psi_series(p.psi, p.num.T);
      st->growth_series = st->pair.f0;
      st->rn_kernel =
          mul(tail_part(majorant(st->pair.f0), p.N), tail_part(majorant(psi_s), p.N));
      eq.lhs = [st](double r) {
        const double x = st->p.m.apply(r);
        const double term1 = real_certified(eval(*st->growth_series, x), r);
        const double rn = certified_value(integral_over_t(*st->rn_kernel, r), r);
        return term1 + rn;
      };
      break;
    }
    case ClassTag::CcConjugate: {
      eq.rhs = convex_distance(p.psi, p.num.quad_tol);
      const Series psi_s = psi_series(p.psi, p.num.T);
      st->growth_series = st->pair.k_psi;
      st->rn_kernel = mul(tail_part(majorant(st->pair.k_psi_prime), p.N),
                          tail_part(majorant(psi_s), p.N));
      eq.lhs = [st](double r) {
        const double x = st->p.m.apply(r);
        const double term1 = real_certified(eval(*st->growth_series, x), r);
        const double rn = certified_value(double_bohr_integral(*st->rn_kernel, r), r);
        return term1 + rn;
      };
      break;
    }
    case ClassTag::CsSymmetric: {
      eq.rhs = cs_distance(p.psi, p.num.quad_tol);
      const Series kprime2 = sqrt_series(substitute_z2(st->pair.k_psi_prime));
      const Series psi_s = psi_series(p.psi, kprime2.order());
      st->growth_series = mul(psi_s, kprime2);  // evaluated through the nested transform
      st->rn_kernel =
          mul(tail_part(majorant(kprime2), p.N), tail_part(majorant(psi_s), p.N));
      eq.lhs = [st](double r) {
        const double x = st->p.m.apply(r);
        const double term1 =
            x == 0.0 ? 0.0
                     : real_certified(double_bohr_integral(*st->growth_series, x), r);
        const double rn = certified_value(double_bohr_integral(*st->rn_kernel, r), r);
        return term1 + rn;
      };
      break;
    }
  }
  return eq;
}

namespace {

constexpr int kScanPoints = 512;
constexpr int kMonotoneGrid = 64;

double lhs_or_solve_error(const RadiusEquation& eq, double r) {
  try {
    return eq.lhs(r);
  } catch (const DivergenceError& e) {
    std::ostringstream msg;
    msg << "tail certification failed at r=" << e.at << " before a sign change: " << e.what();
    throw SolveError(SolveErrorKind::DivergenceBeforeRoot, msg.str());
  }
}

}  // namespace

RadiusResult solve(const RadiusProblem& p) {
  const RadiusEquation eq = build_equation(p);

  const double lhs0 = lhs_or_solve_error(eq, 0.0);
  if (!(lhs0 < eq.rhs)) {
    std::ostringstream msg;
    msg << "LHS(0+)=" << lhs0 << " does not lie below RHS=" << eq.rhs;
    throw SolveError(SolveErrorKind::ConditionViolated, msg.str());
  }

  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double r = p.num.r_max * i / kScanPoints;
    const double v = lhs_or_solve_error(eq, r);
    if (v - eq.rhs >= 0.0) {
      hi = r;
      break;
    }
    lo = r;
  }
  if (hi < 0.0) {
    std::ostringstream msg;
    msg << "LHS stayed below RHS=" << eq.rhs << " on the certified scan up to r=" << p.num.r_max;
    throw SolveError(SolveErrorKind::NoRootInRange, msg.str());
  }

  RadiusResult res;
  res.condition_ok = true;

  // The equations are sums of increasing terms; verify on a coarse grid below
  // the bracket and record the outcome.
  double prev = lhs0;
  res.monotone_ok = true;
  for (int j = 1; j <= kMonotoneGrid; ++j) {
    const double r = hi * j / kMonotoneGrid;
    const double v = lhs_or_solve_error(eq, r);
    if (v < prev - 1e-13) {
      res.monotone_ok = false;
      break;
    }
    prev = v;
  }

  double a = lo;
  double b = hi;
  const double width_target = std::max(p.num.root_tol / 16.0, 1e-16);
  for (int it = 0; it < 200 && b - a > width_target; ++it) {
    const double mid = 0.5 * (a + b);
    const double v = lhs_or_solve_error(eq, mid);
    if (v - eq.rhs >= 0.0)
      b = mid;
    else
      a = mid;
  }
  res.r0 = 0.5 * (a + b);
  res.residual = std::abs(lhs_or_solve_error(eq, res.r0) - eq.rhs);
  if (eq.capped) {
    res.capped = res.r0 > 1.0 / 3.0;
    res.rb = std::min(1.0 / 3.0, res.r0);
  } else {
    res.capped = false;
    res.rb = res.r0;
  }
  return res;
}

namespace {

RadiusResult solve_with_tag(const RadiusProblem& p, ClassTag expected) {
  if (p.tag != expected) {
    std::ostringstream msg;
    msg << "problem is tagged " << to_string(p.tag) << ", expected " << to_string(expected);
    throw PreconditionError(msg.str());
  }
  return solve(p);
}

}  // namespace

RadiusResult solve_gen_starlike(const RadiusProblem& p) {
  return solve_with_tag(p, ClassTag::GenStarlike);
}
RadiusResult solve_gen_starlike_extremal(const RadiusProblem& p) {
  return solve_with_tag(p, ClassTag::GenStarlikeExtremal);
}
RadiusResult solve_janowski(const RadiusProblem& p) {
  return solve_with_tag(p, ClassTag::Janowski);
}
RadiusResult solve_order_alpha(const RadiusProblem& p) {
  return solve_with_tag(p, ClassTag::OrderAlpha);
}
RadiusResult solve_classical(const RadiusProblem& p) {
  return solve_with_tag(p, ClassTag::ClassicalStarlike);
}
RadiusResult solve_ks(const RadiusProblem& p) { return solve_with_tag(p, ClassTag::KsClass); }
RadiusResult solve_sc(const RadiusProblem& p) { return solve_with_tag(p, ClassTag::ScConjugate); }
RadiusResult solve_cc(const RadiusProblem& p) { return solve_with_tag(p, ClassTag::CcConjugate); }
RadiusResult solve_cs(const RadiusProblem& p) { return solve_with_tag(p, ClassTag::CsSymmetric); }

namespace {

/// The series whose coefficients the sharpness hypothesis requires positive.
Series probe_series(const RadiusProblem& p, const ExtremalPair& pair) {
  switch (p.tag) {
    case ClassTag::CcConjugate:
    case ClassTag::CsSymmetric:
      return pair.k_psi;
    case ClassTag::KsClass:
      return integrate(mul(psi_series(p.psi, p.num.T), even_geometric(p.num.T)));
    default:
      return pair.f0;
  }
}

}  // namespace

SharpnessProbe sharpness_probe(const RadiusProblem& p, const RadiusResult& res) {
  SharpnessProbe probe;
  if (res.capped) {
    probe.skipped = true;
    probe.skip_reason = "capped result: rb = 1/3 < r0, equality is not attained";
    return probe;
  }
  if (res.r0 + probe.delta >= p.num.r_max) {
    probe.skipped = true;
    probe.skip_reason = "r0 + delta falls outside the certified range";
    return probe;
  }
  const RadiusEquation eq = build_equation(p);
  try {
    probe.lhs_excess = eq.lhs(res.r0 + probe.delta) - eq.rhs;
  } catch (const DivergenceError&) {
    probe.skipped = true;
    probe.skip_reason = "LHS not certified at r0 + delta";
    return probe;
  }

  const ExtremalPair pair = build_extremal_pair(p.psi, p.num.T);
  const Series s = probe_series(p, pair);
  probe.coefficients_positive = true;
  const int upto = std::min(64, s.order());
  for (int n = 1; n <= upto; ++n) {
    const Complex c = s.coeff(n);
    if (!(c.real() > 0.0) || std::abs(c.imag()) > 1e-12) {
      probe.coefficients_positive = false;
      break;
    }
  }
  return probe;
}

}  // namespace gbr
