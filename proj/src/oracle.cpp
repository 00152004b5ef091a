#include "gbr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace gbr {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::string failure_line(const std::string& check, std::uint64_t seed, double r,
                         const CheckOutcome& out) {
  std::ostringstream line;
  line << "FAIL " << check << " seed=" << seed << " r=" << r << " theta=" << out.theta
       << " margin=" << out.margin;
  if (!out.detail.empty()) line << " (" << out.detail << ")";
  return line.str();
}

constexpr double kCheckTol = 1e-9;

}  // namespace

SchwarzFunction schwarz_scalar(Complex c, int truncation_order) {
  if (std::abs(c) > 1.0) throw PreconditionError("scalar Schwarz factor needs |c| <= 1");
  return {Series::monomial(1, c, truncation_order), "scalar(" + fmt(std::abs(c)) + ")"};
}

SchwarzFunction schwarz_monomial(int degree, int truncation_order) {
  if (degree < 1) throw PreconditionError("monomial Schwarz degree must be >= 1");
  if (degree > truncation_order) throw PreconditionError("monomial degree exceeds truncation");
  return {Series::monomial(degree, 1.0, truncation_order), "monomial(" + std::to_string(degree) + ")"};
}

SchwarzFunction schwarz_blaschke(const std::vector<Complex>& zeros, int truncation_order) {
  if (zeros.empty() || zeros.size() > 2)
    throw PreconditionError("Blaschke construction takes one or two zeros");
  Series w = Series::identity(truncation_order);
  for (const Complex& a : zeros) {
    if (std::abs(a) >= 1.0) throw PreconditionError("Blaschke zeros must lie inside the disk");
    // (z - a) * 1/(1 - conj(a) z), the second factor as a geometric series.
    const Series factor = mul(sub(Series::identity(truncation_order),
                                  Series::constant(a, truncation_order)),
                              Series::geometric(std::conj(a), truncation_order));
    w = mul(w, factor);
  }
  return {w, "blaschke(" + std::to_string(zeros.size()) + ")"};
}

SchwarzFunction random_schwarz(std::uint64_t seed, SchwarzFamily family, int truncation_order) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (family == SchwarzFamily::Any) {
    const int pick = static_cast<int>(rng() % 3);
    family = pick == 0 ? SchwarzFamily::Scalar
                       : (pick == 1 ? SchwarzFamily::Monomial : SchwarzFamily::Blaschke);
  }
  switch (family) {
    case SchwarzFamily::Scalar: {
      const double rho = 0.999 * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      return schwarz_scalar(std::polar(rho, phi), truncation_order);
    }
    case SchwarzFamily::Monomial: {
      const int k = 1 + static_cast<int>(rng() % 6);
      return schwarz_monomial(k, truncation_order);
    }
    case SchwarzFamily::Blaschke:
    default: {
      const size_t degree = 1 + rng() % 2;
      std::vector<Complex> zeros;
      for (size_t i = 0; i < degree; ++i) {
        const double rho = 0.8 * unit(rng);
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        zeros.push_back(std::polar(rho, phi));
      }
      return schwarz_blaschke(zeros, truncation_order);
    }
  }
}

Series make_subordinate(const Series& f, const SchwarzFunction& w) {
  return compose(f, w.omega);
}

Series sample_starlike(const PsiModel& psi, const SchwarzFunction& w, int truncation_order) {
  const Series psi_s = psi_series(psi, truncation_order);
  const Series twisted = compose(psi_s, w.omega);
  const Series log_deriv = div_by_z(sub(twisted, Series::constant(1.0, twisted.order())));
  return mul_by_z(exp_series(integrate(log_deriv)));
}

Series sample_convex(const PsiModel& psi, const SchwarzFunction& w, int truncation_order) {
  const Series psi_s = psi_series(psi, truncation_order);
  const Series twisted = compose(psi_s, w.omega);
  const Series log_deriv = div_by_z(sub(twisted, Series::constant(1.0, twisted.order())));
  return integrate(exp_series(integrate(log_deriv)));
}

namespace {

Series negate_argument(const Series& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return Series(std::move(c));
}

/// int_0^z A(t)/t dt for A with zero constant term.
Series integrate_over_t(const Series& a) { return integrate(div_by_z(a)); }

}  // namespace

SamplePair sample_class_pair(ClassTag tag, const PsiModel& psi, std::uint64_t seed,
                             int truncation_order) {
  const int T = truncation_order;
  const SchwarzFunction w1 = random_schwarz(mix(seed, 1), SchwarzFamily::Any, T);
  const SchwarzFunction w2 = random_schwarz(mix(seed, 2), SchwarzFamily::Any, T);
  const SchwarzFunction w3 = random_schwarz(mix(seed, 3), SchwarzFamily::Any, T);
  const Series psi_s = psi_series(psi, T);

  if (is_blend_class(tag)) {
    Series f = sample_starlike(psi, w1, T);
    return {f, f};
  }

  Series f(0);
  switch (tag) {
    case ClassTag::KsClass: {
      // G = -h(z)h(-z)/z for h starlike of order 1/2: an odd starlike
      // function, so |G| <= t/(1-t^2) and its coefficients are at most 1.
      const Series h = sample_starlike(PsiModel::order_alpha(0.5), w1, T);
      const Series g_odd = scale(div_by_z(mul(h, negate_argument(h))), -1.0);
      f = integrate_over_t(mul(g_odd, compose(psi_s, w2.omega)));
      break;
    }
    case ClassTag::ScConjugate: {
      const Series g_star = sample_starlike(psi, w1, T);
      f = integrate_over_t(mul(g_star, compose(psi_s, w2.omega)));
      break;
    }
    case ClassTag::CcConjugate: {
      const Series twisted = compose(psi_s, w1.omega);
      const Series gp = exp_series(
          integrate(div_by_z(sub(twisted, Series::constant(1.0, twisted.order())))));
      f = integrate_over_t(integrate(mul(gp, compose(psi_s, w2.omega))));
      break;
    }
    case ClassTag::CsSymmetric: {
      const ExtremalPair pair = build_extremal_pair(psi, T);
      const Series kprime2 = sqrt_series(substitute_z2(pair.k_psi_prime));
      const Series h_even = compose(section(kprime2, T), w1.omega);
      f = integrate_over_t(integrate(mul(h_even, compose(psi_s, w2.omega))));
      break;
    }
    default:
      throw PreconditionError("no sample construction for this class tag");
  }
  return {f, make_subordinate(f, w3)};
}

CheckOutcome check_series_lemma(const Series& f, const Series& g, int N, int k, double r) {
  if (r < 0.0 || r > 1.0 / 3.0 + 1e-15)
    throw PreconditionError("sections lemma is asserted for r <= 1/3");
  const int upto = std::min({k, f.order(), g.order()});
  double lhs = 0.0, rhs = 0.0;
  double rn = std::pow(r, N);
  for (int n = N; n <= upto; ++n) {
    lhs += std::abs(g.coeff(n)) * rn;
    rhs += std::abs(f.coeff(n)) * rn;
    rn *= r;
  }
  CheckOutcome out;
  out.margin = rhs - lhs;
  out.ok = out.margin >= -kCheckTol;
  return out;
}

CheckOutcome check_weighted_lemma(const Series& f, const Series& g, const WeightSequence& w,
                                  double r) {
  if (r < 0.0 || r > 1.0 / 3.0 + 1e-15)
    throw PreconditionError("weighted lemma is asserted for r <= 1/3");
  const int upto = std::min(f.order(), g.order());
  double lhs = 0.0, rhs = 0.0;
  for (int n = 0; n <= upto; ++n) {
    const double phi = n == 0 ? 0.0 : w.weight(n, r);
    if (phi == 0.0) continue;
    lhs += std::abs(g.coeff(n)) * phi;
    rhs += std::abs(f.coeff(n)) * phi;
  }
  CheckOutcome out;
  out.margin = rhs - lhs;
  out.ok = out.margin >= -kCheckTol;
  return out;
}

CheckOutcome check_growth_bounds(const Series& f, const ExtremalPair& pair, double r,
                                 bool convex, int theta_samples) {
  const Series& bound = convex ? pair.k_psi : pair.f0;
  const double upper = eval(bound, r).value.real();
  const double lower = -eval(bound, -r).value.real();
  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  double theta_at_max = 0.0;
  for (int j = 0; j < theta_samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / theta_samples;
    const double mod = std::abs(eval(f, std::polar(r, theta)).value);
    min_mod = std::min(min_mod, mod);
    if (mod > max_mod) {
      max_mod = mod;
      theta_at_max = theta;
    }
  }
  CheckOutcome out;
  out.theta = theta_at_max;
  const double upper_margin = upper + 1e-8 - max_mod;
  const double lower_margin = min_mod - (lower - 1e-8);
  out.margin = std::min(upper_margin, lower_margin);
  out.ok = out.margin >= 0.0;
  if (!out.ok) out.detail = "growth sandwich violated";
  return out;
}

namespace {

/// Growth-bound series for a section-3 class: |g(z^m)| <= value at r^m.
Series section3_growth_series(const RadiusProblem& p) {
  switch (p.tag) {
    case ClassTag::KsClass: {
      std::vector<Complex> even(static_cast<size_t>(p.num.T) + 1, Complex{});
      for (int n = 0; n <= p.num.T; n += 2) even[static_cast<size_t>(n)] = 1.0;
      return integrate(mul(psi_series(p.psi, p.num.T), Series(std::move(even))));
    }
    case ClassTag::ScConjugate:
      return build_extremal_pair(p.psi, p.num.T).f0;
    case ClassTag::CcConjugate:
      return build_extremal_pair(p.psi, p.num.T).k_psi;
    case ClassTag::CsSymmetric: {
      const ExtremalPair pair = build_extremal_pair(p.psi, p.num.T);
      const Series kprime2 = sqrt_series(substitute_z2(pair.k_psi_prime));
      const Series psi_s = psi_series(p.psi, kprime2.order());
      // K(x) = int (1/s) int psi K' — realized through the nested transform.
      return mul(psi_s, kprime2);
    }
    default:
      throw PreconditionError("not a section-3 class");
  }
}

double section3_growth_value(const RadiusProblem& p, const Series& growth, double x) {
  if (p.tag == ClassTag::CsSymmetric)
    return x == 0.0 ? 0.0 : double_bohr_integral(growth, x).value.real();
  return eval(growth, x).value.real();
}

Complex power_m(Complex z, const MExponent& m) {
  if (m.is_inf) return Complex{};
  Complex p = 1.0;
  for (int i = 0; i < m.value; ++i) p *= z;
  return p;
}

}  // namespace

CheckOutcome check_radius_inequality(const RadiusProblem& p, const RadiusResult& res,
                                     const Series& f, const Series& g, double r,
                                     int theta_samples) {
  if (r > res.rb + 1e-12)
    throw PreconditionError("radius inequality is only claimed for r <= rb");
  CheckOutcome out;

  if (is_blend_class(p.tag)) {
    const double rhs = starlike_distance(p.psi, p.num.quad_tol);
    const Series fp = derivative(f);
    double blend_max = 0.0;
    for (int j = 0; j < theta_samples; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / theta_samples;
      const Complex zm = power_m(std::polar(r, theta), p.m);
      const double blend = p.beta * std::abs(eval(fp, zm).value) +
                           (1.0 - p.beta) * std::abs(eval(f, zm).value);
      if (blend > blend_max) {
        blend_max = blend;
        out.theta = theta;
      }
    }
    double coeff_sum = 0.0;
    for (int n = 1; n <= f.order(); ++n) {
      const double phi = p.weights.weight(n, r);
      if (phi != 0.0) coeff_sum += std::abs(f.coeff(n)) * phi;
    }
    out.margin = rhs - (blend_max + coeff_sum);
    out.ok = out.margin >= -kCheckTol;
    if (!out.ok) out.detail = "theorem sum exceeds the distance bound";
    return out;
  }

  // Section-3 chains: growth of the subordinate against the class bound, and
  // the sections-lemma tail domination.
  const Series growth = section3_growth_series(p);
  const double xm = p.m.apply(r);
  const double growth_bound = section3_growth_value(p, growth, xm);
  double g_max = 0.0;
  for (int j = 0; j < theta_samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / theta_samples;
    const Complex zm = power_m(std::polar(r, theta), p.m);
    const double mod = std::abs(eval(g, zm).value);
    if (mod > g_max) {
      g_max = mod;
      out.theta = theta;
    }
  }
  const double growth_margin = growth_bound + kCheckTol - g_max;
  const double tail_g = tail_sum(g, p.N, r).value;
  const double tail_f = tail_sum(f, p.N, r).value;
  const double tail_margin = tail_f + kCheckTol - tail_g;
  out.margin = std::min(growth_margin, tail_margin);
  out.ok = out.margin >= 0.0;
  if (!out.ok)
    out.detail = growth_margin < tail_margin ? "growth chain violated" : "tail chain violated";
  return out;
}

namespace {

Series random_series(std::mt19937_64& rng, int truncation_order) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<Complex> c(static_cast<size_t>(truncation_order) + 1);
  for (auto& x : c) x = Complex(coeff(rng), coeff(rng));
  return Series(std::move(c));
}

Series rotate(const Series& f, double phi) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  Complex rot = std::polar(1.0, phi);
  Complex p = 1.0;
  for (auto& x : c) {
    x *= p;
    p *= rot;
  }
  return Series(std::move(c));
}

// A majorant with non-decreasing coefficient magnitudes, the shape the tail
// inequalities with N >= 2 require. (For arbitrary analytic f they fail:
// f = z, omega = z^2 sends the linear coefficient past any N >= 2, so the
// subordinate's tail exceeds f's. The N = 1 form holds unconditionally.)
Series random_monotone_majorant(std::mt19937_64& rng, int truncation_order) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double d = unit(rng);
  const PsiModel psi = PsiModel::janowski(d, -1.0);
  const int which = static_cast<int>(rng() % 3);
  Series f = which == 0   ? build_extremal_pair(psi, truncation_order).f0
             : which == 1 ? psi_series(psi, truncation_order)
                          : build_extremal_pair(PsiModel::classical(), truncation_order).k_psi;
  return rotate(f, 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace

SuiteReport run_lemma_suite(std::uint64_t seed, int pairs, int truncation_order) {
  SuiteReport report;
  report.name = "lemma";
  const int ns[] = {1, 2, 3};
  const int ks[] = {8, 32, truncation_order};
  const double rs[] = {0.1, 0.25, 1.0 / 3.0};
  for (int i = 0; i < pairs; ++i) {
    const std::uint64_t s = mix(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    // Every third pair exercises the unrestricted N = 1 statement on a fully
    // random f; the rest draw class majorants and push N up to 3.
    const bool unrestricted = i % 3 == 0;
    const Series f = unrestricted ? random_series(rng, truncation_order)
                                  : random_monotone_majorant(rng, truncation_order);
    const SchwarzFunction w = random_schwarz(mix(s, 77), SchwarzFamily::Any, truncation_order);
    const Series g = make_subordinate(f, w);
    const int N = unrestricted ? 1 : ns[i % 3];
    const int k = ks[(i / 3) % 3];
    const double r = rs[(i / 9) % 3];
    const CheckOutcome out = check_series_lemma(f, g, N, k, r);
    if (out.ok) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failure_lines.push_back(failure_line("lemma", s, r, out));
    }
  }
  return report;
}

SuiteReport run_weighted_suite(std::uint64_t seed, int pairs, int truncation_order) {
  SuiteReport report;
  report.name = "weighted";
  const WeightSequence families[] = {WeightSequence::odd_powers(), WeightSequence::even_powers(),
                                     WeightSequence::power_tail(2)};
  for (int i = 0; i < pairs; ++i) {
    const std::uint64_t s = mix(seed ^ 0xabcdef, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    // Index-masked weights need the monotone-majorant shape for the same
    // reason the N >= 2 tails do; the full power tail does not.
    const bool unrestricted = i % 4 == 0;
    const Series f = unrestricted ? random_series(rng, truncation_order)
                                  : random_monotone_majorant(rng, truncation_order);
    const WeightSequence ws =
        unrestricted ? WeightSequence::power_tail(1) : families[i % 3];
    const SchwarzFunction w = random_schwarz(mix(s, 78), SchwarzFamily::Any, truncation_order);
    const Series g = make_subordinate(f, w);
    const double r = 0.3;
    const CheckOutcome out = check_weighted_lemma(f, g, ws, r);
    if (out.ok) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failure_lines.push_back(failure_line("weighted", s, r, out));
    }
  }
  return report;
}

SuiteReport run_operator_suite(std::uint64_t seed, int trials, int truncation_order,
                               int max_n) {
  SuiteReport report;
  report.name = "operator";
  const double rs[] = {0.1, 1.0 / 3.0, 0.5};
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = mix(seed ^ 0x5eed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Series f = random_series(rng, truncation_order);
    const Series g = random_series(rng, truncation_order);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const Complex alpha(coeff(rng), coeff(rng));
    const double r = rs[i % 3];

    bool ok = true;
    std::string what;
    const auto expect = [&](bool cond, const char* label) {
      if (!cond && ok) {
        ok = false;
        what = label;
      }
    };

    // N = 0: the five Bohr-operator axioms.
    const double mf = tail_sum(f, 0, r).value;
    const double mg = tail_sum(g, 0, r).value;
    expect(mf >= 0.0, "non-negativity");
    expect(tail_sum(Series(truncation_order), 0, r).value == 0.0, "zero iff zero");
    expect(tail_sum(add(f, g), 0, r).value <= mf + mg + kCheckTol, "subadditivity");
    expect(std::abs(tail_sum(scale(f, alpha), 0, r).value - std::abs(alpha) * mf) <=
               kCheckTol * (1.0 + mf),
           "homogeneity");
    expect(tail_sum(mul(f, g), 0, r).value <= mf * mg + kCheckTol, "submultiplicativity");
    expect(std::abs(tail_sum(Series::constant(1.0, truncation_order), 0, r).value - 1.0) <= 1e-15,
           "unit");

    // N >= 1: non-negativity, subadditivity, homogeneity only.
    for (int N = 1; N <= max_n && ok; ++N) {
      const double mfn = tail_sum(f, N, r).value;
      const double mgn = tail_sum(g, N, r).value;
      expect(mfn >= 0.0, "non-negativity N>=1");
      expect(tail_sum(add(f, g), N, r).value <= mfn + mgn + kCheckTol, "subadditivity N>=1");
      expect(std::abs(tail_sum(scale(f, alpha), N, r).value - std::abs(alpha) * mfn) <=
                 kCheckTol * (1.0 + mfn),
             "homogeneity N>=1");
    }

    if (ok) {
      ++report.passed;
    } else {
      ++report.failed;
      CheckOutcome out;
      out.margin = -1.0;
      out.detail = what;
      report.failure_lines.push_back(failure_line("operator", s, r, out));
    }
  }
  return report;
}

SuiteReport run_growth_suite(std::uint64_t seed, int samples, const PsiModel& psi, double r,
                             int truncation_order) {
  SuiteReport report;
  report.name = "growth";
  const ExtremalPair pair = build_extremal_pair(psi, truncation_order);
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t s = mix(seed ^ 0x6a0b, static_cast<std::uint64_t>(i));
    const SchwarzFunction w = random_schwarz(s, SchwarzFamily::Any, truncation_order);
    const bool convex = i % 2 == 1;
    const Series f = convex ? sample_convex(psi, w, truncation_order)
                            : sample_starlike(psi, w, truncation_order);
    const CheckOutcome out = check_growth_bounds(f, pair, r, convex, 64);
    if (out.ok) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failure_lines.push_back(failure_line(convex ? "growth-convex" : "growth", s, r, out));
    }
  }
  return report;
}

std::vector<GoldenInstance> golden_instances(int truncation_order) {
  std::vector<GoldenInstance> out;
  const auto with_num = [&](RadiusProblem p) {
    p.num.T = truncation_order;
    return p;
  };

  RadiusProblem classical_bohr;
  classical_bohr.tag = ClassTag::GenStarlike;
  classical_bohr.psi = PsiModel::classical();
  classical_bohr.m = MExponent::infinite();
  classical_bohr.bounds = CoeffBoundProvider::classical_n();
  out.push_back({"classical-bohr", with_num(classical_bohr)});

  RadiusProblem half;
  half.tag = ClassTag::GenStarlike;
  half.psi = PsiModel::order_alpha(0.5);
  half.m = MExponent::infinite();
  half.bounds = CoeffBoundProvider::order_alpha_product(0.5);
  out.push_back({"order-half", with_num(half)});

  RadiusProblem jan;
  jan.tag = ClassTag::Janowski;
  jan.psi = PsiModel::janowski(1.0, -1.0);
  jan.m = MExponent::infinite();
  out.push_back({"janowski-classical", with_num(jan)});

  RadiusProblem odd;
  odd.tag = ClassTag::ClassicalStarlike;
  odd.psi = PsiModel::classical();
  odd.m = MExponent::infinite();
  odd.weights = WeightSequence::odd_powers();
  out.push_back({"odd-weights", with_num(odd)});

  RadiusProblem ks;
  ks.tag = ClassTag::KsClass;
  ks.psi = PsiModel::classical();
  ks.m = MExponent::infinite();
  out.push_back({"ks", with_num(ks)});

  RadiusProblem sc;
  sc.tag = ClassTag::ScConjugate;
  sc.psi = PsiModel::classical();
  sc.m = MExponent::finite(1);
  out.push_back({"sc", with_num(sc)});

  RadiusProblem cc;
  cc.tag = ClassTag::CcConjugate;
  cc.psi = PsiModel::classical();
  cc.m = MExponent::finite(1);
  out.push_back({"cc", with_num(cc)});

  RadiusProblem cs;
  cs.tag = ClassTag::CsSymmetric;
  cs.psi = PsiModel::classical();
  cs.m = MExponent::finite(1);
  out.push_back({"cs", with_num(cs)});

  return out;
}

SuiteReport run_radius_suite(std::uint64_t seed, int subordinates_per_instance,
                             int theta_samples, int truncation_order) {
  SuiteReport report;
  report.name = "radius";
  for (const GoldenInstance& inst : golden_instances(truncation_order)) {
    const RadiusResult res = solve(inst.problem);
    const double r = 0.9 * res.rb;
    for (int i = 0; i < subordinates_per_instance; ++i) {
      const std::uint64_t s = mix(seed ^ 0x3ad1u, static_cast<std::uint64_t>(i));
      const SamplePair pair =
          sample_class_pair(inst.problem.tag, inst.problem.psi, s, truncation_order);
      const CheckOutcome out =
          check_radius_inequality(inst.problem, res, pair.f, pair.g, r, theta_samples);
      if (out.ok) {
        ++report.passed;
      } else {
        ++report.failed;
        report.failure_lines.push_back(failure_line("radius-" + inst.name, s, r, out));
      }
    }
  }
  return report;
}

}  // namespace gbr
