#include "gbr/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gbr {

namespace {

constexpr double kZeroCoeffTol = 1e-12;

void require_finite(std::span<const Complex> cs) {
  for (const Complex& c : cs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw PreconditionError("series coefficient is not finite");
  }
}

void require_finite(std::span<const double> cs) {
  for (double c : cs) {
    if (!std::isfinite(c)) throw PreconditionError("series coefficient is not finite");
    if (c < 0.0) throw PreconditionError("majorant coefficient is negative");
  }
}

}  // namespace

TailEstimate certify_tail(std::span<const double> mags, double absx, double tol) {
  TailEstimate est;
  const int t = static_cast<int>(mags.size()) - 1;
  int last = t;
  while (last >= 0 && mags[static_cast<size_t>(last)] == 0.0) --last;
  if (last < 0) return est;  // identically zero: tail 0, certified

  // Growth rate from consecutive nonzero coefficients in the trailing window.
  const int window_lo = std::max(0, last - 32);
  double rho = 0.0;
  int prev = -1;
  int ratios = 0;
  for (int n = window_lo; n <= last; ++n) {
    if (mags[static_cast<size_t>(n)] == 0.0) continue;
    if (prev >= 0) {
      const double rate = std::pow(mags[static_cast<size_t>(n)] / mags[static_cast<size_t>(prev)],
                                   1.0 / (n - prev));
      rho = std::max(rho, rate);
      ++ratios;
      if (ratios >= 16) break;
    }
    prev = n;
  }
  if (ratios == 0) rho = 1.0;  // single data point: assume non-decaying coefficients

  est.growth_ratio = rho;
  const double q = rho * absx;
  if (q >= 1.0) {
    est.magnitude = std::numeric_limits<double>::infinity();
    est.certified = false;
    return est;
  }
  const double head = mags[static_cast<size_t>(last)] * std::pow(absx, last);
  est.magnitude = head * std::pow(q, t + 1 - last) / (1.0 - q);
  est.certified = est.magnitude <= tol;
  return est;
}

Series::Series(int truncation_order) {
  if (truncation_order < 0) throw PreconditionError("truncation order must be >= 0");
  coeffs_.assign(static_cast<size_t>(truncation_order) + 1, Complex{});
}

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("series needs at least the constant term");
  require_finite(coeffs_);
}

Series Series::constant(Complex c, int truncation_order) {
  Series s(truncation_order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(int truncation_order) { return monomial(1, 1.0, truncation_order); }

Series Series::monomial(int degree, Complex c, int truncation_order) {
  if (degree < 0 || degree > truncation_order)
    throw PreconditionError("monomial degree out of range");
  Series s(truncation_order);
  s.coeffs_[static_cast<size_t>(degree)] = c;
  return s;
}

Series Series::geometric(Complex ratio, int truncation_order) {
  Series s(truncation_order);
  Complex p = 1.0;
  for (int n = 0; n <= truncation_order; ++n) {
    s.coeffs_[static_cast<size_t>(n)] = p;
    p *= ratio;
  }
  return s;
}

Complex Series::coeff(int n) const {
  if (n < 0) throw PreconditionError("negative coefficient index");
  if (n > order()) return Complex{};
  return coeffs_[static_cast<size_t>(n)];
}

Series add(const Series& a, const Series& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(t) + 1);
  for (int n = 0; n <= t; ++n) c[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(t) + 1);
  for (int n = 0; n <= t; ++n) c[static_cast<size_t>(n)] = a.coeff(n) - b.coeff(n);
  return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int i = 0; i <= t; ++i) {
    const Complex ai = a.coeff(i);
    if (ai == Complex{}) continue;
    for (int j = 0; i + j <= t; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
  }
  return Series(std::move(c));
}

Series scale(const Series& a, Complex factor) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (Complex& x : c) x *= factor;
  return Series(std::move(c));
}

Series exp_series(const Series& a) {
  if (std::abs(a.coeff(0)) > kZeroCoeffTol)
    throw PreconditionError("exp_series requires a zero constant term");
  const int t = a.order();
  std::vector<Complex> e(static_cast<size_t>(t) + 1, Complex{});
  e[0] = 1.0;
  for (int n = 1; n <= t; ++n) {
    Complex acc{};
    for (int k = 1; k <= n; ++k)
      acc += static_cast<double>(k) * a.coeff(k) * e[static_cast<size_t>(n - k)];
    e[static_cast<size_t>(n)] = acc / static_cast<double>(n);
  }
  return Series(std::move(e));
}

Series sqrt_series(const Series& a) {
  if (std::abs(a.coeff(0) - Complex{1.0}) > kZeroCoeffTol)
    throw PreconditionError("sqrt_series requires constant term 1");
  const int t = a.order();
  std::vector<Complex> s(static_cast<size_t>(t) + 1, Complex{});
  s[0] = 1.0;
  for (int n = 1; n <= t; ++n) {
    Complex acc{};
    for (int k = 1; k < n; ++k) acc += s[static_cast<size_t>(k)] * s[static_cast<size_t>(n - k)];
    s[static_cast<size_t>(n)] = (a.coeff(n) - acc) / 2.0;
  }
  return Series(std::move(s));
}

Series derivative(const Series& a) {
  const int t = std::max(a.order() - 1, 0);
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int n = 0; n <= t; ++n) c[static_cast<size_t>(n)] = static_cast<double>(n + 1) * a.coeff(n + 1);
  return Series(std::move(c));
}

Series integrate(const Series& a) {
  const int t = a.order() + 1;
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int n = 1; n <= t; ++n) c[static_cast<size_t>(n)] = a.coeff(n - 1) / static_cast<double>(n);
  return Series(std::move(c));
}

Series div_by_z(const Series& a) {
  if (std::abs(a.coeff(0)) > kZeroCoeffTol)
    throw PreconditionError("div_by_z requires a zero constant term");
  const int t = std::max(a.order() - 1, 0);
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int n = 0; n <= t; ++n) c[static_cast<size_t>(n)] = a.coeff(n + 1);
  return Series(std::move(c));
}

Series mul_by_z(const Series& a) {
  const int t = a.order() + 1;
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int n = 1; n <= t; ++n) c[static_cast<size_t>(n)] = a.coeff(n - 1);
  return Series(std::move(c));
}

Series substitute_z2(const Series& a) {
  const int t = 2 * a.order();
  std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex{});
  for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(2 * n)] = a.coeff(n);
  return Series(std::move(c));
}

Series compose(const Series& f, const Series& w) {
  if (std::abs(w.coeff(0)) > kZeroCoeffTol)
    throw PreconditionError("compose requires an inner function with w(0)=0");
  const int t = std::min(f.order(), w.order());
  Series acc = Series::constant(f.coeff(t), t);
  for (int k = t - 1; k >= 0; --k) {
    acc = mul(acc, w);
    Series term = Series::constant(f.coeff(k), t);
    acc = add(acc, term);
  }
  return acc;
}

Series section(const Series& a, int k) {
  if (k < 0 || k > a.order()) throw PreconditionError("section index out of range");
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().begin() + k + 1);
  return Series(std::move(c));
}

namespace {

std::vector<double> magnitudes(const Series& a) {
  std::vector<double> m(static_cast<size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n) m[static_cast<size_t>(n)] = std::abs(a.coeff(n));
  return m;
}

}  // namespace

EvalResult eval(const Series& a, Complex x, double tail_tol) {
  const double absx = std::abs(x);
  if (absx >= 1.0) throw PreconditionError("eval requires |x| < 1");
  EvalResult r;
  Complex v{};
  for (int n = a.order(); n >= 0; --n) v = v * x + a.coeff(n);
  r.value = v;
  r.tail = certify_tail(magnitudes(a), absx, tail_tol);
  return r;
}

TailSumResult tail_sum(const Series& a, int N, double r, double tail_tol) {
  if (N < 0) throw PreconditionError("tail_sum requires N >= 0");
  if (r < 0.0 || r >= 1.0) throw PreconditionError("tail_sum requires r in [0,1)");
  TailSumResult out;
  double rn = std::pow(r, N);
  for (int n = N; n <= a.order(); ++n) {
    out.value += std::abs(a.coeff(n)) * rn;
    rn *= r;
  }
  out.tail = certify_tail(magnitudes(a), r, tail_tol);
  return out;
}

EvalResult double_bohr_integral(const Series& a, double r, double tail_tol) {
  if (r < 0.0 || r >= 1.0) throw PreconditionError("double_bohr_integral requires r in [0,1)");
  EvalResult out;
  double rn1 = r;  // r^{n+1}
  for (int n = 0; n <= a.order(); ++n) {
    out.value += a.coeff(n) * (rn1 / ((n + 1.0) * (n + 1.0)));
    rn1 *= r;
  }
  out.tail = certify_tail(magnitudes(a), r, tail_tol);
  return out;
}

Complex certified_value(const EvalResult& r, double where) {
  if (!r.tail.certified)
    throw DivergenceError("tail estimate not certified below tolerance", where);
  return r.value;
}

double certified_value(const TailSumResult& r, double where) {
  if (!r.tail.certified)
    throw DivergenceError("tail estimate not certified below tolerance", where);
  return r.value;
}

MajorantSeries::MajorantSeries(int truncation_order) {
  if (truncation_order < 0) throw PreconditionError("truncation order must be >= 0");
  coeffs_.assign(static_cast<size_t>(truncation_order) + 1, 0.0);
}

MajorantSeries::MajorantSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("series needs at least the constant term");
  require_finite(coeffs_);
}

double MajorantSeries::coeff(int n) const {
  if (n < 0) throw PreconditionError("negative coefficient index");
  if (n > order()) return 0.0;
  return coeffs_[static_cast<size_t>(n)];
}

MajorantSeries majorant(const Series& a) {
  std::vector<double> c(static_cast<size_t>(a.order()) + 1);
  for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n)] = std::abs(a.coeff(n));
  return MajorantSeries(std::move(c));
}

MajorantSeries tail_part(const MajorantSeries& a, int N) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (int n = 0; n < N && n <= a.order(); ++n) c[static_cast<size_t>(n)] = 0.0;
  return MajorantSeries(std::move(c));
}

MajorantSeries mul(const MajorantSeries& a, const MajorantSeries& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<size_t>(t) + 1, 0.0);
  for (int i = 0; i <= t; ++i) {
    const double ai = a.coeff(i);
    if (ai == 0.0) continue;
    for (int j = 0; i + j <= t; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
  }
  return MajorantSeries(std::move(c));
}

namespace {

TailSumResult transform_sum(const MajorantSeries& a, double r, double tail_tol,
                            double (*term_weight)(int)) {
  if (r < 0.0 || r >= 1.0) throw PreconditionError("transform requires r in [0,1)");
  TailSumResult out;
  for (int n = 0; n <= a.order(); ++n) {
    const double c = a.coeff(n);
    if (c == 0.0) continue;
    out.value += c * std::pow(r, n) * term_weight(n);
  }
  out.tail = certify_tail(a.coeffs(), r, tail_tol);
  // The transforms damp every term by at most a factor <= r <= 1, so the raw
  // coefficient tail bound remains valid for them.
  return out;
}

}  // namespace

TailSumResult eval_majorant(const MajorantSeries& a, double r, double tail_tol) {
  return transform_sum(a, r, tail_tol, [](int) { return 1.0; });
}

TailSumResult integral(const MajorantSeries& a, double r, double tail_tol) {
  TailSumResult out = transform_sum(a, r, tail_tol, [](int n) { return 1.0 / (n + 1.0); });
  out.value *= r;  // each term r^n/(n+1) -> r^{n+1}/(n+1)
  return out;
}

TailSumResult integral_over_t(const MajorantSeries& a, double r, double tail_tol) {
  if (a.coeff(0) != 0.0)
    throw PreconditionError("integral_over_t requires a zero constant term");
  return transform_sum(a, r, tail_tol, [](int n) { return n == 0 ? 0.0 : 1.0 / n; });
}

TailSumResult double_bohr_integral(const MajorantSeries& a, double r, double tail_tol) {
  TailSumResult out =
      transform_sum(a, r, tail_tol, [](int n) { return 1.0 / ((n + 1.0) * (n + 1.0)); });
  out.value *= r;
  return out;
}

}  // namespace gbr
