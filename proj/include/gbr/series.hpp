#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gbr/errors.hpp"

namespace gbr {

using Complex = std::complex<double>;

constexpr double kDefaultTailTol = 1e-9;

/// Ratio-extrapolated bound on the part of a power series that lies beyond
/// the stored truncation. `growth_ratio` is the largest per-power growth rate
/// observed among the trailing nonzero coefficients; when growth_ratio*|x|
/// reaches 1 the bound is infinite and `certified` is false.
struct TailEstimate {
  double magnitude = 0.0;
  double growth_ratio = 0.0;
  bool certified = true;
};

/// Tail estimate for coefficient magnitudes `mags` evaluated at |x| = absx,
/// measured against tolerance `tol`.
TailEstimate certify_tail(std::span<const double> mags, double absx, double tol);

/// Truncated Taylor series with complex coefficients. Index = power of z,
/// truncation order T means T+1 stored coefficients. Immutable after
/// construction; all operations below are pure.
class Series {
 public:
  explicit Series(int truncation_order);
  explicit Series(std::vector<Complex> coeffs);

  static Series constant(Complex c, int truncation_order);
  static Series identity(int truncation_order);  // the series "z"
  static Series monomial(int degree, Complex c, int truncation_order);
  static Series geometric(Complex ratio, int truncation_order);  // sum ratio^n z^n

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int n) const;  // 0 for n > order()
  std::span<const Complex> coeffs() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

// Arithmetic. Binary operations align to the minimum truncation order of the
// operands; they never zero-pad upward.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, Complex factor);

/// exp(a) for a with zero constant term, via the recurrence E' = a'E, E(0)=1.
Series exp_series(const Series& a);

/// Square root with S(0)=1 for a with constant term 1.
Series sqrt_series(const Series& a);

/// Term-wise derivative; truncation order drops by one (floor at 0).
Series derivative(const Series& a);

/// Term-wise antiderivative with zero constant term; order grows by one.
Series integrate(const Series& a);

/// Shift down one power; requires zero constant term.
Series div_by_z(const Series& a);

/// Shift up one power; order grows by one.
Series mul_by_z(const Series& a);

/// a(z^2); order doubles so no coefficient is lost.
Series substitute_z2(const Series& a);

/// f(w(z)) for w with w(0)=0, by Horner over series.
Series compose(const Series& f, const Series& w);

/// First k+1 coefficients of a (k <= order).
Series section(const Series& a, int k);

struct EvalResult {
  Complex value{};
  TailEstimate tail;
};

/// Horner evaluation at |x| < 1 with a tail diagnostic.
EvalResult eval(const Series& a, Complex x, double tail_tol = kDefaultTailTol);

struct TailSumResult {
  double value = 0.0;
  TailEstimate tail;
};

/// Bohr tail operator: sum_{n=N}^{T} |a_n| r^n plus the beyond-truncation
/// guard used by eval.
TailSumResult tail_sum(const Series& a, int N, double r,
                       double tail_tol = kDefaultTailTol);

/// sum_n c_n r^{n+1}/(n+1)^2 — the exact term-wise value of the nested
/// integral int_0^r (1/s) int_0^s a(t) dt ds.
EvalResult double_bohr_integral(const Series& a, double r,
                                double tail_tol = kDefaultTailTol);

/// Throws DivergenceError unless the result's tail is certified.
Complex certified_value(const EvalResult& r, double where);
double certified_value(const TailSumResult& r, double where);

/// Power series with non-negative real coefficients (|a_n| of some Series, or
/// products of such). Used for the majorant-tail integrands of the radius
/// equations.
class MajorantSeries {
 public:
  explicit MajorantSeries(int truncation_order);
  explicit MajorantSeries(std::vector<double> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int n) const;  // 0 for n > order()
  std::span<const double> coeffs() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

MajorantSeries majorant(const Series& a);

/// Zero out coefficients below index N (the M_r^N tail as a function of r).
MajorantSeries tail_part(const MajorantSeries& a, int N);

MajorantSeries mul(const MajorantSeries& a, const MajorantSeries& b);

/// sum c_n r^n.
TailSumResult eval_majorant(const MajorantSeries& a, double r,
                            double tail_tol = kDefaultTailTol);

/// int_0^r a(t) dt = sum c_n r^{n+1}/(n+1).
TailSumResult integral(const MajorantSeries& a, double r,
                       double tail_tol = kDefaultTailTol);

/// int_0^r a(t)/t dt = sum c_n r^n/n; requires c_0 = 0.
TailSumResult integral_over_t(const MajorantSeries& a, double r,
                              double tail_tol = kDefaultTailTol);

/// int_0^r (1/s) int_0^s a(t) dt ds = sum c_n r^{n+1}/(n+1)^2.
TailSumResult double_bohr_integral(const MajorantSeries& a, double r,
                                   double tail_tol = kDefaultTailTol);

}  // namespace gbr
