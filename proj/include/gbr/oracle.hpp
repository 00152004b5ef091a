#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbr/solvers.hpp"

namespace gbr {

/// Schwarz function: an analytic self-map of the disk with omega(0) = 0, so
/// |omega(z)| <= |z|. Every construction here guarantees that by shape:
/// c*z with |c| <= 1, a monomial z^k, or z times a Blaschke product.
struct SchwarzFunction {
  Series omega;
  std::string description;
};

enum class SchwarzFamily { Scalar, Monomial, Blaschke, Any };

SchwarzFunction schwarz_scalar(Complex c, int truncation_order);
SchwarzFunction schwarz_monomial(int degree, int truncation_order);
/// z * prod (z - a_i)/(1 - conj(a_i) z), at most two zeros inside the disk.
SchwarzFunction schwarz_blaschke(const std::vector<Complex>& zeros, int truncation_order);

/// Deterministic for a fixed seed.
SchwarzFunction random_schwarz(std::uint64_t seed, SchwarzFamily family, int truncation_order);

/// g = f(omega(z)); subordinate to f by construction.
Series make_subordinate(const Series& f, const SchwarzFunction& w);

/// A genuine member of S*(psi): z exp int (psi(omega)-1)/t dt.
Series sample_starlike(const PsiModel& psi, const SchwarzFunction& w, int truncation_order);

/// A genuine member of C(psi) (antiderivative of the k'-type sample).
Series sample_convex(const PsiModel& psi, const SchwarzFunction& w, int truncation_order);

/// Subordination pair (f, g) exercising one radius theorem: f is built through
/// the integral representation the theorem's proof uses (so every growth and
/// coefficient chain holds for it) and g = f(omega). For the starlike-family
/// tags g = f. Requires a psi with non-negative Taylor coefficients (E <= 0
/// in the Janowski family) for the pointwise growth chains.
struct SamplePair {
  Series f;
  Series g;
};
SamplePair sample_class_pair(ClassTag tag, const PsiModel& psi, std::uint64_t seed,
                             int truncation_order);

struct CheckOutcome {
  bool ok = true;
  double margin = 0.0;  // smallest slack; negative means a violation
  double theta = 0.0;   // argument of the worst circle sample, when relevant
  std::string detail;
};

/// Sections lemma: sum_{n=N}^{k} |b_n| r^n <= sum_{n=N}^{k} |a_n| r^n for
/// g (coefficients b) subordinate to f, r <= 1/3.
CheckOutcome check_series_lemma(const Series& f, const Series& g, int N, int k, double r);

/// Weighted form: sum |b_n| phi_n(r) <= sum |a_n| phi_n(r), subordinate side
/// dominated by the majorant side.
CheckOutcome check_weighted_lemma(const Series& f, const Series& g, const WeightSequence& w,
                                  double r);

/// Growth sandwich -F(-r) <= |f(z)| <= F(r) on |z| = r for F the class
/// extremal (f0, or k_psi when convex = true).
CheckOutcome check_growth_bounds(const Series& f, const ExtremalPair& pair, double r,
                                 bool convex, int theta_samples);

/// Verifies a solved instance on a concrete pair at |z| = r <= res.rb.
///
/// Starlike-family tags: the theorem sum beta|f'(z^m)| + (1-beta)|f(z^m)| +
/// sum |a_n| phi_n(r), maximized over a theta grid, against the distance
/// lower bound the solver used.
///
/// Section-3 tags: the two majorant chains the proofs rest on — the growth
/// bound max|g(z^m)| <= F(r^m) and the tail bound M_r^N(g) <= M_r^N(f). (The
/// printed equations' R^N term is not an upper bound for the tail of every
/// admissible f — see the operator product property, which only holds for
/// N = 0 — so the summed form is not a sound target for random members.)
CheckOutcome check_radius_inequality(const RadiusProblem& p, const RadiusResult& res,
                                     const Series& f, const Series& g, double r,
                                     int theta_samples);

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failure_lines;  // "FAIL <check> seed=<s> r=<r> theta=<t> margin=<m>"
  bool ok() const { return failed == 0; }
};

/// Randomized sections-lemma suite. Pairs alternate between the
/// unrestricted regime (arbitrary analytic f, N = 1 — the form that holds
/// for every subordination) and class majorants with non-decreasing
/// coefficient magnitudes, where the N >= 2 tails are also dominated. The
/// N >= 2 form is false for arbitrary f (f = z, omega = z^2 moves the whole
/// linear coefficient past N), so the suite samples the pairs the radius
/// theorems actually feed through the lemma.
SuiteReport run_lemma_suite(std::uint64_t seed, int pairs, int truncation_order);
SuiteReport run_weighted_suite(std::uint64_t seed, int pairs, int truncation_order);
/// Bohr-operator axioms: all five at N = 0; non-negativity, subadditivity and
/// homogeneity at N in {1..max_n}.
SuiteReport run_operator_suite(std::uint64_t seed, int trials, int truncation_order,
                               int max_n = 3);
SuiteReport run_growth_suite(std::uint64_t seed, int samples, const PsiModel& psi, double r,
                             int truncation_order);

struct GoldenInstance {
  std::string name;
  RadiusProblem problem;
};
/// The solved instances the verification and acceptance suites revolve
/// around: the four starlike-family reference radii plus one instance per
/// section-3 class, all with classical psi.
std::vector<GoldenInstance> golden_instances(int truncation_order);

SuiteReport run_radius_suite(std::uint64_t seed, int subordinates_per_instance,
                             int theta_samples, int truncation_order);

}  // namespace gbr
