#pragma once

/**
 * @file symbolic.hpp
 * @brief Exact checks of the generating-series machinery behind the height
 * sum formula for finite multiple zeta values.
 *
 * The star polylogarithms Li*_k(t) summed over I_0(k, s) and graded by
 * x^{k-2s} z^{2s-2} form a series Phi_0 = sum_n a_n t^n with
 *
 *   a_n = sum_{l=1}^{n} A_{n,l}(z)/(x+z-l) + A_{n,l}(-z)/(x-z-l),
 *
 *   A_{n,l}(z) = (-1)^l/(2z) * (z-l+1)_{l-1}/(2z-l+1)_{l-1}
 *                * (l)_m (z)_m / ((2z+1)_m m!),   m = n - l.
 *
 * Everything here is exact over Q, except the hypergeometric congruences,
 * which are sampled in a quadratic extension of F_p.
 */

#include "fmzv/indices.hpp"
#include "fmzv/modfield.hpp"
#include "fmzv/record.hpp"
#include "fmzv/symbolic/biseries.hpp"
#include "fmzv/symbolic/poly.hpp"
#include "fmzv/symbolic/ratfunc.hpp"
#include "fmzv/symbolic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fmzv {

/// (scale*z + shift)_n as a polynomial in z.
Poly pochhammer_poly(long shift, long scale, unsigned n);

/// A_{n,l}(z) built from the Pochhammer form, 1 <= l <= n.
RatFunc a_nl(unsigned n, unsigned l);

/// A_{n,l}(z) built from the explicit product
/// (-1)^l C(n-1, l-1) prod_{j=1-l}^{n-l-1} (z+j) / prod_{j=1-l}^{n-l} (2z+j),
/// with empty products equal to 1.
RatFunc a_nl_product_form(unsigned n, unsigned l);

/// Taylor expansion of a_n at (x, z) = (0, 0) through x^dx z^dz. Throws
/// PoleCancellationFailure if the z = 0 poles of the individual terms do
/// not cancel.
BiSeries a_n_series(unsigned n, unsigned dx = 12, unsigned dz = 12);

/// [t^n] Li*_k(t): sum over n = m_1 >= ... >= m_r >= 1 of prod m_i^{-k_i}.
/// Requires depth >= 1.
BigRational li_star_coeff(const Index& ix, unsigned n);

/// An exact comparison of two rationals.
struct ExactCheck {
  std::string check;
  std::string params;
  std::optional<unsigned> k;
  std::optional<unsigned> s;
  BigRational lhs;
  BigRational rhs;

  bool pass() const { return lhs == rhs; }
  VerificationRecord record() const;
};

/// [x^{k-2s} z^{2s-2}] a_n versus the sum of li_star_coeff over I_0(k, s).
ExactCheck phi0_coefficient_check(unsigned n, unsigned k, unsigned s);
/// Same, reading from an already expanded a_n.
ExactCheck phi0_coefficient_check(const BiSeries& a_n, unsigned n, unsigned k, unsigned s);

/// sum_{j=0}^{m} (-m)_j (b)_j / ((c)_j j!) versus (c-b)_m / (c)_m.
/// Throws DegenerateParameters if (c)_j = 0 for some j <= m.
ExactCheck gauss_terminating_check(unsigned m, const BigRational& b, const BigRational& c);

struct AnlDisagreement {
  unsigned n;
  unsigned l;
  std::string pochhammer_form;
  std::string product_form;
};

struct AnlAgreementReport {
  unsigned n_max = 0;
  unsigned pairs_checked = 0;
  std::optional<AnlDisagreement> first_mismatch;

  bool pass() const { return !first_mismatch.has_value(); }
};

/// Compares a_nl with a_nl_product_form for all 1 <= l <= n <= n_max.
AnlAgreementReport anl_form_agreement(unsigned n_max);

struct HypMismatch {
  std::string congruence; // "truncation", "gauss-closed-form", "tail-closed-form"
  std::string z0;
  std::string lhs;
  std::string rhs;
};

struct HypCongruenceReport {
  unsigned l = 0;
  u64 p = 0;
  u64 seed = 0;
  unsigned requested = 0;
  unsigned evaluated = 0;
  unsigned skipped = 0;
  std::vector<HypMismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
  /// lhs = number of mismatching samples, rhs = "0".
  VerificationRecord record() const;
};

/// Samples z0 = a + b w (b != 0) in F_p[w]/(w^2 - d) from a seeded
/// minstd_rand stream and checks, with F = F(-p+l, z; 2z+1; 1) and
/// T = (l)_{p-l} (z)_{p-l} / ((2z+1)_{p-l} (p-l)!):
///   truncation:        sum_{n<p-l} (l)_n (z)_n/((2z+1)_n n!) = F - T
///   gauss-closed-form: F = (z+1)_{p-l}/(2z+1)_{p-l}
///                        = R(z) (2z-l+1)_{l-1}/(z-l+1)_{l-1}
///   tail-closed-form:  T = (-1)^{l-1} z R(z) (2z-l+1)_{l-1}/(z-l)_l
/// where R(z) = (z^{p-1} - 1)/((2z)^{p-1} - 1). Samples at which a
/// denominator vanishes are counted as skipped. Requires 1 <= l <= p - 2;
/// throws AllSamplesSkipped if nothing could be evaluated.
HypCongruenceReport hyp_congruence_check(unsigned l, const PrimeCtx& ctx, unsigned samples, u64 seed);

// Suites used by the CLI and the acceptance tests.

/// Draws `pairs` rational (b, c) with numerators in [-20, 20] and
/// denominators in [1, 10]; checks every m <= m_max. Degenerate cases are
/// skipped records.
std::vector<VerificationRecord> run_gauss_suite(unsigned m_max, unsigned pairs, u64 seed);
std::vector<VerificationRecord> run_anl_suite(unsigned n_max);
/// phi0 records for n <= n_max, 2 <= k <= k_max, then pole-cancellation and
/// evenness records ("series-pole", "series-even") for n <= n_max. The
/// series for different n are expanded on up to `jobs` threads.
std::vector<VerificationRecord> run_phi0_suite(unsigned n_max, unsigned k_max, unsigned jobs = 1);
/// One record per l (all 1 <= l <= p - 2 when l is nullopt), evaluated on up
/// to `jobs` threads.
std::vector<VerificationRecord> run_hypcong_suite(u64 p, unsigned samples, u64 seed,
                                                  std::optional<unsigned> l = std::nullopt, unsigned jobs = 1);

} // namespace fmzv
