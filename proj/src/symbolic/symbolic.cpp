#include "fmzv/symbolic/symbolic.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/symbolic/fp2.hpp"

#include <fmt/format.h>

#include <random>
#include <stdexcept>

namespace fmzv {

Fp2Field::Fp2Field(const PrimeCtx& ctx) : p_(ctx.prime()), d_(0) {
  for (u64 d = 2; d < p_; ++d)
    if (detail::pow_mod(d, (p_ - 1) / 2, p_) == p_ - 1) {
      d_ = d;
      break;
    }
  if (d_ == 0)
    throw std::logic_error("no quadratic non-residue found");
}

Fp2 Fp2::inverse() const {
  using detail::mul_mod;
  using detail::sub_mod;
  const u64 norm = sub_mod(mul_mod(re_, re_, p_), mul_mod(d_, mul_mod(im_, im_, p_), p_), p_);
  if (norm == 0)
    throw ZeroInverse("inverse of 0 in F_p^2", 0);
  const u64 inv = detail::inv_mod(norm, p_);
  return make(mul_mod(re_, inv, p_), mul_mod(sub_mod(0, im_, p_), inv, p_));
}

Poly pochhammer_poly(long shift, long scale, unsigned n) {
  Poly out = Poly::constant(1);
  for (unsigned j = 0; j < n; ++j)
    out = out * Poly::linear(make_rational(shift + static_cast<long>(j)), make_rational(scale));
  return out;
}

namespace {

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// (l)_m for a positive integer l.
BigInt rising(unsigned l, unsigned m) {
  BigInt acc = 1;
  for (unsigned j = 0; j < m; ++j)
    acc *= l + j;
  return acc;
}

void require_nl(unsigned n, unsigned l) {
  if (l < 1 || l > n)
    throw std::invalid_argument(fmt::format("A_(n,l) needs 1 <= l <= n, got n = {}, l = {}", n, l));
}

} // namespace

RatFunc a_nl(unsigned n, unsigned l) {
  require_nl(n, l);
  const unsigned m = n - l;
  const long shift = 1 - static_cast<long>(l);
  const BigRational sign = l % 2 == 0 ? 1 : -1;
  Poly num = BigRational(rising(l, m)) * (pochhammer_poly(shift, 1, l - 1) * pochhammer_poly(0, 1, m));
  Poly den = Poly::linear(0, 2) * pochhammer_poly(shift, 2, l - 1) * pochhammer_poly(1, 2, m);
  den = BigRational(factorial(m)) * den;
  return RatFunc(sign * num, den);
}

RatFunc a_nl_product_form(unsigned n, unsigned l) {
  require_nl(n, l);
  const long lo = 1 - static_cast<long>(l);
  const long hi = static_cast<long>(n) - static_cast<long>(l);
  Poly num = Poly::constant(1);
  for (long j = lo; j <= hi - 1; ++j)
    num = num * Poly::linear(make_rational(j), 1);
  Poly den = Poly::constant(1);
  for (long j = lo; j <= hi; ++j)
    den = den * Poly::linear(make_rational(j), 2);
  const BigRational lead = BigRational(binomial(n - 1, l - 1)) * (l % 2 == 0 ? 1 : -1);
  return RatFunc(lead * num, den);
}

namespace {

// Taylor coefficients of 1/(sign*z - l)^e through z^order.
std::vector<BigRational> inverse_linear_power(int sign, unsigned l, unsigned e, unsigned order) {
  // 1/(sign*z - l) = -(1/l) sum_j (sign/l)^j z^j
  std::vector<BigRational> base(order + 1);
  BigRational ratio = make_rational(sign, static_cast<long>(l));
  BigRational term = make_rational(-1, static_cast<long>(l));
  for (unsigned j = 0; j <= order; ++j) {
    base[j] = term;
    term *= ratio;
  }
  std::vector<BigRational> out(order + 1);
  out[0] = 1;
  for (unsigned k = 0; k < e; ++k) {
    std::vector<BigRational> next(order + 1);
    for (unsigned a = 0; a <= order; ++a)
      if (sgn(out[a]) != 0)
        for (unsigned b = 0; a + b <= order; ++b)
          next[a + b] += out[a] * base[b];
    out = std::move(next);
  }
  return out;
}

} // namespace

BiSeries a_n_series(unsigned n, unsigned dx, unsigned dz) {
  if (n == 0)
    throw std::invalid_argument("a_n is defined for n >= 1");

  // Each summand A(+-z)/(x +- z - l) expands as sum_i (-1)^i x^i A(+-z)/(+-z - l)^{i+1}.
  // A(+-z) is a reduced RatFunc; z^v A(+-z) with v = ord_0 of its denominator
  // is expanded exactly, so every summand is an exact Laurent series and the
  // z^{-v} .. z^{-1} coefficients of the sum must vanish identically.
  struct Term {
    int sign;
    unsigned l;
    unsigned v;
    std::vector<BigRational> series; // z^v A(sign z) through z^{dz + v}
  };
  std::vector<Term> terms;
  unsigned max_v = 0;
  for (unsigned l = 1; l <= n; ++l) {
    const RatFunc a = a_nl(n, l);
    for (int sign : {1, -1}) {
      const RatFunc f = sign > 0 ? a : a.reflected();
      const auto den = f.den().coeffs();
      unsigned v = 0;
      while (sgn(den[v]) == 0)
        ++v;
      const Poly unit_den(std::vector<BigRational>(den.begin() + v, den.end()));
      terms.push_back({sign, l, v, series_quotient(f.num(), unit_den, dz + v)});
      max_v = std::max(max_v, v);
    }
  }

  BiSeries out(dx, dz);
  for (unsigned i = 0; i <= dx; ++i) {
    // acc[e + max_v] is the coefficient of z^e.
    std::vector<BigRational> acc(dz + max_v + 1);
    for (const Term& t : terms) {
      const unsigned order = dz + t.v;
      const auto g = inverse_linear_power(t.sign, t.l, i + 1, order);
      for (unsigned a = 0; a <= order; ++a) {
        if (sgn(t.series[a]) == 0)
          continue;
        for (unsigned b = 0; a + b <= order; ++b)
          acc[a + b + max_v - t.v] += t.series[a] * g[b];
      }
    }
    for (unsigned e = 0; e < max_v; ++e)
      if (sgn(acc[e]) != 0)
        throw PoleCancellationFailure(fmt::format("a_{}: coefficient of x^{} keeps a z^-{} term {}", n, i,
                                                  max_v - e, to_string(acc[e])));
    for (unsigned j = 0; j <= dz; ++j)
      out.coeff(i, j) = i % 2 == 0 ? acc[j + max_v] : BigRational(-acc[j + max_v]);
  }
  return out;
}

BigRational li_star_coeff(const Index& ix, unsigned n) {
  if (ix.empty())
    throw std::invalid_argument("li_star_coeff needs depth >= 1");
  if (n == 0)
    return 0;
  auto inv_pow = [](unsigned m, unsigned k) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), m, k);
    return BigRational(BigInt(1), d);
  };
  const auto parts = ix.parts();
  const std::size_t r = parts.size();
  // cum[m]: inner levels summed with outermost inner variable <= m.
  std::vector<BigRational> cum(n + 1);
  for (unsigned m = 1; m <= n; ++m)
    cum[m] = cum[m - 1] + inv_pow(m, parts[r - 1]);
  if (r == 1)
    return inv_pow(n, parts[0]);
  for (std::size_t level = r - 1; level-- > 1;) {
    std::vector<BigRational> next(n + 1);
    for (unsigned m = 1; m <= n; ++m)
      next[m] = next[m - 1] + inv_pow(m, parts[level]) * cum[m];
    cum = std::move(next);
  }
  return inv_pow(n, parts[0]) * cum[n];
}

VerificationRecord ExactCheck::record() const {
  return VerificationRecord::compare(check, 0, to_string(lhs), to_string(rhs))
      .with_ks(k, s)
      .with_detail(params);
}

ExactCheck phi0_coefficient_check(const BiSeries& a_n, unsigned n, unsigned k, unsigned s) {
  if (s < 1 || k < 2 * s)
    throw InfeasibleFamily(fmt::format("I_0({}, {}) is empty", k, s));
  if (k - 2 * s > a_n.dx() || 2 * s - 2 > a_n.dz())
    throw std::invalid_argument("series truncated below the requested coefficient");
  ExactCheck out;
  out.check = "phi0";
  out.params = fmt::format("n={}", n);
  out.k = k;
  out.s = s;
  out.lhs = a_n.coeff(k - 2 * s, 2 * s - 2);
  out.rhs = 0;
  for (const Index& ix : enumerate_I0(k, s))
    out.rhs += li_star_coeff(ix, n);
  return out;
}

ExactCheck phi0_coefficient_check(unsigned n, unsigned k, unsigned s) {
  if (s < 1 || k < 2 * s)
    throw InfeasibleFamily(fmt::format("I_0({}, {}) is empty", k, s));
  return phi0_coefficient_check(a_n_series(n, k - 2 * s, 2 * s - 2), n, k, s);
}

ExactCheck gauss_terminating_check(unsigned m, const BigRational& b, const BigRational& c) {
  for (unsigned j = 0; j < m; ++j)
    if (c + j == 0)
      throw DegenerateParameters(fmt::format("(c)_{} vanishes for c = {}", m, c.get_str()));
  BigRational term = 1, sum = 1;
  const BigRational minus_m = -static_cast<long>(m);
  for (unsigned j = 0; j < m; ++j) {
    term = term * (minus_m + j) * (b + j) / ((c + j) * (j + 1));
    sum += term;
  }
  BigRational num = 1, den = 1;
  for (unsigned j = 0; j < m; ++j) {
    num *= c - b + j;
    den *= c + j;
  }
  ExactCheck out;
  out.check = "gauss";
  out.params = fmt::format("m={} b={} c={}", m, to_string(b), to_string(c));
  out.lhs = sum;
  out.rhs = num / den;
  return out;
}

AnlAgreementReport anl_form_agreement(unsigned n_max) {
  AnlAgreementReport report;
  report.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned l = 1; l <= n; ++l) {
      ++report.pairs_checked;
      const RatFunc poch = a_nl(n, l);
      const RatFunc prod = a_nl_product_form(n, l);
      if (!(poch == prod)) {
        report.first_mismatch = AnlDisagreement{n, l, poch.to_string(), prod.to_string()};
        return report;
      }
    }
  return report;
}

namespace {

Fp2 pochhammer(const Fp2& x, u64 n) {
  Fp2 acc = x.scalar(1);
  for (u64 j = 0; j < n; ++j)
    acc = acc * (x + x.scalar(static_cast<std::int64_t>(j)));
  return acc;
}

struct Degenerate {};

Fp2 divide(const Fp2& num, const Fp2& den) {
  if (den.is_zero())
    throw Degenerate{};
  return num / den;
}

} // namespace

VerificationRecord HypCongruenceReport::record() const {
  auto r = VerificationRecord::compare("hypcong", p, std::to_string(mismatches.size()), "0");
  r.detail = fmt::format("l={} seed={} samples={} evaluated={} skipped={}", l, seed, requested,
                         evaluated, skipped);
  if (!mismatches.empty()) {
    const auto& m = mismatches.front();
    r.detail += fmt::format(" first_mismatch={} z0={} lhs={} rhs={}", m.congruence, m.z0, m.lhs, m.rhs);
  }
  return r;
}

HypCongruenceReport hyp_congruence_check(unsigned l, const PrimeCtx& ctx, unsigned samples, u64 seed) {
  const u64 p = ctx.prime();
  if (l < 1 || static_cast<u64>(l) + 2 > p)
    throw RangeError(fmt::format("hypergeometric congruences need 1 <= l <= p - 2 (l = {}, p = {})", l, p));
  const Fp2Field field(ctx);
  HypCongruenceReport report;
  report.l = l;
  report.p = p;
  report.seed = seed;
  report.requested = samples;

  std::minstd_rand engine(static_cast<std::minstd_rand::result_type>(seed));
  const u64 tail = p - l; // p - l
  const std::int64_t sl = l, sp = static_cast<std::int64_t>(p);

  for (unsigned sample = 0; sample < samples; ++sample) {
    const u64 re = engine() % p;
    const u64 im = 1 + engine() % (p - 1);
    const Fp2 z(field, re, im);
    const Fp2 one = z.scalar(1), two = z.scalar(2);
    try {
      // Truncated sum and the terminating series, each by its own term ratio.
      Fp2 term = one, truncated = z.scalar(0);
      Fp2 f_term = one, f_sum = one;
      for (u64 n = 0; n < tail; ++n) {
        truncated = truncated + term;
        const Fp2 zn = z + z.scalar(static_cast<std::int64_t>(n));
        const Fp2 cn = two * z + z.scalar(static_cast<std::int64_t>(n) + 1);
        const Fp2 nn = z.scalar(static_cast<std::int64_t>(n) + 1);
        term = divide(term * z.scalar(sl + static_cast<std::int64_t>(n)) * zn, cn * nn);
        f_term = divide(f_term * z.scalar(sl - sp + static_cast<std::int64_t>(n)) * zn, cn * nn);
        f_sum = f_sum + f_term;
      }
      const Fp2 tail_term =
          divide(pochhammer(z.scalar(l), tail) * pochhammer(z, tail),
                 pochhammer(two * z + one, tail) * z.scalar(static_cast<std::int64_t>(ctx.factorial(tail))));
      const Fp2 ratio = divide(z.pow(p - 1) - one, (two * z).pow(p - 1) - one);
      const Fp2 shifted_num = pochhammer(two * z - z.scalar(sl - 1), l - 1);

      const Fp2 gauss = divide(pochhammer(z + one, tail), pochhammer(two * z + one, tail));
      const Fp2 gauss_reduced = ratio * divide(shifted_num, pochhammer(z - z.scalar(sl - 1), l - 1));
      const Fp2 sign = (l - 1) % 2 == 0 ? one : -one;
      const Fp2 tail_closed = sign * z * ratio * divide(shifted_num, pochhammer(z - z.scalar(sl), l));

      ++report.evaluated;
      auto expect = [&](const char* which, const Fp2& lhs, const Fp2& rhs) {
        if (!(lhs == rhs))
          report.mismatches.push_back({which, z.to_string(), lhs.to_string(), rhs.to_string()});
      };
      expect("truncation", truncated, f_sum - tail_term);
      expect("gauss-closed-form", f_sum, gauss);
      expect("gauss-closed-form", f_sum, gauss_reduced);
      expect("tail-closed-form", tail_term, tail_closed);
    } catch (const Degenerate&) {
      ++report.skipped;
    }
  }
  if (report.evaluated == 0)
    throw AllSamplesSkipped(fmt::format("no admissible sample for l = {}, p = {}", l, p));
  return report;
}

std::vector<VerificationRecord> run_gauss_suite(unsigned m_max, unsigned pairs, u64 seed) {
  std::minstd_rand engine(static_cast<std::minstd_rand::result_type>(seed));
  auto draw = [&] {
    const long num = static_cast<long>(engine() % 41) - 20;
    const long den = static_cast<long>(engine() % 10) + 1;
    return make_rational(num, den);
  };
  std::vector<VerificationRecord> out;
  for (unsigned pair = 0; pair < pairs; ++pair) {
    const BigRational b = draw();
    const BigRational c = draw();
    for (unsigned m = 0; m <= m_max; ++m) {
      const std::string detail =
          fmt::format("seed={} pair={} m={} b={} c={}", seed, pair, m, to_string(b), to_string(c));
      try {
        out.push_back(gauss_terminating_check(m, b, c).record().with_detail(detail));
      } catch (const DegenerateParameters& e) {
        out.push_back(VerificationRecord::skip("gauss", 0, e.what()).with_detail(detail));
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> run_anl_suite(unsigned n_max) {
  std::vector<VerificationRecord> out;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned l = 1; l <= n; ++l)
      out.push_back(VerificationRecord::compare("anl", 0, a_nl(n, l).to_string(),
                                                a_nl_product_form(n, l).to_string())
                        .with_detail(fmt::format("n={} l={}", n, l)));
  return out;
}

std::vector<VerificationRecord> run_phi0_suite(unsigned n_max, unsigned k_max, unsigned jobs) {
  const unsigned order = std::max(k_max, 14u) - 2;
  // Per n: the phi0 records, then the two series records.
  std::vector<std::vector<VerificationRecord>> coeffs(n_max), series(n_max);
  parallel_for(n_max, jobs, [&](std::size_t slot) {
    const unsigned n = static_cast<unsigned>(slot) + 1;
    const std::string detail = fmt::format("n={} order={}", n, order);
    try {
      const BiSeries s = a_n_series(n, order, order);
      for (unsigned k = 2; k <= k_max; ++k)
        for (unsigned h = 1; 2 * h <= k; ++h)
          coeffs[slot].push_back(phi0_coefficient_check(s, n, k, h).record());
      series[slot].push_back(VerificationRecord::compare("series-pole", 0, "regular", "regular").with_detail(detail));
      series[slot].push_back(
          VerificationRecord::compare("series-even", 0, s.is_even_in_z() ? "even" : "odd terms", "even")
              .with_detail(detail));
    } catch (const PoleCancellationFailure& e) {
      series[slot].push_back(
          VerificationRecord::compare("series-pole", 0, "pole", "regular").with_detail(detail + " " + e.what()));
    }
  });
  std::vector<VerificationRecord> out;
  for (auto& group : coeffs)
    out.insert(out.end(), group.begin(), group.end());
  for (auto& group : series)
    out.insert(out.end(), group.begin(), group.end());
  return out;
}

std::vector<VerificationRecord> run_hypcong_suite(u64 p, unsigned samples, u64 seed,
                                                  std::optional<unsigned> l, unsigned jobs) {
  const PrimeCtx ctx(p);
  const unsigned first = l ? *l : 1;
  const unsigned last = l ? *l : static_cast<unsigned>(p - 2);
  if (first < 1 || first > last)
    throw RangeError(fmt::format("hypergeometric congruences need 1 <= l <= p - 2 (p = {})", p));
  std::vector<VerificationRecord> out(last - first + 1);
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    const unsigned ll = first + static_cast<unsigned>(i);
    try {
      out[i] = hyp_congruence_check(ll, ctx, samples, seed).record();
    } catch (const AllSamplesSkipped& e) {
      out[i] = VerificationRecord::compare("hypcong", p, "all samples skipped", "0");
      out[i].detail = fmt::format("l={} seed={} {}", ll, seed, e.what());
    }
  });
  return out;
}

} // namespace fmzv
