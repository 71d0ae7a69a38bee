#include "oracles.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/symbolic/fp2.hpp"
#include "fmzv/symbolic/symbolic.hpp"

#include <doctest.h>

using namespace fmzv;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

Poly z_poly(std::vector<BigRational> c) { return Poly(std::move(c)); }

// a_n by the slow route: for each x^i, sum the exact RatFuncs over l, reduce,
// then Taylor-expand the reduced quotient.
BiSeries a_n_by_common_denominator(unsigned n, unsigned dx, unsigned dz) {
  BiSeries out(dx, dz);
  for (unsigned i = 0; i <= dx; ++i) {
    RatFunc c;
    for (unsigned l = 1; l <= n; ++l) {
      const RatFunc a = a_nl(n, l);
      Poly up = Poly::constant(1), um = Poly::constant(1);
      for (unsigned e = 0; e <= i; ++e) {
        up = up * Poly::linear(-static_cast<long>(l), 1);
        um = um * Poly::linear(-static_cast<long>(l), -1);
      }
      c = c + a * RatFunc(Poly::constant(1), up) + a.reflected() * RatFunc(Poly::constant(1), um);
    }
    if (i % 2)
      c = -c;
    REQUIRE(c.regular_at_zero());
    const auto t = series_quotient(c.num(), c.den(), dz);
    for (unsigned j = 0; j <= dz; ++j)
      out.coeff(i, j) = t[j];
  }
  return out;
}

} // namespace

TEST_SUITE("symbolic") {

TEST_CASE("poly arithmetic") {
  const Poly a = z_poly({q(1), q(1)});  // 1 + z
  const Poly b = z_poly({q(-1), q(1)}); // -1 + z
  CHECK((a * b) == z_poly({q(-1), q(0), q(1)}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.reflected() == z_poly({q(1), q(-1)}));
  CHECK(a.eval(q(1, 2)) == q(3, 2));
  const auto [quo, rem] = divmod(z_poly({q(-1), q(0), q(1)}), a);
  CHECK(quo == b);
  CHECK(rem.is_zero());
  CHECK_THROWS_AS(exact_quotient(a, b), std::domain_error);
  CHECK(gcd(a * b, a * a) == a);
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(z_poly({q(2), q(4)}), Poly()) == z_poly({q(1, 2), q(1)}));
  CHECK(z_poly({q(-1), q(0), q(1)}).to_string() == "z^2 - 1");
}

TEST_CASE("property: gcd divides both and is maximal") {
  oracle::Gen gen(99);
  auto random_poly = [&](unsigned deg) {
    std::vector<BigRational> c;
    for (unsigned i = 0; i <= deg; ++i)
      c.push_back(q(static_cast<long>(gen.uniform(0, 20)) - 10, static_cast<long>(gen.uniform(1, 6))));
    c.back() = q(static_cast<long>(gen.uniform(1, 5)));
    return Poly(c);
  };
  for (int t = 0; t < 60; ++t) {
    const Poly common = random_poly(static_cast<unsigned>(gen.uniform(0, 3)));
    const Poly a = common * random_poly(static_cast<unsigned>(gen.uniform(0, 4)));
    const Poly b = common * random_poly(static_cast<unsigned>(gen.uniform(0, 4)));
    const Poly g = gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(divmod(g, gcd(common, common)).second.is_zero());
    CHECK(g.leading() == 1);
  }
}

TEST_CASE("series_quotient") {
  // 1/(1 - z) = 1 + z + z^2 + ...
  const auto s = series_quotient(Poly::constant(1), z_poly({q(1), q(-1)}), 4);
  CHECK(s == std::vector<BigRational>(5, q(1)));
  CHECK_THROWS_AS(series_quotient(Poly::constant(1), z_poly({q(0), q(1)}), 3), std::domain_error);
}

TEST_CASE("ratfunc normal form") {
  const RatFunc f(z_poly({q(-1), q(0), q(1)}), z_poly({q(2), q(2)})); // (z^2-1)/(2z+2)
  CHECK(f.num() == z_poly({q(-1, 2), q(1, 2)}));
  CHECK(f.den() == Poly::constant(1));
  CHECK(RatFunc(Poly(), z_poly({q(3), q(1)})).den() == Poly::constant(1));
  CHECK_THROWS_AS(RatFunc(Poly::constant(1), Poly()), std::domain_error);
  const RatFunc g(Poly::constant(1), z_poly({q(0), q(1)}));
  CHECK((g - g) == RatFunc());
  CHECK((g * RatFunc(z_poly({q(0), q(1)}))) == RatFunc(Poly::constant(1)));
  CHECK_FALSE(g.regular_at_zero());
  CHECK(g.reflected() == -g);
}

TEST_CASE("biseries") {
  BiSeries a(2, 2), b(2, 2);
  a.coeff(0, 0) = 1;
  a.coeff(1, 0) = 1; // 1 + x
  b.coeff(0, 0) = 1;
  b.coeff(0, 1) = -1; // 1 - z
  const BiSeries c = a * b;
  CHECK(c.coeff(1, 1) == -1);
  CHECK(c.coeff(0, 0) == 1);
  CHECK_FALSE(c.is_even_in_z());
  CHECK(a.is_even_in_z());
  CHECK_THROWS_AS(a + BiSeries(3, 2), std::invalid_argument);
}

TEST_CASE("pochhammer_poly examples") {
  CHECK(pochhammer_poly(0, 1, 0) == Poly::constant(1));
  CHECK(pochhammer_poly(1, 2, 2) == z_poly({q(2), q(6), q(4)}));
  CHECK(pochhammer_poly(-1, 1, 3) == z_poly({q(0), q(-1), q(0), q(1)}));
  oracle::Gen gen(3);
  for (int t = 0; t < 50; ++t) {
    const long shift = static_cast<long>(gen.uniform(0, 10)) - 5, scale = static_cast<long>(gen.uniform(0, 6)) - 3;
    const unsigned n = static_cast<unsigned>(gen.uniform(0, 7));
    const BigRational z = q(static_cast<long>(gen.uniform(0, 20)) - 10, static_cast<long>(gen.uniform(1, 5)));
    CHECK(pochhammer_poly(shift, scale, n).eval(z) == oracle::rising(BigRational(scale) * z + shift, n));
  }
}

TEST_CASE("A_{n,l} examples") {
  const Poly z = z_poly({q(0), q(1)});
  CHECK(a_nl(1, 1) == RatFunc(Poly::constant(-1), Poly::linear(0, 2)));
  CHECK(a_nl(2, 1) == RatFunc(Poly::constant(-1), Poly::linear(2, 4)));
  CHECK(a_nl(2, 2) == RatFunc(Poly::linear(-1, 1), Poly::linear(0, 2) * Poly::linear(-1, 2)));
  CHECK_THROWS_AS(a_nl(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(a_nl_product_form(2, 0), std::invalid_argument);
  const auto report = anl_form_agreement(6);
  CHECK(report.pass());
  CHECK(report.pairs_checked == 21);
}

TEST_CASE("a_1 matches its closed form") {
  // a_1 = 1/((1-x)^2 - z^2) = sum_j z^{2j} (1-x)^{-2j-2}.
  const BiSeries a1 = a_n_series(1, 6, 6);
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 6; ++j) {
      const BigRational expect = j % 2 ? BigRational(0) : BigRational(oracle::binom(i + j + 1, i));
      CHECK_MESSAGE(a1.coeff(i, j) == expect, "i=", i, " j=", j);
    }
}

TEST_CASE("a_n series matches the common-denominator expansion") {
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(a_n_series(n, 5, 7) == a_n_by_common_denominator(n, 5, 7));
}

TEST_CASE("a_n series: pole cancellation and evenness") {
  for (unsigned n = 1; n <= 8; ++n) {
    const BiSeries s = a_n_series(n);
    CHECK(s.dx() == 12);
    CHECK(s.is_even_in_z());
  }
  CHECK(a_n_series(2).coeff(0, 0) == q(1, 4));
  CHECK_THROWS_AS(a_n_series(0), std::invalid_argument);
}

TEST_CASE("li_star examples") {
  CHECK(li_star_coeff(Index{2}, 3) == q(1, 9));
  CHECK(li_star_coeff(Index{1, 1}, 2) == q(3, 4));
  CHECK(li_star_coeff(Index{3, 1, 2}, 1) == 1);
  CHECK_THROWS_AS(li_star_coeff(Index{}, 2), std::invalid_argument);
  oracle::Gen gen(17);
  for (int t = 0; t < 100; ++t) {
    const auto c = gen.composition(7);
    const unsigned n = static_cast<unsigned>(gen.uniform(1, 7));
    CHECK(li_star_coeff(Index(c), n) == oracle::li_star(c, n));
  }
}

TEST_CASE("phi0 coefficient examples") {
  const auto a = phi0_coefficient_check(1, 4, 1);
  CHECK(a.lhs == 3);
  CHECK(a.rhs == 3);
  const auto b = phi0_coefficient_check(2, 2, 1);
  CHECK(b.lhs == q(1, 4));
  CHECK(b.pass());
  const auto c = phi0_coefficient_check(3, 3, 1);
  const BigRational expect = q(1, 27) + q(1, 9) * (q(1) + q(1, 2) + q(1, 3));
  CHECK(c.lhs == expect);
  CHECK(c.rhs == expect);
  CHECK(c.record().k == 3u);
  CHECK(c.record().lhs == to_string(expect));
  CHECK_THROWS_AS(phi0_coefficient_check(1, 3, 2), InfeasibleFamily);
}

TEST_CASE("property: phi0 coefficients for n <= 5, k <= 8") {
  for (unsigned n = 1; n <= 5; ++n) {
    const BiSeries s = a_n_series(n, 6, 6);
    for (unsigned k = 2; k <= 8; ++k)
      for (unsigned sh = 1; 2 * sh <= k; ++sh)
        CHECK_MESSAGE(phi0_coefficient_check(s, n, k, sh).pass(), "n=", n, " k=", k, " s=", sh);
  }
}

TEST_CASE("gauss terminating formula") {
  CHECK(gauss_terminating_check(0, q(3, 7), q(-5, 2)).lhs == 1);
  const auto m1 = gauss_terminating_check(1, q(2, 3), q(5, 4));
  CHECK(m1.lhs == 1 - q(2, 3) / q(5, 4));
  const auto m2 = gauss_terminating_check(2, q(1), q(3));
  CHECK(m2.lhs == q(1, 2));
  CHECK(m2.rhs == q(1, 2));
  CHECK(oracle::gauss_sum(2, 1, 3) == q(1, 2));
  CHECK_THROWS_AS(gauss_terminating_check(3, q(1), q(-2)), DegenerateParameters);
  CHECK_NOTHROW(gauss_terminating_check(2, q(1), q(-2)));
  oracle::Gen gen(8);
  for (int t = 0; t < 200; ++t) {
    const unsigned m = static_cast<unsigned>(gen.uniform(0, 8));
    const BigRational b = q(static_cast<long>(gen.uniform(0, 40)) - 20, static_cast<long>(gen.uniform(1, 10)));
    const BigRational c = q(static_cast<long>(gen.uniform(0, 40)) - 20, static_cast<long>(gen.uniform(1, 10)));
    try {
      const auto r = gauss_terminating_check(m, b, c);
      CHECK(r.pass());
      CHECK(r.lhs == oracle::gauss_sum(m, b, c));
    } catch (const DegenerateParameters&) {
      CHECK(sgn(oracle::rising(c, m)) == 0);
    }
  }
}

TEST_CASE("gauss suite is reproducible") {
  const auto a = run_gauss_suite(8, 25, 42);
  const auto b = run_gauss_suite(8, 25, 42);
  REQUIRE(a.size() == 25 * 9);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK_FALSE(a[i].failed());
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].detail == b[i].detail);
  }
}

TEST_CASE("F_p^2 arithmetic") {
  const PrimeCtx ctx(11);
  const Fp2Field field(ctx);
  CHECK(oracle::powm(field.nonresidue(), 5, 11) == 10);
  const Fp2 w(field, 0, 1);
  CHECK(w * w == Fp2(field, field.nonresidue()));
  oracle::Gen gen(1);
  for (int t = 0; t < 100; ++t) {
    const Fp2 a(field, gen.uniform(0, 10), gen.uniform(0, 10));
    if (a.is_zero()) {
      CHECK_THROWS_AS(a.inverse(), ZeroInverse);
      continue;
    }
    CHECK(a * a.inverse() == Fp2(field, 1));
    CHECK(a.pow(120) == Fp2(field, 1)); // |F_121^*| = 120
  }
}

TEST_CASE("hypergeometric congruences") {
  for (u64 p : {11, 13, 17}) {
    const PrimeCtx ctx(p);
    for (unsigned l = 1; l + 2 <= p; ++l) {
      const auto r = hyp_congruence_check(l, ctx, 20, 7);
      CHECK_MESSAGE(r.pass(), "p=", p, " l=", l);
      CHECK(r.evaluated + r.skipped == 20);
      CHECK(r.evaluated > 0);
    }
  }
  CHECK_THROWS_AS(hyp_congruence_check(0, PrimeCtx(11), 5, 1), RangeError);
  CHECK_THROWS_AS(hyp_congruence_check(10, PrimeCtx(11), 5, 1), RangeError);
  CHECK_THROWS_AS(hyp_congruence_check(1, PrimeCtx(11), 0, 1), AllSamplesSkipped);
}

TEST_CASE("symbolic suites") {
  for (const auto& r : run_anl_suite(6))
    CHECK_FALSE(r.failed());
  const auto phi = run_phi0_suite(4, 6);
  std::size_t poles = 0, evens = 0;
  for (const auto& r : phi) {
    CHECK_FALSE(r.failed());
    poles += r.check == "series-pole";
    evens += r.check == "series-even";
  }
  CHECK(poles == 4);
  CHECK(evens == 4);
  const auto hyp = run_hypcong_suite(13, 20, 7);
  CHECK(hyp.size() == 11);
  for (const auto& r : hyp)
    CHECK_FALSE(r.failed());
  CHECK(run_hypcong_suite(13, 20, 7, 11u).size() == 1);
}

}
