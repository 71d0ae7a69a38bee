#include "oracles.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/modfield.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace fmzv;

TEST_SUITE("modfield") {

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 5000; ++n)
    CHECK_MESSAGE(is_prime(n) == oracle::is_prime_naive(n), n);
  CHECK(is_prime(2305843009213693951ULL)); // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));    // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(primes_in_range(10, 30) == std::vector<u64>{11, 13, 17, 19, 23, 29});
}

TEST_CASE("PrimeCtx rejects bad moduli") {
  CHECK_THROWS_AS(PrimeCtx(1), NotPrime);
  CHECK_THROWS_AS(PrimeCtx(2), NotPrime);
  CHECK_THROWS_AS(PrimeCtx(9), NotPrime);
  CHECK_THROWS_AS(PrimeCtx(u64{1} << 61), Error);
  CHECK_NOTHROW(PrimeCtx(2305843009213693951ULL));
}

TEST_CASE("mod_inv examples") {
  const PrimeCtx p7(7), p5(5);
  CHECK(mod_inv(Residue(1, p7)).value() == 1);
  CHECK(mod_inv(Residue(2, p7)).value() == 4);
  CHECK(mod_inv(Residue(3, p5)).value() == 2);
  CHECK_THROWS_AS(mod_inv(Residue(0, p7)), ZeroInverse);
  CHECK_THROWS_AS(mod_inv(Residue(14, p7)), ZeroInverse);
}

TEST_CASE("residue arithmetic and prime mismatch") {
  const PrimeCtx p7(7), p11(11);
  const Residue a(5, p7), b(4, p7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((b - a).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((-a).value() == 2);
  CHECK(a.pow(6).value() == 1);
  CHECK(Residue::from_signed(-1, p7).value() == 6);
  CHECK_THROWS_AS(a + Residue(1, p11), PrimeMismatch);
  CHECK_THROWS_AS((void)(a == Residue(5, p11)), PrimeMismatch);
}

TEST_CASE("batch_inv examples") {
  const PrimeCtx p7(7), p11(11);
  const std::vector<Residue> in{Residue(1, p7), Residue(2, p7), Residue(3, p7)};
  std::vector<u64> got;
  for (const Residue& r : batch_inv(in))
    got.push_back(r.value());
  CHECK(got == std::vector<u64>{1, 4, 5});
  CHECK(batch_inv(std::span<const Residue>{}).empty());

  std::vector<Residue> all;
  for (u64 v = 1; v < 11; ++v)
    all.emplace_back(v, p11);
  std::vector<u64> inv;
  for (const Residue& r : batch_inv(all))
    inv.push_back(r.value());
  std::sort(inv.begin(), inv.end());
  std::vector<u64> expect(10);
  std::iota(expect.begin(), expect.end(), 1);
  CHECK(inv == expect);
}

TEST_CASE("batch_inv reports the zero slot and inverts once") {
  const PrimeCtx p7(7);
  const std::vector<Residue> in{Residue(1, p7), Residue(0, p7), Residue(3, p7)};
  try {
    (void)batch_inv(in);
    FAIL("expected ZeroInverse");
  } catch (const ZeroInverse& e) {
    CHECK(e.position() == 1);
  }
  std::vector<u64> raw{1, 2, 3, 4, 5, 6};
  const u64 before = detail::inversion_count();
  detail::batch_inv_inplace(raw, 7);
  CHECK(detail::inversion_count() - before == 1);
  CHECK(raw == std::vector<u64>{1, 4, 5, 2, 3, 6});
}

TEST_CASE("property: batch_inv matches mod_inv") {
  oracle::Gen gen(11);
  for (u64 p : oracle::odd_primes(5, 199)) {
    const PrimeCtx ctx(p);
    std::vector<Residue> v;
    const auto n = gen.uniform(0, 40);
    for (u64 i = 0; i < n; ++i)
      v.emplace_back(gen.uniform(1, p - 1), ctx);
    const auto inv = batch_inv(v);
    REQUIRE(inv.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(inv[i] == mod_inv(v[i]));
      CHECK(inv[i].value() == oracle::invm(v[i].value(), p));
    }
  }
}

TEST_CASE("pochhammer_mod examples") {
  const PrimeCtx p7(7);
  CHECK(pochhammer_mod(Residue(3, p7), 0).value() == 1);
  CHECK(pochhammer_mod(Residue(2, p7), 3).value() == 3);
  for (u64 m = 0; m < 7; ++m)
    CHECK(pochhammer_mod(Residue(1, p7), m).value() == p7.factorial(m));
  CHECK(pochhammer_mod(Residue(1, p7), 7).value() == 0);
}

TEST_CASE("property: pochhammer splits") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<u64> ps{13, 31, 101, 1000003};
    const PrimeCtx ctx(ps[gen.uniform(0, ps.size() - 1)]);
    const Residue a(gen.uniform(0, ctx.prime() - 1), ctx);
    const u64 n = gen.uniform(0, 20), m = gen.uniform(0, 20);
    CHECK(pochhammer_mod(a, n + m) == pochhammer_mod(a, n) * pochhammer_mod(a + Residue(n, ctx), m));
  }
}

TEST_CASE("binom_mod examples and range") {
  const PrimeCtx p7(7), p5(5);
  CHECK(binom_mod(2, 1, p7).value() == 2);
  CHECK(binom_mod(3, 3, p7).value() == 1);
  CHECK(binom_mod(4, 2, p5).value() == 1);
  CHECK(binom_mod(4, -1, p5).value() == 0);
  CHECK(binom_mod(4, 5, p5).value() == 0);
  CHECK_THROWS_AS(binom_mod(5, 2, p5), RangeError);
}

TEST_CASE("property: Pascal's rule") {
  for (u64 p : oracle::odd_primes(3, 31)) {
    const PrimeCtx ctx(p);
    for (u64 n = 1; n < p; ++n)
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k)
        CHECK(binom_mod(n, k, ctx) == binom_mod(n - 1, k, ctx) + binom_mod(n - 1, k - 1, ctx));
  }
}

TEST_CASE("power_sum_mod examples") {
  CHECK(power_sum_mod(1, PrimeCtx(5)).value() == 0);
  CHECK(power_sum_mod(2, PrimeCtx(7)).value() == 0);
  CHECK(power_sum_mod(6, PrimeCtx(7)).value() == 6);
}

TEST_CASE("property: power sums vanish unless (p-1) | m") {
  for (u64 p : oracle::odd_primes(3, 199)) {
    const PrimeCtx ctx(p);
    for (u64 m = 1; m <= 2 * (p - 1); ++m)
      CHECK(power_sum_mod(m, ctx).value() == ((m % (p - 1) == 0) ? p - 1 : 0));
  }
}

TEST_CASE("factorial tables") {
  const PrimeCtx ctx(101);
  u64 f = 1;
  for (u64 n = 0; n < 101; ++n) {
    if (n)
      f = f * n % 101;
    CHECK(ctx.factorial(n) == f);
    CHECK(ctx.factorial(n) * ctx.inv_factorial(n) % 101 == 1);
  }
  CHECK_THROWS_AS((void)ctx.factorial(101), RangeError);
  const auto inv = inverse_table(ctx);
  for (u64 l = 1; l < 101; ++l)
    CHECK(inv[l] == oracle::invm(l, 101));
}

}
