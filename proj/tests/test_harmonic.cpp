#include "oracles.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/harmonic.hpp"

#include <doctest.h>

using namespace fmzv;

namespace {

oracle::Parts parts_of(const Index& ix) { return {ix.parts().begin(), ix.parts().end()}; }

// Every index obtained by merging runs of adjacent parts (2^{r-1} patterns).
std::vector<Index> merges(const Index& ix) {
  std::vector<Index> out;
  const std::size_t r = ix.depth();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
    std::vector<unsigned> parts{ix[0]};
    for (std::size_t i = 1; i < r; ++i) {
      if (mask >> (i - 1) & 1)
        parts.back() += ix[i];
      else
        parts.push_back(ix[i]);
    }
    out.emplace_back(parts);
  }
  return out;
}

} // namespace

TEST_SUITE("harmonic") {

TEST_CASE("mhs examples") {
  const PrimeCtx p5(5), p7(7);
  CHECK(mhs_strict(Index{1}, p5).value() == 0);
  CHECK(mhs_strict(Index{2, 1}, p5).value() == 1);
  CHECK(mhs_strict(Index{1, 2}, p5).value() == 4);
  CHECK(mhs_star(Index{2}, p7).value() == 0);
  CHECK(mhs_star(Index{1, 1}, p5).value() == 0);
  CHECK(mhs_star(Index{2, 1}, p5).value() == 1);
  CHECK(mhs_strict(Index{}, p5).value() == 1);
  CHECK(mhs_star(Index{}, p5).value() == 1);
  // Oracle values the examples were derived from.
  CHECK(oracle::mhs({2, 1}, 5, false) == 1);
  CHECK(oracle::mhs({1, 2}, 5, false) == 4);
  CHECK(oracle::mhs({2, 1}, 5, true) == 1);
}

TEST_CASE("depth-one sums vanish") {
  for (u64 p : oracle::odd_primes(5, 97)) {
    const PrimeCtx ctx(p);
    for (unsigned k = 1; k + 2 <= p && k <= 20; ++k)
      CHECK(mhs_strict(Index{k}, ctx).value() == 0);
  }
}

TEST_CASE("depth >= p gives zero strict sums") {
  const PrimeCtx p5(5);
  CHECK(mhs_strict(Index{1, 1, 1, 1, 1}, p5).value() == 0);
  CHECK(mhs_strict(Index{1, 2, 1, 1, 3, 1}, p5).value() == 0);
  CHECK(mhs_strict(Index{1, 1, 1, 1}, p5).value() == oracle::mhs({1, 1, 1, 1}, 5, false));
}

TEST_CASE("property: mhs agrees with chain enumeration") {
  oracle::Gen gen(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = gen.composition(7);
    const std::vector<u64> ps{5, 7, 11, 13, 17, 19, 23};
    const u64 p = ps[gen.uniform(0, ps.size() - 1)];
    const PrimeCtx ctx(p);
    const Index ix(c);
    CHECK_MESSAGE(mhs_strict(ix, ctx).value() == oracle::mhs(c, p, false), ix.to_string(), " p=", p);
    CHECK_MESSAGE(mhs_star(ix, ctx).value() == oracle::mhs(c, p, true), ix.to_string(), " p=", p);
  }
}

TEST_CASE("property: star equals the sum over merges of strict") {
  for (u64 p : oracle::odd_primes(3, 97)) {
    const PrimeCtx ctx(p);
    for (unsigned w = 1; w <= 7; ++w)
      for (const Index& ix : enumerate_compositions(w)) {
        Residue acc(0, ctx);
        for (const Index& m : merges(ix))
          acc += mhs_strict(m, ctx);
        CHECK(mhs_star(ix, ctx) == acc);
      }
  }
}

TEST_CASE("property: reversal") {
  for (u64 p : oracle::odd_primes(11, 97)) {
    const PrimeCtx ctx(p);
    for (unsigned w = 1; w <= 7; ++w)
      for (const Index& ix : enumerate_compositions(w)) {
        const Residue v = mhs_strict(ix, ctx);
        CHECK(mhs_strict(ix.reversed(), ctx) == (w % 2 == 0 ? v : -v));
      }
  }
}

TEST_CASE("table overloads match") {
  const PrimeCtx ctx(31);
  const InversePowerTable table(ctx, 5);
  CHECK(table.at(2, 1) == 16);
  for (const Index& ix : enumerate_compositions(6)) {
    if (*std::max_element(ix.parts().begin(), ix.parts().end()) > 5)
      continue;
    CHECK(mhs_strict(ix, ctx, table) == mhs_strict(ix, ctx));
    CHECK(mhs_star(ix, ctx, table) == mhs_star(ix, ctx));
  }
}

TEST_CASE("family sum examples") {
  const PrimeCtx p5(5), p7(7), p11(11);
  CHECK(family_sum_star(2, 1, p7).value() == 0);
  CHECK(family_sum_star(3, 1, p7).value() == 3);
  CHECK(family_sum_star(4, 2, p11).value() == 0);
  CHECK(family_sum_alt_strict(2, 1, p7).value() == 0);
  CHECK(family_sum_alt_strict(3, 1, p7).value() == 3);
  CHECK(family_sum_alt_strict(4, 1, p7).value() == 0);
  CHECK(family_sum_star_all(2, 1, p5).value() == 0);
  CHECK(family_sum_star_all(3, 1, p5).value() == 0);
  CHECK(family_sum_star_all(3, 0, p7).value() == 0);
  CHECK_THROWS_AS(family_sum_star(4, 1, p5), RangeError);
  // Oracle: zeta*(3) + zeta*(2,1) at p = 7.
  CHECK((oracle::mhs({3}, 7, true) + oracle::mhs({2, 1}, 7, true)) % 7 == 3);
  CHECK((7 - oracle::mhs({3}, 7, false) + oracle::mhs({2, 1}, 7, false)) % 7 == 3);
  CHECK((oracle::mhs({3}, 5, true) + oracle::mhs({2, 1}, 5, true) + oracle::mhs({1, 2}, 5, true)) % 5 == 0);
}

TEST_CASE("property: DP table equals enumeration") {
  for (u64 p : oracle::odd_primes(11, 199)) {
    const PrimeCtx ctx(p);
    const FamilyTable table = family_sums_dp(8, ctx);
    for (unsigned k = 2; k <= 8; ++k)
      for (unsigned s = 1; 2 * s <= k; ++s) {
        CHECK(table.at(k, s).star == family_sum_star(k, s, ctx));
        CHECK(table.at(k, s).alt_strict == family_sum_alt_strict(k, s, ctx));
      }
  }
  const FamilyTable t7 = family_sums_dp(4, PrimeCtx(7));
  CHECK(t7.at(3, 1).alt_strict.value() == 3);
  CHECK(t7.at(3, 1).star.value() == 3);
  CHECK(t7.at(2, 1).star.value() == 0);
  CHECK_THROWS_AS((void)t7.at(5, 1), std::out_of_range);
}

TEST_CASE("AWindow") {
  const std::vector<u64> primes{11, 13, 17};
  const AWindow a = make_window("zeta(2,1)", primes, [](const PrimeCtx& c) { return mhs_strict(Index{2, 1}, c); });
  CHECK(a.size() == 3);
  CHECK(a.meta() == "zeta(2,1)");
  const std::vector<u64> more{13, 17, 19};
  const AWindow b = make_window("reversed", more, [](const PrimeCtx& c) { return -mhs_strict(Index{1, 2}, c); });
  CHECK(a.agrees_with(b));
  AWindow c("dup");
  c.insert(Residue(1, PrimeCtx(11)));
  CHECK_THROWS(c.insert(Residue(2, PrimeCtx(11))));
}

}
