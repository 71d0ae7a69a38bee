#include "oracles.hpp"

#include "fmzv/errors.hpp"
#include "fmzv/indices.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fmzv;

namespace {

std::set<Index> as_set(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

std::set<Index> brute(unsigned k, unsigned s, bool admissible_only) {
  std::set<Index> out;
  for (const auto& c : oracle::compositions(k))
    if (oracle::height(c) == s && (!admissible_only || c.front() >= 2))
      out.insert(Index(c));
  return out;
}

} // namespace

TEST_SUITE("indices") {

TEST_CASE("stats") {
  CHECK(stats(Index{2, 1}) == IndexStats{3, 2, 1});
  CHECK(stats(Index{2, 2}) == IndexStats{4, 2, 2});
  CHECK(stats(Index{}) == IndexStats{0, 0, 0});
  CHECK(Index{2, 1}.admissible());
  CHECK_FALSE(Index{1, 2}.admissible());
  CHECK_FALSE(Index{}.admissible());
}

TEST_CASE("reverse") {
  CHECK(reverse(Index{2, 1}) == Index{1, 2});
  CHECK(reverse(Index{3}) == Index{3});
  CHECK(reverse(Index{}) == Index{});
}

TEST_CASE("parse and print") {
  CHECK(Index::parse("2,1") == Index{2, 1});
  CHECK(Index::parse("") == Index{});
  CHECK(Index{3, 1, 2}.to_string() == "3,1,2");
  CHECK(Index{}.to_string().empty());
  for (const char* bad : {"2,", ",1", "0", "2,0", "a", "2 ,1", "1,,2", "-1", "99999999999999999999"})
    CHECK_THROWS_AS(Index::parse(bad), ParseError);
  CHECK_THROWS_AS(Index(std::vector<unsigned>{2, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_I0 examples") {
  CHECK(enumerate_I0(2, 1) == std::vector<Index>{Index{2}});
  CHECK(as_set(enumerate_I0(4, 1)) == std::set<Index>{Index{2, 1, 1}, Index{3, 1}, Index{4}});
  CHECK(enumerate_I0(3, 2).empty());
  CHECK(enumerate_I0(0, 0).empty());
  CHECK(enumerate_I0(5, 0).empty());
}

TEST_CASE("enumerate_I examples") {
  CHECK(enumerate_I(2, 1) == std::vector<Index>{Index{2}});
  CHECK(as_set(enumerate_I(3, 1)) == std::set<Index>{Index{3}, Index{2, 1}, Index{1, 2}});
  CHECK(enumerate_I(3, 0) == std::vector<Index>{Index{1, 1, 1}});
  CHECK(enumerate_I(0, 0) == std::vector<Index>{Index{}});
}

TEST_CASE("property: I0 counts and membership") {
  for (unsigned k = 2; k <= 14; ++k) {
    std::set<Index> admissible;
    for (unsigned s = 1; 2 * s <= k; ++s) {
      const auto got = enumerate_I0(k, s);
      CHECK(got.size() == oracle::binom(k - 1, 2 * s - 1).get_ui());
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(as_set(got).size() == got.size());
      for (const Index& ix : got) {
        CHECK(ix.parts().front() >= 2);
        CHECK(ix.weight() == k);
        CHECK(ix.height() == s);
      }
      if (k <= 12)
        CHECK(as_set(got) == brute(k, s, true));
      admissible.insert(got.begin(), got.end());
    }
    if (k <= 12) {
      std::set<Index> all_admissible;
      for (const auto& c : oracle::compositions(k))
        if (c.front() >= 2)
          all_admissible.insert(Index(c));
      CHECK(admissible == all_admissible);
    }
  }
}

TEST_CASE("property: I contains I0 and differs by first part 1") {
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned s = 0; 2 * s <= k; ++s) {
      const auto i0 = as_set(enumerate_I0(k, s));
      const auto all = as_set(enumerate_I(k, s));
      CHECK(all == brute(k, s, false));
      CHECK(std::includes(all.begin(), all.end(), i0.begin(), i0.end()));
      for (const Index& ix : all)
        CHECK((i0.count(ix) == 0) == (ix.parts().front() == 1));
    }
}

TEST_CASE("compositions and streaming") {
  for (unsigned k = 1; k <= 12; ++k) {
    const auto c = enumerate_compositions(k);
    CHECK(c.size() == (std::size_t{1} << (k - 1)));
    CHECK(std::is_sorted(c.begin(), c.end()));
  }
  // The stream yields the same sequence the vector helpers materialize.
  IndexStream stream(9, 3, 2);
  std::vector<Index> streamed;
  while (auto ix = stream.next())
    streamed.push_back(*ix);
  CHECK(streamed == enumerate_I0(9, 3));
  // A large family is walked without materializing it.
  IndexStream big(26, 5, 2);
  std::size_t count = 0;
  while (big.next())
    ++count;
  CHECK(count == oracle::binom(25, 9).get_ui());
}

}
