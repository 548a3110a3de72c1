#include <doctest.h>

#include <algorithm>

#include "naive_oracle.hpp"
#include "smatch/automata.hpp"

using namespace smatch;

namespace {

std::vector<Byte> reversed(std::span<const Byte> p) { return {p.rbegin(), p.rend()}; }

}  // namespace

TEST_CASE("factor oracle of a single character") {
  const FactorOracle o = FactorOracle::for_reversed(Pattern::from_string("a"));
  CHECK(o.state_count() == 2);
  CHECK(o.transition_count() == 1);
  CHECK(o.next(0, 'a') == 1);
  CHECK(o.next(0, 'b') == FactorOracle::kNone);
  CHECK(o.next(1, 'a') == FactorOracle::kNone);
}

TEST_CASE("factor oracle reads the reversed pattern to its final state") {
  const FactorOracle o = FactorOracle::for_reversed(Pattern::from_string("ab"));
  const auto s1 = o.next(0, 'b');
  REQUIRE(s1 != FactorOracle::kNone);
  CHECK(o.next(s1, 'a') == 2);
  CHECK(o.accepts(Pattern::from_string("ba").bytes()));
  CHECK_FALSE(o.accepts(Pattern::from_string("ab").bytes()));
}

TEST_CASE("factor oracle accepts every factor of its word") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = naive::uniform(rng, 1, 16);
    const auto p = naive::random_bytes(rng, m, naive::uniform(rng, 1, 4));
    const FactorOracle o = FactorOracle::for_reversed(Pattern(p));
    const auto w = reversed(p);
    CHECK(o.state_count() == m + 1);
    CHECK(o.transition_count() <= 2 * m - 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t len = 1; i + len <= m; ++len) {
        REQUIRE(o.accepts(std::span<const Byte>(w).subspan(i, len)));
      }
    }
  }
}

TEST_CASE("first-transition table composes two oracle steps") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 20; ++k) {
    const auto p = naive::random_bytes(rng, naive::uniform(rng, 2, 20), naive::uniform(rng, 1, 256));
    const FactorOracle o = FactorOracle::for_reversed(Pattern(p));
    const FirstTransitionTable table(o);
    for (unsigned a = 0; a < 256; ++a) {
      const auto q1 = o.next(0, static_cast<Byte>(a));
      for (unsigned b = 0; b < 256; ++b) {
        const auto got = table(static_cast<Byte>(a), static_cast<Byte>(b));
        if (q1 == FactorOracle::kNone) {
          REQUIRE(got == FirstTransitionTable::kFailFirst);
        } else {
          const auto q2 = o.next(q1, static_cast<Byte>(b));
          REQUIRE(got == (q2 == FactorOracle::kNone ? FirstTransitionTable::kFailSecond : q2));
        }
      }
    }
  }
}

TEST_CASE("BOM") {
  CHECK(search_bom(Pattern::from_string("aba"), Text::from_string("ababa")) == Occurrences{0, 2});
  CHECK(search_bom(Pattern::from_string("abcdef"), Text::from_string("abc")).empty());
  naive::fuzz([](const Pattern& p) { return Bom(p); }, 33, 500, naive::kAllSigmas, 4096, 1, 1024);
}

TEST_CASE("EBOM") {
  CHECK(search_ebom(Pattern::from_string("ab"), Text::from_string("abab")) == Occurrences{0, 2});
  CHECK_THROWS_AS(search_ebom(Pattern::from_string("a"), Text::from_string("abab")),
                  ApplicabilityError);
  naive::fuzz([](const Pattern& p) { return Ebom(p); }, 34, 500, naive::kAllSigmas, 4096, 2,
              1024);
}

TEST_CASE("EBOM matches BOM and reads at most one extra character per window") {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 500; ++k) {
    const std::size_t sigma = naive::kAllSigmas[naive::uniform(rng, 0, 8)];
    const auto c = naive::random_case(rng, sigma, 3000, 2, 100);
    const Bom bom(c.pattern);
    const Ebom ebom(c.pattern);
    InstrumentedText tb(c.text);
    InstrumentedText te(c.text);
    REQUIRE(run(bom, tb) == run(ebom, te));
    const std::size_t windows = c.text.size() - c.pattern.size() + 1;
    REQUIRE(te.reads() <= tb.reads() + windows);
  }
}
