#include <doctest.h>

#include "naive_oracle.hpp"
#include "smatch/bench.hpp"
#include "smatch/comparison.hpp"

using namespace smatch;

namespace {

Occurrences hits(std::string_view p, std::string_view t, Occurrences (*f)(const Pattern&, const Text&)) {
  return f(Pattern::from_string(p), Text::from_string(t));
}

template <class S>
auto maker() {
  return [](const Pattern& p) { return S(p); };
}

auto hash_maker(unsigned q) {
  return [q](const Pattern& p) { return HashQ(q, p); };
}

}  // namespace

TEST_CASE("Horspool") {
  CHECK(hits("aba", "ababa", search_hor) == Occurrences{0, 2});
  CHECK(hits("zz", "abab", search_hor).empty());
  naive::fuzz(maker<Horspool>(), 11, 500, naive::kAllSigmas, 2048, 1, 64);
}

TEST_CASE("Quick Search") {
  CHECK(hits("aba", "ababa", search_qs) == Occurrences{0, 2});
  CHECK(hits("zz", "abab", search_qs).empty());
  naive::fuzz(maker<QuickSearch>(), 12, 500, naive::kAllSigmas, 2048, 1, 64);
}

TEST_CASE("Berry-Ravindran") {
  CHECK(hits("ab", "abab", search_br) == Occurrences{0, 2});
  CHECK(hits("abcde", "abc", search_br).empty());
  naive::fuzz(maker<BerryRavindran>(), 13, 500, naive::kAllSigmas, 2048, 1, 64);
}

TEST_CASE("TVSBS") {
  CHECK(hits("abcab", "abcab", search_tvsbs) == Occurrences{0});
  CHECK(hits("aa", "bbbb", search_tvsbs).empty());
  CHECK(hits("a", "aba", search_tvsbs) == Occurrences{0, 2});
  naive::fuzz(maker<Tvsbs>(), 14, 500, naive::kAllSigmas, 2048, 1, 64);
}

TEST_CASE("FJS") {
  CHECK(hits("aaa", "aaaaa", search_fjs) == Occurrences{0, 1, 2});
  CHECK(hits("ab", "ba", search_fjs).empty());
  naive::fuzz(maker<Fjs>(), 15, 500, naive::kAllSigmas, 2048, 1, 64);

  SUBCASE("periodic patterns") {
    std::mt19937_64 rng(16);
    for (int k = 0; k < 200; ++k) {
      std::string p;
      const std::size_t reps = naive::uniform(rng, 1, 20);
      for (std::size_t r = 0; r < reps; ++r) p += "ab";
      std::string t;
      const std::size_t n = naive::uniform(rng, 1, 400);
      for (std::size_t i = 0; i < n; ++i) t += naive::uniform(rng, 0, 9) == 0 ? 'b' : "ab"[i % 2];
      const Pattern pp = Pattern::from_string(p);
      const Text tt = Text::from_string(t);
      REQUIRE(search_fjs(pp, tt) == naive::find_all(pp, tt));
    }
  }
}

TEST_CASE("HASHq") {
  CHECK(search_hashq(3, Pattern::from_string("abc"), Text::from_string("aabcc")) ==
        Occurrences{1});
  CHECK_THROWS_AS(search_hashq(5, Pattern::from_string("abcd"), Text::from_string("abcd")),
                  ApplicabilityError);
  CHECK_THROWS_AS(HashQ(8, Pattern::from_string("abcdefg")), ApplicabilityError);
  CHECK_THROWS_AS(HashQ(4, Pattern::from_string("abcdefg")), std::invalid_argument);
  naive::fuzz(hash_maker(3), 17, 500, naive::kAllSigmas, 4096, 3, 1024);
  naive::fuzz(hash_maker(5), 18, 300, naive::kAllSigmas, 4096, 5, 1024);
  naive::fuzz(hash_maker(8), 19, 300, naive::kAllSigmas, 4096, 8, 1024);
}

TEST_CASE("SSEF") {
  SUBCASE("all-zero pattern in all-zero text") {
    const Pattern p(std::vector<Byte>(32, 0));
    const Text t(std::vector<Byte>(1024, 0), "zeros");
    const Occurrences got = search_ssef(p, t);
    CHECK(got.size() == 993);
    CHECK(got == naive::find_all(p, t));
  }
  CHECK_THROWS_AS(search_ssef(Pattern::from_string("0123456789abcdef"), Text::from_string("x")),
                  ApplicabilityError);
  naive::fuzz(maker<Ssef>(), 20, 500, {2, 4, 64}, 4096, 32, 1024);
  for (unsigned w : {32u, 128u}) {
    naive::fuzz([w](const Pattern& p) { return Ssef(p, WordSpec(w)); }, 21 + w, 200,
                naive::kAllSigmas, 4096, 32, 1024);
  }
}

TEST_CASE("SSEF block filter has no false negatives") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const auto p = naive::random_bytes(rng, naive::uniform(rng, 32, 300), 4);
    const Ssef s{Pattern(p)};
    const unsigned w = s.filter().width();
    CHECK(w <= 64);
    CHECK(s.stride() >= w);
    for (std::size_t off = 0; off + w <= p.size(); ++off) {
      const auto fp = BlockFilter::fingerprint(p, off, w);
      bool listed = false;
      s.filter().for_each_offset(fp, [&](std::size_t o) { listed = listed || o == off; });
      REQUIRE(listed);
    }
  }
}

TEST_CASE("shift tables stay within their ranges") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = naive::uniform(rng, 1, 40);
    const auto p = naive::random_bytes(rng, m, naive::uniform(rng, 1, 256));
    const auto hor = BadCharTable::horspool(p);
    const auto qs = BadCharTable::quick_search(p);
    const PairShiftTable br(p);
    for (unsigned a = 0; a < 256; ++a) {
      REQUIRE(hor[static_cast<Byte>(a)] >= 1);
      REQUIRE(hor[static_cast<Byte>(a)] <= m);
      REQUIRE(qs[static_cast<Byte>(a)] >= 1);
      REQUIRE(qs[static_cast<Byte>(a)] <= m + 1);
      for (unsigned b = 0; b < 256; ++b) {
        const auto v = br(static_cast<Byte>(a), static_cast<Byte>(b));
        REQUIRE(v >= 1);
        REQUIRE(v <= m + 2);
      }
    }
    if (m >= 3) {
      const QGramHash h(3, p);
      for (std::size_t x = 0; x < QGramHash::kSize; ++x) {
        REQUIRE(h.shift(static_cast<std::uint16_t>(x)) <= m - 3 + 1);
      }
      CHECK(h.shift(h.hash(p, m - 1)) == 0);
      CHECK(h.shift_after_match() >= 1);
    }
  }
}

TEST_CASE("planted occurrences are never skipped") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 300; ++k) {
    const std::size_t sigma = naive::kAllSigmas[naive::uniform(rng, 0, 8)];
    const std::size_t m = naive::uniform(rng, 32, 200);
    auto t = naive::random_bytes(rng, naive::uniform(rng, m, 3000), sigma);
    const auto p = naive::random_bytes(rng, m, sigma);
    const std::size_t at = naive::uniform(rng, 0, t.size() - m);
    std::copy(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(at));
    const Pattern pp(p);
    const Text tt(t);
    auto has = [&](const Occurrences& o) { return std::find(o.begin(), o.end(), at) != o.end(); };
    REQUIRE(has(search_hor(pp, tt)));
    REQUIRE(has(search_qs(pp, tt)));
    REQUIRE(has(search_br(pp, tt)));
    REQUIRE(has(search_tvsbs(pp, tt)));
    REQUIRE(has(search_fjs(pp, tt)));
    REQUIRE(has(search_hashq(3, pp, tt)));
    REQUIRE(has(search_hashq(5, pp, tt)));
    REQUIRE(has(search_hashq(8, pp, tt)));
    REQUIRE(has(search_ssef(pp, tt)));
  }
}

TEST_CASE("Horspool reads under half the text on Rand64") {
  const Text t = generate_rand_text(64, 1u << 20, 3);
  for (std::size_t m : {8u, 16u, 64u}) {
    const auto ps = sample_patterns(t, m, 5, 4);
    for (const auto& sp : ps) {
      InstrumentedText it(t);
      run(Horspool(sp.pattern), it);
      INFO("m=" << m << " reads=" << it.reads());
      CHECK(it.reads() < t.size() / 2);
    }
  }
}

TEST_CASE("HASHq reads only its q-grams when no window is a candidate") {
  const Text t = Text::from_string(std::string(1000, 'z'));
  for (unsigned q : {3u, 5u, 8u}) {
    const Pattern p = Pattern::from_string("abcdefghijkl");
    const HashQ h(q, p);
    const std::size_t m = p.size();
    REQUIRE(h.table().shift(h.table().hash(t, m - 1)) == m - q + 1);
    std::size_t grams = 0;
    for (std::size_t i = m - 1; i < t.size(); i += m - q + 1) ++grams;
    InstrumentedText it(t);
    CHECK(run(h, it).empty());
    CHECK(it.reads() == q * grams);
  }
}

TEST_CASE("single-symbol alphabet works everywhere") {
  const Text t(std::vector<Byte>(300, 7), "unary");
  for (std::size_t m : {1u, 3u, 8u, 32u, 100u}) {
    const Pattern p(std::vector<Byte>(m, 7));
    const auto expected = naive::find_all(p, t);
    CHECK(search_hor(p, t) == expected);
    CHECK(search_qs(p, t) == expected);
    CHECK(search_br(p, t) == expected);
    CHECK(search_tvsbs(p, t) == expected);
    CHECK(search_fjs(p, t) == expected);
    if (m >= 3) CHECK(search_hashq(3, p, t) == expected);
    if (m >= 32) CHECK(search_ssef(p, t) == expected);
  }
}
