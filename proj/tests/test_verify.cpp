#include <doctest.h>

#include <cmath>
#include <set>

#include "naive_oracle.hpp"
#include "smatch/verify.hpp"

using namespace smatch;

namespace {

// Correct scan that forgets every occurrence after the first, like a
// searcher whose shift overshoots after a match.
class DropsLater final : public AnySearcher {
 public:
  explicit DropsLater(const Pattern& p) : p_(p) {}
  Occurrences find_all(std::span<const Byte> text) const override {
    Occurrences all = naive::find_all(p_, Text(std::vector<Byte>(text.begin(), text.end())));
    if (all.size() > 1) all.resize(1);
    return all;
  }
  Occurrences find_all(InstrumentedText& text) const override {
    return find_all(text.bytes());
  }

 private:
  Pattern p_;
};

class Throws final : public AnySearcher {
 public:
  Occurrences find_all(std::span<const Byte>) const override {
    throw std::runtime_error("boom");
  }
  Occurrences find_all(InstrumentedText&) const override { throw std::runtime_error("boom"); }
};

AlgorithmDescriptor fixture(std::string id, SearcherFactory make) {
  AlgorithmDescriptor d;
  d.id = std::move(id);
  d.m_min = 1;
  d.m_max = 8;
  d.make = std::move(make);
  return d;
}

}  // namespace

TEST_CASE("cases are reproducible and respect their ranges") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const VerifyCase a = make_case(seed, 3, 40, 600);
    const VerifyCase b = make_case(seed, 3, 40, 600);
    REQUIRE(a.sigma == b.sigma);
    REQUIRE(a.text_shape == b.text_shape);
    REQUIRE(a.pattern_shape == b.pattern_shape);
    REQUIRE(std::equal(a.text.bytes().begin(), a.text.bytes().end(), b.text.bytes().begin(),
                       b.text.bytes().end()));
    REQUIRE(std::equal(a.pattern.bytes().begin(), a.pattern.bytes().end(),
                       b.pattern.bytes().begin(), b.pattern.bytes().end()));
    const std::size_t m = a.pattern.size();
    CHECK(m >= 3);
    CHECK(m <= 40);
    CHECK(a.text.size() >= m);
    CHECK(a.text.size() <= 600);
    CHECK(std::find(std::begin(kVerifySigmas), std::end(kVerifySigmas), a.sigma) !=
          std::end(kVerifySigmas));
    CHECK(a.text.alphabet_size() <= a.sigma);
  }
}

TEST_CASE("case generator covers every shape") {
  std::set<int> texts, patterns;
  std::size_t extracted_hit = 0, extracted = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const VerifyCase c = make_case(seed, 1, 64, 2000);
    texts.insert(static_cast<int>(c.text_shape));
    patterns.insert(static_cast<int>(c.pattern_shape));
    if (c.pattern_shape == PatternShape::kExtracted) {
      ++extracted;
      extracted_hit += !naive::find_all(c.pattern, c.text).empty();
    }
  }
  CHECK(texts.size() == 3);
  CHECK(patterns.size() == 3);
  CHECK(extracted > 0);
  CHECK(extracted_hit == extracted);
}

TEST_CASE("pattern lengths are spread log-uniformly") {
  std::size_t low = 0, high = 0;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const std::size_t m = make_case(seed, 1, 1024, 4096).pattern.size();
    (m <= 32 ? low : high) += 1;
  }
  // log(32) / log(1024) = 1/2 of the mass on each side.
  CHECK(std::abs(static_cast<double>(low) / 4000 - 0.5) < 0.05);
}

TEST_CASE("registered algorithms verify clean") {
  VerifyConfig cfg;
  cfg.cases = 150;
  std::vector<const AlgorithmDescriptor*> all;
  for (const auto& d : Registry::standard().all()) all.push_back(&d);
  const VerifyReport r = run_verify(cfg, all);
  CHECK(r.ok());
  CHECK(r.total_cases() == 150 * all.size());
  REQUIRE(r.tallies.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(r.tallies[i].algorithm == all[i]->id);
    CHECK(r.tallies[i].m_lo == all[i]->m_min);
    CHECK(r.tallies[i].m_hi <= cfg.max_n);
  }
  const std::string text = format_verify_report(r);
  CHECK(text.find("total: " + std::to_string(150 * all.size()) + " cases, 0 mismatches") !=
        std::string::npos);
}

TEST_CASE("HASH5 is only fed patterns of length at least 5") {
  VerifyConfig cfg;
  cfg.cases = 300;
  const AlgorithmDescriptor* h5 = &Registry::standard().at("HASH5");
  const VerifyReport r = run_verify(cfg, std::span<const AlgorithmDescriptor* const>(&h5, 1));
  REQUIRE(r.tallies.size() == 1);
  CHECK(r.tallies[0].m_lo == 5);
  CHECK(r.tallies[0].cases == 300);
  CHECK(r.ok());
  CHECK(format_verify_report(r).find("HASH5: 300 cases (m 5..4096), 0 mismatches") !=
        std::string::npos);
}

TEST_CASE("a broken searcher is caught with a shrunk reproducer") {
  const AlgorithmDescriptor broken = fixture(
      "BROKEN", [](const Pattern& p) { return std::make_unique<DropsLater>(p); });
  const AlgorithmDescriptor* ptr = &broken;
  VerifyConfig cfg;
  cfg.cases = 500;
  const VerifyReport r = run_verify(cfg, std::span<const AlgorithmDescriptor* const>(&ptr, 1));
  CHECK_FALSE(r.ok());
  CHECK(r.tallies[0].mismatches > 0);
  REQUIRE(r.mismatches.size() == 1);
  const Mismatch& mm = r.mismatches[0];
  CHECK(mm.algorithm == "BROKEN");
  CHECK_FALSE(mm.missing.empty());
  CHECK(mm.extra.empty());
  CHECK(mm.shrunk_n <= mm.n);
  CHECK(mm.error.empty());

  // The reported seed rebuilds the failing input.
  const VerifyCase c = make_case(mm.case_seed, 1, 8, cfg.max_n);
  CHECK(c.text.size() == mm.n);
  CHECK(c.pattern.size() == mm.m);
  CHECK(naive::find_all(c.pattern, c.text).size() > 1);
  // The shrunk prefix keeps exactly the two occurrences needed to disagree.
  const Text prefix(std::vector<Byte>(c.text.bytes().begin(),
                                      c.text.bytes().begin() + static_cast<std::ptrdiff_t>(mm.shrunk_n)));
  CHECK(naive::find_all(c.pattern, prefix).size() == 2);
  CHECK(format_verify_report(r).find("MISMATCH BROKEN") != std::string::npos);
}

TEST_CASE("a throwing searcher is reported, not propagated") {
  const AlgorithmDescriptor bad = fixture(
      "THROWS", [](const Pattern&) { return std::make_unique<Throws>(); });
  const AlgorithmDescriptor* ptr = &bad;
  VerifyConfig cfg;
  cfg.cases = 20;
  const VerifyReport r = run_verify(cfg, std::span<const AlgorithmDescriptor* const>(&ptr, 1));
  CHECK_FALSE(r.ok());
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].error.find("boom") != std::string::npos);
}

TEST_CASE("results do not depend on the thread count") {
  std::vector<const AlgorithmDescriptor*> some;
  for (const char* id : {"HOR", "EBOM", "SBNDM", "SSEF"}) some.push_back(&Registry::standard().at(id));
  const AlgorithmDescriptor broken = fixture(
      "BROKEN", [](const Pattern& p) { return std::make_unique<DropsLater>(p); });
  some.push_back(&broken);
  VerifyConfig cfg;
  cfg.cases = 100;
  cfg.threads = 1;
  const std::string one = format_verify_report(run_verify(cfg, some));
  cfg.threads = 4;
  CHECK(format_verify_report(run_verify(cfg, some)) == one);
}
