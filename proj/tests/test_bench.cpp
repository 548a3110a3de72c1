#include <doctest.h>

#include <array>
#include <filesystem>
#include <fstream>

#include "naive_oracle.hpp"
#include "smatch/bench.hpp"

using namespace smatch;

namespace {

std::vector<const AlgorithmDescriptor*> algos(std::initializer_list<std::string_view> ids) {
  std::vector<const AlgorithmDescriptor*> out;
  for (auto id : ids) out.push_back(&Registry::standard().at(id));
  return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& data) {
  const auto dir = std::filesystem::temp_directory_path() / "smatch_bench_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << data;
  return path;
}

}  // namespace

TEST_CASE("random texts draw from the requested alphabet") {
  const Text t = generate_rand_text(2, 8, 1);
  CHECK(t.size() == 8);
  CHECK(t.id() == "rand2");
  for (Byte b : t.bytes()) CHECK(b < 2);
  const Text again = generate_rand_text(2, 8, 1);
  CHECK(std::equal(t.bytes().begin(), t.bytes().end(), again.bytes().begin()));
  for (std::size_t s : {4u, 8u, 16u, 32u, 64u, 128u, 256u}) {
    const Text u = generate_rand_text(s, 5000, 9);
    for (Byte b : u.bytes()) REQUIRE(b < s);
    CHECK(u.alphabet_size() == s);
  }
}

TEST_CASE("different seeds give different texts") {
  const Text a = generate_rand_text(64, 1000, 1);
  const Text b = generate_rand_text(64, 1000, 2);
  CHECK_FALSE(std::equal(a.bytes().begin(), a.bytes().end(), b.bytes().begin()));
}

TEST_CASE("rand4 symbol frequencies are uniform") {
  const Text t = generate_rand_text(4, 1'000'000, 1);
  std::array<std::size_t, 4> counts{};
  for (Byte b : t.bytes()) ++counts[b];
  for (std::size_t c : counts) {
    const double f = static_cast<double>(c) / 1e6;
    CHECK(f > 0.245);
    CHECK(f < 0.255);
  }
}

TEST_CASE("alphabet size validation") {
  CHECK_THROWS_AS(generate_rand_text(3, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rand_text(1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rand_text(512, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rand_text(4, 0, 1), std::invalid_argument);
  const Text t = generate_rand_text(3, 3000, 1, true);
  CHECK(t.alphabet_size() == 3);
  CHECK(generate_rand_text(1, 10, 1, true).alphabet_size() == 1);
}

TEST_CASE("uniform_below stays in range and is deterministic") {
  Prng a = derive_prng(5, {1, 2});
  Prng b = derive_prng(5, {1, 2});
  Prng c = derive_prng(5, {1, 3});
  CHECK(a() == b());
  CHECK(a() != c());
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull}) {
    for (int k = 0; k < 1000; ++k) REQUIRE(uniform_below(a, bound) < bound);
  }
  CHECK(kPrngName == "mt19937_64");
}

TEST_CASE("known corpora and loading") {
  const auto corpora = known_corpora();
  REQUIRE(corpora.size() == 4);
  CHECK(corpora[0].length == 4'638'690);
  CHECK(corpora[1].length == 3'295'751);
  CHECK(corpora[2].length == 4'047'392);
  CHECK(corpora[3].length == 2'473'400);

  SUBCASE("edition mismatch becomes warnings") {
    const auto path = write_temp("E.coli", "acgtacgtnn");
    const auto loaded = load_corpus(path, "ecoli");
    CHECK(loaded.text.size() == 10);
    CHECK(loaded.sigma == 5);
    CHECK(loaded.text.id() == "ecoli");
    CHECK(loaded.warnings.size() == 2);
  }
  SUBCASE("ad-hoc file") {
    const auto path = write_temp("notes.txt", "hello world");
    const auto loaded = load_corpus(path, "notes");
    CHECK(loaded.sigma == 8);
    CHECK(loaded.warnings.empty());
  }
  CHECK_THROWS(load_corpus("/nonexistent/dir/E.coli", "ecoli"));
}

TEST_CASE("sampled patterns come from the text") {
  const Text t = generate_rand_text(4, 2000, 3);
  SUBCASE("m = n yields the whole text") {
    const auto ps = sample_patterns(t, t.size(), 3, 1);
    REQUIRE(ps.size() == 3);
    for (const auto& sp : ps) {
      CHECK(sp.position == 0);
      CHECK(std::equal(sp.pattern.bytes().begin(), sp.pattern.bytes().end(), t.bytes().begin()));
    }
  }
  SUBCASE("recorded position is found by the oracle") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
      const std::size_t m = naive::uniform(rng, 1, 64);
      const auto sp = sample_patterns(t, m, 1, static_cast<std::uint64_t>(k)).front();
      REQUIRE(sp.position + m <= t.size());
      const auto occ = naive::find_all(sp.pattern, t);
      REQUIRE(std::find(occ.begin(), occ.end(), sp.position) != occ.end());
    }
  }
  SUBCASE("deterministic per seed") {
    const auto a = sample_patterns(t, 16, 50, 11);
    const auto b = sample_patterns(t, 16, 50, 11);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].position == b[i].position);
  }
  CHECK_THROWS(sample_patterns(t, t.size() + 1, 1, 1));
  CHECK_THROWS(sample_patterns(t, 4, 0, 1));
}

TEST_CASE("config validation") {
  BenchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.lengths.size() == 10);
  CHECK(cfg.patterns_per_length == 400);
  CHECK(cfg.text_size == 5u * 1024 * 1024);
  cfg.lengths = {4, 4};
  CHECK_THROWS(cfg.validate());
  cfg.lengths = {8, 4};
  CHECK_THROWS(cfg.validate());
  cfg.lengths = {4};
  cfg.patterns_per_length = 0;
  CHECK_THROWS(cfg.validate());
  cfg.patterns_per_length = 1;
  cfg.parallel = true;
  CHECK_THROWS(cfg.validate());
  cfg.metric = Metric::kReads;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("Shift-Or reads every text character once") {
  const Text t = generate_rand_text(4, 1'000'000, 1);
  BenchConfig cfg;
  cfg.metric = Metric::kReads;
  cfg.lengths = {8};
  cfg.patterns_per_length = 5;
  const std::vector<Text> texts{t};
  const auto ms = run_benchmark(cfg, texts, algos({"SO"}));
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].mean_value == 1e6);
  CHECK(ms[0].stddev == 0);
}

TEST_CASE("inapplicable cells are omitted") {
  BenchConfig cfg;
  cfg.metric = Metric::kReads;
  cfg.lengths = {2, 4, 8};
  cfg.patterns_per_length = 3;
  const std::vector<Text> texts{generate_rand_text(8, 4096, 1)};
  const auto ms = run_benchmark(cfg, texts, algos({"HASH8", "SBNDMq8", "HOR"}));
  std::size_t hash8 = 0;
  for (const auto& x : ms) {
    if (x.algorithm != "HOR") CHECK(x.m == 8);
    hash8 += x.algorithm == "HASH8";
  }
  CHECK(hash8 == 1);
  CHECK(ms.size() == 5);
}

TEST_CASE("measurement invariants and ordering") {
  BenchConfig cfg;
  cfg.metric = Metric::kReads;
  cfg.lengths = {2, 16, 64};
  cfg.patterns_per_length = 20;
  const std::vector<Text> texts{generate_rand_text(2, 20000, 1), generate_rand_text(64, 20000, 1)};
  const auto sel = algos({"HOR", "EBOM", "SA"});
  const auto ms = run_benchmark(cfg, texts, sel);
  REQUIRE(ms.size() == 2 * 3 * 3);
  std::size_t i = 0;
  for (const auto& t : texts) {
    for (const auto* a : sel) {
      for (std::size_t m : cfg.lengths) {
        const auto& x = ms[i++];
        CHECK(x.text_id == t.id());
        CHECK(x.algorithm == a->id);
        CHECK(x.m == m);
        CHECK(x.runs == 20);
        CHECK(x.mean_value >= 0);
        CHECK(x.mean_occurrences >= 1);
        CHECK(x.sigma == t.alphabet_size());
      }
    }
  }
}

TEST_CASE("reads mode is reproducible, in parallel too") {
  BenchConfig cfg;
  cfg.metric = Metric::kReads;
  cfg.lengths = {4, 32};
  cfg.patterns_per_length = 10;
  const std::vector<Text> texts{generate_rand_text(16, 30000, 2)};
  std::vector<const AlgorithmDescriptor*> all;
  for (const auto& d : Registry::standard().all()) all.push_back(&d);
  const auto a = run_benchmark(cfg, texts, all);
  const auto b = run_benchmark(cfg, texts, all);
  cfg.parallel = true;
  const auto c = run_benchmark(cfg, texts, all);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].mean_value == b[i].mean_value);
    CHECK(a[i].mean_value == c[i].mean_value);
    CHECK(a[i].stddev == c[i].stddev);
    CHECK(a[i].mean_occurrences == c[i].mean_occurrences);
  }
}

TEST_CASE("time mode on binary text favours SSEF over Shift-Or for long patterns") {
  BenchConfig cfg;
  cfg.lengths = {1024};
  cfg.patterns_per_length = 10;
  const std::vector<Text> texts{generate_rand_text(2, 1u << 18, 1)};
  const auto ms = run_benchmark(cfg, texts, algos({"SSEF", "SO"}));
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].metric == Metric::kTime);
  CHECK(ms[0].mean_value < ms[1].mean_value);
}

TEST_CASE("empty inputs are rejected") {
  BenchConfig cfg;
  const std::vector<Text> none;
  const std::vector<Text> one{generate_rand_text(2, 100, 1)};
  CHECK_THROWS(run_benchmark(cfg, none, algos({"HOR"})));
  CHECK_THROWS(run_benchmark(cfg, one, {}));
}
