#include "smatch/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

namespace smatch {

namespace {

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool is_power_of_two(std::size_t x) noexcept { return x != 0 && (x & (x - 1)) == 0; }

struct Stats {
  double mean = 0;
  double stddev = 0;
};

Stats summarize(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  double sum = 0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0;
    for (double x : xs) sq += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return s;
}

struct Cell {
  std::size_t text;
  const AlgorithmDescriptor* algo;
  std::size_t m;
};

Measurement measure_cell(const BenchConfig& cfg, const Text& text, std::size_t sigma,
                         const AlgorithmDescriptor& algo, std::size_t m,
                         const std::vector<SampledPattern>& patterns) {
  using Clock = std::chrono::steady_clock;
  std::vector<double> values;
  std::vector<double> prep;
  values.reserve(patterns.size());
  double occurrences = 0;

  for (const auto& sp : patterns) {
    if (cfg.metric == Metric::kReads) {
      const auto searcher = algo.prepare(sp.pattern);
      InstrumentedText it(text);
      const auto found = searcher->find_all(it);
      values.push_back(static_cast<double>(it.reads()));
      occurrences += static_cast<double>(found.size());
    } else {
      const auto t0 = Clock::now();
      const auto searcher = algo.prepare(sp.pattern);
      const auto t1 = Clock::now();
      (void)searcher->find_all(text.bytes());  // warm-up
      const auto t2 = Clock::now();
      const auto found = searcher->find_all(text.bytes());
      const auto t3 = Clock::now();
      values.push_back(std::chrono::duration<double, std::milli>(t3 - t2).count());
      prep.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      occurrences += static_cast<double>(found.size());
    }
  }

  const Stats st = summarize(values);
  Measurement ms;
  ms.text_id = text.id();
  ms.sigma = sigma;
  ms.algorithm = algo.id;
  ms.family = algo.family;
  ms.m = m;
  ms.runs = patterns.size();
  ms.mean_value = st.mean;
  ms.stddev = st.stddev;
  ms.mean_occurrences = occurrences / static_cast<double>(patterns.size());
  ms.metric = cfg.metric;
  ms.mean_preprocess_ms = summarize(prep).mean;
  return ms;
}

}  // namespace

std::string_view to_string(Metric m) noexcept { return m == Metric::kTime ? "time" : "reads"; }

std::optional<Metric> parse_metric(std::string_view s) noexcept {
  if (s == "time") return Metric::kTime;
  if (s == "reads") return Metric::kReads;
  return std::nullopt;
}

Prng derive_prng(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (std::uint64_t l : labels) {
    words.push_back(static_cast<std::uint32_t>(l));
    words.push_back(static_cast<std::uint32_t>(l >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Prng(seq);
}

std::uint64_t uniform_below(Prng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

void BenchConfig::validate() const {
  if (lengths.empty()) throw std::invalid_argument("at least one pattern length is required");
  if (lengths.front() == 0) throw std::invalid_argument("pattern lengths must be >= 1");
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] <= lengths[i - 1]) {
      throw std::invalid_argument("pattern lengths must be strictly increasing");
    }
  }
  if (patterns_per_length < 1) throw std::invalid_argument("patterns per length must be >= 1");
  if (text_size < 1) throw std::invalid_argument("text size must be >= 1");
  if (parallel && metric == Metric::kTime) {
    throw std::invalid_argument("parallel execution is only allowed in reads mode");
  }
}

Text generate_rand_text(std::size_t sigma, std::size_t size, std::uint64_t seed,
                        bool allow_any_sigma) {
  if (allow_any_sigma) {
    if (sigma < 1 || sigma > 256) throw std::invalid_argument("sigma must be in [1, 256]");
  } else if (sigma < 2 || sigma > 256 || !is_power_of_two(sigma)) {
    throw std::invalid_argument("sigma must be one of 2, 4, 8, 16, 32, 64, 128, 256");
  }
  if (size < 1) throw std::invalid_argument("text size must be >= 1");

  Prng rng = derive_prng(seed, {sigma, size});
  std::vector<Byte> bytes(size);
  if (is_power_of_two(sigma)) {
    const unsigned mask = static_cast<unsigned>(sigma - 1);
    for (std::size_t i = 0; i < size; i += 8) {
      std::uint64_t r = rng();
      for (std::size_t k = i; k < std::min(size, i + 8); ++k, r >>= 8) {
        bytes[k] = static_cast<Byte>(r & mask);
      }
    }
  } else {
    for (auto& b : bytes) b = static_cast<Byte>(uniform_below(rng, sigma));
  }
  return Text(std::move(bytes), "rand" + std::to_string(sigma));
}

std::span<const CorpusExpectation> known_corpora() noexcept {
  static constexpr CorpusExpectation kCorpora[] = {
      {"ecoli", "E.coli", 4'638'690, 4},
      {"hs", "hs", 3'295'751, 20},
      {"bible", "bible.txt", 4'047'392, 63},
      {"world192", "world192.txt", 2'473'400, 94},
  };
  return kCorpora;
}

LoadedCorpus load_corpus(const std::filesystem::path& path, std::string_view expected_id) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("corpus file not found: " + path.string());
  }
  std::string id(expected_id);
  LoadedCorpus out{load_text_file(path, id), 0, {}};
  out.sigma = out.text.alphabet_size();
  for (const auto& known : known_corpora()) {
    if (known.id != expected_id) continue;
    if (out.text.size() != known.length) {
      out.warnings.push_back(id + ": length " + std::to_string(out.text.size()) +
                             " differs from expected " + std::to_string(known.length));
    }
    if (out.sigma != known.sigma) {
      out.warnings.push_back(id + ": alphabet size " + std::to_string(out.sigma) +
                             " differs from expected " + std::to_string(known.sigma));
    }
  }
  return out;
}

std::vector<SampledPattern> sample_patterns(const Text& t, std::size_t m, std::size_t count,
                                            std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("pattern length must be >= 1");
  if (m > t.size()) throw std::invalid_argument("pattern length exceeds text length");
  if (count < 1) throw std::invalid_argument("pattern count must be >= 1");
  Prng rng = derive_prng(seed, {fnv1a(t.id()), m});
  std::vector<SampledPattern> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto pos = static_cast<std::size_t>(uniform_below(rng, t.size() - m + 1));
    out.push_back({Pattern(t.bytes().subspan(pos, m)), pos});
  }
  return out;
}

std::vector<Measurement> run_benchmark(const BenchConfig& cfg, std::span<const Text> texts,
                                       std::span<const AlgorithmDescriptor* const> algos) {
  cfg.validate();
  if (texts.empty()) throw std::invalid_argument("no texts to benchmark");
  if (algos.empty()) throw std::invalid_argument("no algorithms to benchmark");

  // Every algorithm sees the same pattern set for a given (text, m).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SampledPattern>> patterns;
  std::vector<std::size_t> sigmas;
  std::vector<Cell> cells;
  for (std::size_t ti = 0; ti < texts.size(); ++ti) {
    sigmas.push_back(texts[ti].alphabet_size());
    for (const auto* algo : algos) {
      for (std::size_t m : cfg.lengths) {
        if (m > texts[ti].size() || !algo->applicable(m)) continue;
        auto key = std::make_pair(ti, m);
        if (!patterns.count(key)) {
          patterns.emplace(key, sample_patterns(texts[ti], m, cfg.patterns_per_length, cfg.seed));
        }
        cells.push_back({ti, algo, m});
      }
    }
  }

  std::vector<Measurement> out(cells.size());
  auto work = [&](std::size_t i) {
    const Cell& c = cells[i];
    out[i] = measure_cell(cfg, texts[c.text], sigmas[c.text], *c.algo, c.m,
                          patterns.at({c.text, c.m}));
  };

  if (cfg.parallel && cfg.metric == Metric::kReads) {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) work(i);
  }
  return out;
}

}  // namespace smatch
