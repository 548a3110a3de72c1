#pragma once

// Benchmark protocol: random and corpus texts, patterns extracted from the
// text, and per-(text, algorithm, m) measurement of either wall-clock search
// time or metered character reads.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smatch/core.hpp"
#include "smatch/registry.hpp"

namespace smatch {

enum class Metric { kTime, kReads };

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view s) noexcept;

inline constexpr std::size_t kReferenceTextSize = 5u << 20;  // 5 MiB
inline constexpr std::size_t kDeskTextSize = 1u << 20;

/// Generator behind every random choice; recorded in benchmark output.
using Prng = std::mt19937_64;
inline constexpr std::string_view kPrngName = "mt19937_64";

/// Independent generator for a labelled sub-stream of a base seed.
Prng derive_prng(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

/// Uniform integer in [0, bound), by rejection; bound >= 1.
std::uint64_t uniform_below(Prng& rng, std::uint64_t bound);

struct BenchConfig {
  std::vector<std::size_t> lengths{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t patterns_per_length = 400;
  std::uint64_t seed = 1;
  Metric metric = Metric::kTime;
  std::size_t text_size = kReferenceTextSize;
  /// Run cells on several threads; reads mode only.
  bool parallel = false;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct Measurement {
  std::string text_id;
  std::size_t sigma = 0;
  std::string algorithm;
  Family family = Family::kComparison;
  std::size_t m = 0;
  std::size_t runs = 0;
  double mean_value = 0;  // milliseconds or character reads
  double stddev = 0;
  double mean_occurrences = 0;
  Metric metric = Metric::kTime;
  /// Mean preprocessing time in ms (time mode only; not part of the CSV rows).
  double mean_preprocess_ms = 0;
};

/// i.i.d. uniform bytes over {0..sigma-1}, labelled "rand<sigma>". sigma must
/// be a power of two in [2, 256] unless allow_any_sigma, which admits [1, 256].
Text generate_rand_text(std::size_t sigma, std::size_t size, std::uint64_t seed,
                        bool allow_any_sigma = false);

struct CorpusExpectation {
  std::string_view id;
  std::string_view file_name;
  std::size_t length;
  std::size_t sigma;
};

/// E. coli, the King James Bible, world192 and the hs protein file.
std::span<const CorpusExpectation> known_corpora() noexcept;

struct LoadedCorpus {
  Text text;
  std::size_t sigma = 0;
  std::vector<std::string> warnings;
};

/// Loads a raw corpus file. For a known id, length and alphabet mismatches
/// are reported as warnings (editions differ); a missing file throws.
LoadedCorpus load_corpus(const std::filesystem::path& path, std::string_view expected_id);

struct SampledPattern {
  Pattern pattern;
  std::size_t position;  // extraction offset in the text
};

/// `count` patterns t[i, i+m) with i uniform in [0, n-m].
std::vector<SampledPattern> sample_patterns(const Text& t, std::size_t m, std::size_t count,
                                            std::uint64_t seed);

/// One Measurement per applicable (text, algorithm, m) cell, ordered by text,
/// then algorithm, then m. Inapplicable cells are omitted.
std::vector<Measurement> run_benchmark(const BenchConfig& cfg, std::span<const Text> texts,
                                       std::span<const AlgorithmDescriptor* const> algos);

}  // namespace smatch
