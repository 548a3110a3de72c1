#pragma once

// Randomized differential testing of registered searchers against the
// brute-force scan.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smatch/core.hpp"
#include "smatch/registry.hpp"

namespace smatch {

inline constexpr std::size_t kVerifySigmas[] = {2, 4, 8, 16, 32, 64, 128, 256};

struct VerifyConfig {
  std::size_t cases = 10000;  // per algorithm
  std::uint64_t seed = 1;
  std::size_t max_n = 4096;
  unsigned threads = 0;  // 0 = hardware concurrency
};

enum class TextShape { kRandom, kPeriodic, kSparse };
enum class PatternShape { kExtracted, kRandom, kMutated };

/// A reproducible test input; everything follows from (case_seed, m range, max_n).
struct VerifyCase {
  std::uint64_t case_seed;
  std::size_t sigma;
  TextShape text_shape;
  PatternShape pattern_shape;
  Text text;
  Pattern pattern;
};

/// m is log-uniform in [m_lo, m_hi], n log-uniform in [m, max_n]; symbols are
/// a random sigma-subset of all byte values.
VerifyCase make_case(std::uint64_t case_seed, std::size_t m_lo, std::size_t m_hi,
                     std::size_t max_n);

struct Mismatch {
  std::string algorithm;
  std::size_t sigma = 0;
  std::uint64_t case_seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  /// Shortest text prefix that still disagrees.
  std::size_t shrunk_n = 0;
  std::vector<std::size_t> missing;  // reported by the oracle only
  std::vector<std::size_t> extra;    // reported by the algorithm only
  std::string error;                 // set when the searcher threw
};

struct AlgorithmTally {
  std::string algorithm;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t m_lo = 0;
  std::size_t m_hi = 0;
};

struct VerifyReport {
  std::vector<AlgorithmTally> tallies;
  std::vector<Mismatch> mismatches;  // first per algorithm

  bool ok() const noexcept;
  std::size_t total_cases() const noexcept;
};

/// Runs cfg.cases cases per algorithm over its applicability range clipped to
/// [1, max_n]. Algorithms are spread over threads; results do not depend on
/// the thread count.
VerifyReport run_verify(const VerifyConfig& cfg,
                        std::span<const AlgorithmDescriptor* const> algos);

/// Per-algorithm counts, one reproducer per failing algorithm, and a total line.
std::string format_verify_report(const VerifyReport& r);

}  // namespace smatch
