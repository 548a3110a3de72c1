#include "smatch/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "smatch/bench.hpp"

namespace smatch {

namespace {

double unit(Prng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t log_uniform(Prng& rng, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return lo;
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi) + 1.0);
  const auto x = static_cast<std::size_t>(std::exp(a + unit(rng) * (b - a)));
  return std::clamp(x, lo, hi);
}

std::vector<std::size_t> set_difference(const Occurrences& a, const Occurrences& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Empty when the searcher agrees with the oracle on `text`.
std::optional<Mismatch> compare(const AlgorithmDescriptor& algo, const Pattern& p,
                                std::span<const Byte> text) {
  const Occurrences expected = brute_force_search(p, text);
  Mismatch mm;
  try {
    const Occurrences got = algo.prepare(p)->find_all(text);
    if (verify_equal(got, expected)) return std::nullopt;
    Occurrences sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    mm.missing = set_difference(expected, sorted_got);
    mm.extra = set_difference(sorted_got, expected);
    if (mm.missing.empty() && mm.extra.empty()) mm.error = "positions out of order or repeated";
  } catch (const std::exception& e) {
    mm.error = e.what();
  }
  mm.algorithm = algo.id;
  mm.n = text.size();
  mm.m = p.size();
  return mm;
}

AlgorithmTally tally_for(const AlgorithmDescriptor& algo, std::size_t max_n) {
  AlgorithmTally t;
  t.algorithm = algo.id;
  t.m_lo = algo.m_min;
  t.m_hi = std::min(algo.m_max.value_or(max_n), max_n);
  return t;
}

std::uint64_t id_label(std::string_view id) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : id) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

// Case seeds depend on the algorithm id only, so a restricted run repeats
// the cases of a full one.
void verify_one(const VerifyConfig& cfg, const AlgorithmDescriptor& algo, AlgorithmTally& tally,
                std::optional<Mismatch>& first) {
  Prng seeds = derive_prng(cfg.seed, {id_label(algo.id)});
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    const std::uint64_t case_seed = seeds();
    const VerifyCase c = make_case(case_seed, tally.m_lo, tally.m_hi, cfg.max_n);
    ++tally.cases;
    auto mm = compare(algo, c.pattern, c.text.bytes());
    if (!mm) continue;
    ++tally.mismatches;
    if (first) continue;
    mm->sigma = c.sigma;
    mm->case_seed = case_seed;
    mm->shrunk_n = mm->n;
    // Cut the text right after the first disagreeing window.
    std::size_t d = mm->n;
    if (!mm->missing.empty()) d = std::min(d, mm->missing.front());
    if (!mm->extra.empty()) d = std::min(d, mm->extra.front());
    if (d < mm->n) {
      for (std::size_t len = std::min(mm->n, d + c.pattern.size()); len < mm->n; ++len) {
        if (compare(algo, c.pattern, c.text.bytes().first(len))) {
          mm->shrunk_n = len;
          break;
        }
      }
    }
    first = std::move(mm);
  }
}

void append_positions(std::ostringstream& os, const std::vector<std::size_t>& v) {
  constexpr std::size_t kShown = 8;
  os << '[';
  for (std::size_t i = 0; i < std::min(v.size(), kShown); ++i) os << (i ? "," : "") << v[i];
  if (v.size() > kShown) os << ",... (" << v.size() << " total)";
  os << ']';
}

}  // namespace

VerifyCase make_case(std::uint64_t case_seed, std::size_t m_lo, std::size_t m_hi,
                     std::size_t max_n) {
  if (m_lo < 1 || m_lo > m_hi || m_hi > max_n) {
    throw std::invalid_argument("invalid pattern length range for verification case");
  }
  Prng rng = derive_prng(case_seed, {});
  const std::size_t sigma = kVerifySigmas[uniform_below(rng, std::size(kVerifySigmas))];
  const std::size_t m = log_uniform(rng, m_lo, m_hi);
  const std::size_t n = log_uniform(rng, m, max_n);

  // Symbols are spread over the byte range so high byte values get exercised.
  std::array<Byte, 256> alphabet;
  std::iota(alphabet.begin(), alphabet.end(), Byte{0});
  for (std::size_t i = 255; i > 0; --i) {
    std::swap(alphabet[i], alphabet[uniform_below(rng, i + 1)]);
  }
  auto symbol = [&] { return alphabet[uniform_below(rng, sigma)]; };

  const auto text_shape = static_cast<TextShape>(uniform_below(rng, 3));
  std::vector<Byte> t(n);
  switch (text_shape) {
    case TextShape::kRandom:
      for (auto& b : t) b = symbol();
      break;
    case TextShape::kPeriodic: {
      std::vector<Byte> base(1 + uniform_below(rng, 8));
      for (auto& b : base) b = symbol();
      for (std::size_t i = 0; i < n; ++i) {
        t[i] = uniform_below(rng, 64) == 0 ? symbol() : base[i % base.size()];
      }
      break;
    }
    case TextShape::kSparse:
      for (auto& b : t) b = uniform_below(rng, 16) == 0 ? symbol() : alphabet[0];
      break;
  }

  const auto pattern_shape = static_cast<PatternShape>(uniform_below(rng, 3));
  std::vector<Byte> p;
  if (pattern_shape == PatternShape::kRandom) {
    p.resize(m);
    for (auto& b : p) b = symbol();
  } else {
    const std::size_t at = uniform_below(rng, n - m + 1);
    p.assign(t.begin() + static_cast<std::ptrdiff_t>(at),
             t.begin() + static_cast<std::ptrdiff_t>(at + m));
    if (pattern_shape == PatternShape::kMutated && sigma > 1) {
      const std::size_t j = uniform_below(rng, m);
      Byte b = symbol();
      while (b == p[j]) b = symbol();
      p[j] = b;
    }
  }
  return VerifyCase{case_seed,        sigma, text_shape, pattern_shape,
                    Text(std::move(t), "case"), Pattern(std::move(p))};
}

bool VerifyReport::ok() const noexcept {
  for (const auto& t : tallies) {
    if (t.mismatches != 0) return false;
  }
  return true;
}

std::size_t VerifyReport::total_cases() const noexcept {
  std::size_t s = 0;
  for (const auto& t : tallies) s += t.cases;
  return s;
}

VerifyReport run_verify(const VerifyConfig& cfg,
                        std::span<const AlgorithmDescriptor* const> algos) {
  if (cfg.max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  std::vector<AlgorithmTally> tallies;
  std::vector<std::optional<Mismatch>> firsts(algos.size());
  for (const auto* a : algos) tallies.push_back(tally_for(*a, cfg.max_n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < algos.size(); i = next++) {
      if (tallies[i].m_lo > tallies[i].m_hi) continue;  // nothing testable below max_n
      verify_one(cfg, *algos[i], tallies[i], firsts[i]);
    }
  };
  const unsigned threads = std::max(
      1u, std::min<unsigned>(cfg.threads ? cfg.threads : std::thread::hardware_concurrency(),
                             static_cast<unsigned>(algos.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport r;
  r.tallies = std::move(tallies);
  for (auto& f : firsts) {
    if (f) r.mismatches.push_back(std::move(*f));
  }
  return r;
}

std::string format_verify_report(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& t : r.tallies) {
    os << t.algorithm << ": " << t.cases << " cases (m " << t.m_lo << ".." << t.m_hi << "), "
       << t.mismatches << " mismatches\n";
  }
  for (const auto& mm : r.mismatches) {
    os << "MISMATCH " << mm.algorithm << " sigma=" << mm.sigma << " case_seed=" << mm.case_seed
       << " n=" << mm.n << " m=" << mm.m << " shrunk_n=" << mm.shrunk_n << " missing=";
    append_positions(os, mm.missing);
    os << " extra=";
    append_positions(os, mm.extra);
    if (!mm.error.empty()) os << " error=\"" << mm.error << '"';
    os << '\n';
  }
  std::size_t bad = 0;
  for (const auto& t : r.tallies) bad += t.mismatches;
  os << "total: " << r.total_cases() << " cases, " << bad << " mismatches\n";
  return os.str();
}

}  // namespace smatch
