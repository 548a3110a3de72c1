#pragma once

// Backward factor-oracle matching (BOM) and its two-character entry variant
// (EBOM).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "smatch/core.hpp"

namespace smatch {

/// Factor oracle of a word: states 0..m, accepting at least every factor of
/// the word. The searchers build it over the reversed pattern.
///
/// Spine transitions (i -> i + 1 on word[i]) are stored implicitly; the
/// remaining "external" transitions are kept per source state, and state 0
/// additionally gets a dense 256-entry row.
class FactorOracle {
 public:
  static constexpr std::int32_t kNone = -1;

  explicit FactorOracle(std::span<const Byte> word);

  /// Oracle over the reversal of p.
  static FactorOracle for_reversed(const Pattern& p);

  std::size_t state_count() const noexcept { return word_.size() + 1; }
  /// Spine plus external transitions; at most 2m - 1.
  std::size_t transition_count() const noexcept;

  std::int32_t next(std::int32_t state, Byte c) const noexcept {
    if (state == 0) return initial_[c];
    const auto s = static_cast<std::size_t>(state);
    if (s < word_.size() && word_[s] == c) return state + 1;
    for (std::uint32_t e = ext_begin_[s]; e < ext_begin_[s + 1]; ++e) {
      if (external_[e].symbol == c) return external_[e].target;
    }
    return kNone;
  }

  /// True iff the whole of w is read from the initial state.
  bool accepts(std::span<const Byte> w) const noexcept;

 private:
  struct Edge {
    Byte symbol;
    std::int32_t target;
  };

  std::vector<Byte> word_;
  std::array<std::int32_t, 256> initial_{};
  std::vector<std::uint32_t> ext_begin_;  // CSR offsets, size m + 2
  std::vector<Edge> external_;
};

/// Dense 256x256 table giving, for the last two window characters (a, b)
/// read backwards, the oracle state reached, or a negative code telling how
/// many characters were accepted before failing.
class FirstTransitionTable {
 public:
  static constexpr std::int32_t kFailFirst = -2;   // a rejected
  static constexpr std::int32_t kFailSecond = -1;  // a accepted, b rejected

  explicit FirstTransitionTable(const FactorOracle& oracle);

  std::int32_t operator()(Byte a, Byte b) const noexcept { return table_[a * 256u + b]; }

 private:
  std::vector<std::int32_t> table_;
};

class Bom {
 public:
  explicit Bom(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()), oracle_(FactorOracle::for_reversed(p)) {}

  const FactorOracle& oracle() const noexcept { return oracle_; }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t s = 0; s + m <= n;) {
      std::int32_t q = 0;
      std::size_t k = 0;  // characters accepted so far
      while (k < m) {
        q = oracle_.next(q, t[s + m - 1 - k]);
        if (q == FactorOracle::kNone) break;
        ++k;
      }
      if (k == m) {
        if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
        s += 1;
      } else {
        s += m - k;
      }
    }
  }

 private:
  std::vector<Byte> pattern_;
  FactorOracle oracle_;
};

/// BOM entering each window through the two-character first-transition
/// table. Visits exactly the same windows as BOM.
class Ebom {
 public:
  explicit Ebom(const Pattern& p)
      : pattern_(checked(p)), oracle_(FactorOracle::for_reversed(p)), first_(oracle_) {}

  const FactorOracle& oracle() const noexcept { return oracle_; }
  const FirstTransitionTable& first_transitions() const noexcept { return first_; }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t s = 0; s + m <= n;) {
      const std::size_t end = s + m - 1;
      std::int32_t q = first_(t[end], t[end - 1]);
      if (q == FirstTransitionTable::kFailFirst) {
        s += m;
        continue;
      }
      if (q == FirstTransitionTable::kFailSecond) {
        s += m - 1;
        continue;
      }
      std::size_t k = 2;
      while (k < m) {
        q = oracle_.next(q, t[end - k]);
        if (q == FactorOracle::kNone) break;
        ++k;
      }
      if (k == m) {
        if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
        s += 1;
      } else {
        s += m - k;
      }
    }
  }

 private:
  static std::vector<Byte> checked(const Pattern& p) {
    if (p.size() < 2) throw ApplicabilityError("EBOM requires m >= 2");
    return {p.bytes().begin(), p.bytes().end()};
  }

  std::vector<Byte> pattern_;
  FactorOracle oracle_;
  FirstTransitionTable first_;
};

Occurrences search_bom(const Pattern& p, const Text& t);
Occurrences search_ebom(const Pattern& p, const Text& t);

}  // namespace smatch
