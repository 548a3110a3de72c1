#pragma once

// Comparison-based searchers: Horspool, Quick-Search, Berry-Ravindran,
// TVSBS, Franek-Jennings-Smyth, the q-gram hashing family and the SSEF
// block-fingerprint filter.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "smatch/core.hpp"

namespace smatch {

/// Single-character bad-character shifts, indexed by a text byte.
class BadCharTable {
 public:
  /// shift[c] = distance from the rightmost c in p[0..m-1) to the last
  /// position, or m when c does not occur there.
  static BadCharTable horspool(std::span<const Byte> p) {
    BadCharTable t;
    const std::size_t m = p.size();
    t.shift_.fill(m);
    for (std::size_t i = 0; i + 1 < m; ++i) t.shift_[p[i]] = m - 1 - i;
    return t;
  }

  /// shift[c] = m - (rightmost position of c in p), or m + 1 when absent;
  /// indexed by the character just past the window.
  static BadCharTable quick_search(std::span<const Byte> p) {
    BadCharTable t;
    const std::size_t m = p.size();
    t.shift_.fill(m + 1);
    for (std::size_t i = 0; i < m; ++i) t.shift_[p[i]] = m - i;
    return t;
  }

  std::size_t operator[](Byte c) const noexcept { return shift_[c]; }

 private:
  std::array<std::size_t, 256> shift_{};
};

/// Two-character Berry-Ravindran shifts over the pair following the window.
/// Entries lie in [1, m + 2].
class PairShiftTable {
 public:
  explicit PairShiftTable(std::span<const Byte> p) : shift_(256 * 256) {
    const std::size_t m = p.size();
    const auto clamp = [](std::size_t v) {
      return static_cast<std::uint32_t>(
          std::min<std::size_t>(v, std::numeric_limits<std::uint32_t>::max()));
    };
    std::fill(shift_.begin(), shift_.end(), clamp(m + 2));
    for (unsigned a = 0; a < 256; ++a) shift_[a * 256 + p[0]] = clamp(m + 1);
    for (std::size_t i = 0; i + 1 < m; ++i) shift_[p[i] * 256u + p[i + 1]] = clamp(m - i);
    for (unsigned b = 0; b < 256; ++b) shift_[p[m - 1] * 256u + b] = 1;
  }

  std::size_t operator()(Byte a, Byte b) const noexcept { return shift_[a * 256u + b]; }

 private:
  std::vector<std::uint32_t> shift_;
};

namespace detail {

template <class View>
inline std::size_t pair_shift_at(const PairShiftTable& table, View t, std::size_t s,
                                 std::size_t m) {
  const std::size_t n = t.size();
  if (s + m + 1 < n) return table(t[s + m], t[s + m + 1]);
  // Only one character remains past the window; the last window is next.
  return 1;
}

}  // namespace detail

class Horspool {
 public:
  explicit Horspool(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()),
        shift_(BadCharTable::horspool(p.bytes())) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    const std::span<const Byte> head(pattern_.data(), m - 1);
    const Byte last = pattern_[m - 1];
    for (std::size_t s = 0; s + m <= n;) {
      const Byte c = t[s + m - 1];
      if (c == last && matches_at(t, head, s)) out.push_back(s);
      s += shift_[c];
    }
  }

  const BadCharTable& shifts() const noexcept { return shift_; }

 private:
  std::vector<Byte> pattern_;
  BadCharTable shift_;
};

class QuickSearch {
 public:
  explicit QuickSearch(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()),
        shift_(BadCharTable::quick_search(p.bytes())) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t s = 0; s + m <= n;) {
      if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
      if (s + m >= n) break;
      s += shift_[t[s + m]];
    }
  }

 private:
  std::vector<Byte> pattern_;
  BadCharTable shift_;
};

class BerryRavindran {
 public:
  explicit BerryRavindran(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()), shift_(p.bytes()) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t s = 0; s + m <= n;) {
      if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
      if (s + m >= n) break;
      s += detail::pair_shift_at(shift_, t, s, m);
    }
  }

  const PairShiftTable& shifts() const noexcept { return shift_; }

 private:
  std::vector<Byte> pattern_;
  PairShiftTable shift_;
};

/// Berry-Ravindran shifting with a first/last character guard before the
/// full comparison.
class Tvsbs {
 public:
  explicit Tvsbs(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()), shift_(p.bytes()) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    const Byte first = pattern_[0];
    const Byte last = pattern_[m - 1];
    const std::span<const Byte> inner(pattern_.data(), m - 1);
    for (std::size_t s = 0; s + m <= n;) {
      if (t[s + m - 1] == last && (m == 1 || t[s] == first) && matches_at(t, inner, s, 1)) {
        out.push_back(s);
      }
      if (s + m >= n) break;
      s += detail::pair_shift_at(shift_, t, s, m);
    }
  }

 private:
  std::vector<Byte> pattern_;
  PairShiftTable shift_;
};

/// Quick-Search skipping until the last character lines up, then
/// Morris-Pratt comparison that carries partial matches across windows.
/// Linear worst case.
class Fjs {
 public:
  explicit Fjs(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()),
        delta_(BadCharTable::quick_search(p.bytes())),
        beta_(p.size() + 1) {
    const auto m = static_cast<std::ptrdiff_t>(p.size());
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = -1;
    beta_[0] = -1;
    while (i < m) {
      while (j > -1 && pattern_[i] != pattern_[j]) j = beta_[j];
      ++i;
      ++j;
      beta_[i] = j;
    }
  }

  template <class View>
  void scan(View x, Occurrences& out) const {
    const auto m = static_cast<std::ptrdiff_t>(pattern_.size());
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    if (m > n) return;
    const std::ptrdiff_t mp = m - 1;
    const auto& p = pattern_;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = 0;
    std::ptrdiff_t ip = mp;
    while (ip < n) {
      if (j <= 0) {
        while (p[mp] != x[ip]) {
          if (ip + 1 >= n) return;
          ip += static_cast<std::ptrdiff_t>(delta_[x[ip + 1]]);
          if (ip >= n) return;
        }
        j = 0;
        i = ip - mp;
        while (j < mp && x[i] == p[j]) {
          ++i;
          ++j;
        }
        if (j == mp) {
          out.push_back(static_cast<std::size_t>(i - mp));
          ++i;
          ++j;
        }
        if (j <= 0) {
          ++i;
        } else {
          j = beta_[j];
        }
      } else {
        while (j < m && x[i] == p[j]) {
          ++i;
          ++j;
        }
        if (j == m) out.push_back(static_cast<std::size_t>(i - m));
        j = beta_[j];
      }
      ip = i + mp - j;
    }
  }

 private:
  std::vector<Byte> pattern_;
  BadCharTable delta_;
  std::vector<std::ptrdiff_t> beta_;
};

/// Shift table keyed by a 16-bit shift-add hash of q consecutive bytes.
/// A zero entry marks the hash of the pattern's last q-gram.
class QGramHash {
 public:
  static constexpr std::size_t kSize = 1u << 16;

  QGramHash(unsigned q, std::span<const Byte> p) : q_(q), shift_(kSize) {
    const std::size_t m = p.size();
    std::fill(shift_.begin(), shift_.end(), static_cast<std::uint32_t>(m - q + 1));
    for (std::size_t i = q - 1; i + 1 < m; ++i) {
      shift_[hash(p, i)] = static_cast<std::uint32_t>(m - 1 - i);
    }
    const std::uint16_t last = hash(p, m - 1);
    after_match_ = shift_[last] == 0 ? 1 : shift_[last];
    shift_[last] = 0;
  }

  /// Hash of the q-gram ending at index `end`.
  template <class Seq>
  std::uint16_t hash(const Seq& s, std::size_t end) const {
    std::uint32_t h = 0;
    for (std::size_t k = end + 1 - q_; k <= end; ++k) h = (h << 1) + s[k];
    return static_cast<std::uint16_t>(h);
  }

  unsigned q() const noexcept { return q_; }
  std::size_t shift(std::uint16_t h) const noexcept { return shift_[h]; }
  std::size_t shift_after_match() const noexcept { return after_match_; }

 private:
  unsigned q_;
  std::vector<std::uint32_t> shift_;
  std::size_t after_match_ = 1;
};

/// Wu-Manber style single-pattern search over q-gram hashes (HASH3/5/8).
class HashQ {
 public:
  HashQ(unsigned q, const Pattern& p) : pattern_(p.bytes().begin(), p.bytes().end()), table_(checked(q, p)) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t i = m - 1; i < n;) {
      const std::size_t sh = table_.shift(table_.hash(t, i));
      if (sh != 0) {
        i += sh;
        continue;
      }
      const std::size_t s = i + 1 - m;
      if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
      i += table_.shift_after_match();
    }
  }

  const QGramHash& table() const noexcept { return table_; }

 private:
  static QGramHash checked(unsigned q, const Pattern& p) {
    if (q != 3 && q != 5 && q != 8) {
      throw std::invalid_argument("HASHq supports q in {3, 5, 8}");
    }
    if (p.size() < q) {
      throw ApplicabilityError("HASH" + std::to_string(q) + " requires m >= " + std::to_string(q));
    }
    return QGramHash(q, p.bytes());
  }

  std::vector<Byte> pattern_;
  QGramHash table_;
};

/// Set of W-bit block fingerprints of the pattern, one per alignment of a
/// W-byte block inside it, keyed for lookup by fingerprint. Bit j of a
/// fingerprint is the low-order bit of byte j of the block.
class BlockFilter {
 public:
  BlockFilter(std::span<const Byte> p, unsigned width) : width_(width) {
    const std::size_t m = p.size();
    const std::size_t count = m - width_ + 1;
    unsigned bits = 1;
    while ((std::size_t{1} << bits) < 2 * count) ++bits;
    bucket_bits_ = bits;
    heads_.assign(std::size_t{1} << bits, -1);
    entries_.reserve(count);
    // Ascending insertion at the chain head leaves each chain ordered by
    // descending offset.
    for (std::size_t off = 0; off < count; ++off) {
      const std::uint64_t fp = fingerprint(p, off, width_);
      const std::size_t b = bucket(fp);
      entries_.push_back({fp, off, heads_[b]});
      heads_[b] = static_cast<std::int32_t>(entries_.size() - 1);
    }
  }

  template <class Seq>
  static std::uint64_t fingerprint(const Seq& s, std::size_t pos, unsigned width) {
    std::uint64_t fp = 0;
    for (unsigned j = 0; j < width; ++j) {
      fp |= static_cast<std::uint64_t>(s[pos + j] & 1u) << j;
    }
    return fp;
  }

  unsigned width() const noexcept { return width_; }

  bool contains(std::uint64_t fp) const noexcept {
    bool found = false;
    for_each_offset(fp, [&](std::size_t) { found = true; });
    return found;
  }

  /// Visits pattern offsets whose block fingerprint equals fp, largest first.
  template <class F>
  void for_each_offset(std::uint64_t fp, F&& f) const {
    for (std::int32_t e = heads_[bucket(fp)]; e >= 0; e = entries_[e].next) {
      if (entries_[e].fp == fp) f(entries_[e].offset);
    }
  }

 private:
  struct Entry {
    std::uint64_t fp;
    std::size_t offset;
    std::int32_t next;
  };

  std::size_t bucket(std::uint64_t fp) const noexcept {
    return static_cast<std::size_t>((fp * 0x9E3779B97F4A7C15ull) >> (64 - bucket_bits_));
  }

  unsigned width_;
  unsigned bucket_bits_ = 1;
  std::vector<std::int32_t> heads_;
  std::vector<Entry> entries_;
};

/// Long-pattern filter: fingerprints one W-byte text block every
/// m - W + 1 positions, so every window contains exactly one sampled block,
/// and verifies the alignments whose pattern block shares the fingerprint.
class Ssef {
 public:
  static constexpr std::size_t kMinLength = 32;

  explicit Ssef(const Pattern& p, WordSpec word = kDefaultWord)
      : pattern_(p.bytes().begin(), p.bytes().end()),
        filter_(checked(p), block_width(p.size(), word)) {}

  /// Block width used for a pattern of length m: the word width, capped at
  /// 64 and at (m + 1) / 2 so that the sampling stride stays >= W.
  static unsigned block_width(std::size_t m, WordSpec word) noexcept {
    const std::size_t cap = std::min<std::size_t>({word.bits(), 64, (m + 1) / 2});
    return static_cast<unsigned>(cap);
  }

  std::size_t stride() const noexcept { return pattern_.size() - filter_.width() + 1; }
  const BlockFilter& filter() const noexcept { return filter_; }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    const unsigned w = filter_.width();
    const std::size_t step = stride();
    for (std::size_t b = 0; b + w <= n; b += step) {
      const std::uint64_t fp = BlockFilter::fingerprint(t, b, w);
      filter_.for_each_offset(fp, [&](std::size_t off) {
        if (off > b) return;
        const std::size_t s = b - off;
        if (s + m <= n && matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
      });
    }
  }

 private:
  static std::span<const Byte> checked(const Pattern& p) {
    if (p.size() < kMinLength) throw ApplicabilityError("SSEF requires m >= 32");
    return p.bytes();
  }

  std::vector<Byte> pattern_;
  BlockFilter filter_;
};

Occurrences search_hor(const Pattern& p, const Text& t);
Occurrences search_qs(const Pattern& p, const Text& t);
Occurrences search_br(const Pattern& p, const Text& t);
Occurrences search_tvsbs(const Pattern& p, const Text& t);
Occurrences search_fjs(const Pattern& p, const Text& t);
Occurrences search_hashq(unsigned q, const Pattern& p, const Text& t);
Occurrences search_ssef(const Pattern& p, const Text& t);

}  // namespace smatch
