#pragma once

// Bit-parallel searchers: Shift-Or, Shift-And, BNDM and its simplified,
// q-gram, forward, long-pattern and Horspool-hybrid variants.
//
// Every searcher is templated on the machine word; `Word` is one of
// std::uint32_t, std::uint64_t or (where available) unsigned __int128.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smatch/comparison.hpp"
#include "smatch/core.hpp"

namespace smatch {

#ifdef __SIZEOF_INT128__
using Word128 = unsigned __int128;
#endif

template <class Word>
inline constexpr unsigned kWordBits = sizeof(Word) * 8;

namespace detail {

template <class Word>
void require_word_fit(const char* name, std::size_t m, std::size_t limit) {
  if (m > limit) {
    throw ApplicabilityError(std::string(name) + " requires m <= " + std::to_string(limit) +
                             " (word width " + std::to_string(kWordBits<Word>) + ")");
  }
}

}  // namespace detail

/// One machine word per byte value. In the forward convention bit j of
/// mask[c] is set iff p[j] == c; in the reversed convention bit (m-1-j) is.
template <class Word = std::uint64_t>
class CharMaskTable {
 public:
  static CharMaskTable forward(std::span<const Byte> p) {
    CharMaskTable t;
    for (std::size_t j = 0; j < p.size(); ++j) t.mask_[p[j]] |= Word{1} << j;
    return t;
  }

  static CharMaskTable reversed(std::span<const Byte> p) {
    CharMaskTable t;
    const std::size_t m = p.size();
    for (std::size_t j = 0; j < m; ++j) t.mask_[p[j]] |= Word{1} << (m - 1 - j);
    return t;
  }

  Word operator[](Byte c) const noexcept { return mask_[c]; }
  Word& operator[](Byte c) noexcept { return mask_[c]; }

 private:
  std::array<Word, 256> mask_{};
};

/// Masks for patterns spanning ceil(m / w) words; forward convention.
template <class Word>
class MultiwordMasks {
 public:
  explicit MultiwordMasks(std::span<const Byte> p)
      : words_((p.size() + kWordBits<Word> - 1) / kWordBits<Word>), mask_(256 * words_, Word{0}) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      mask_[p[j] * words_ + j / kWordBits<Word>] |= Word{1} << (j % kWordBits<Word>);
    }
  }

  std::size_t words() const noexcept { return words_; }
  const Word* row(Byte c) const noexcept { return mask_.data() + c * words_; }

 private:
  std::size_t words_;
  std::vector<Word> mask_;
};

/// Shift-And: one state update per text character; multiword for m > w.
template <class Word = std::uint64_t>
class ShiftAnd {
 public:
  explicit ShiftAnd(const Pattern& p) : m_(p.size()), masks_(p.bytes()) {}

  std::size_t state_words() const noexcept { return masks_.words(); }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    const std::size_t words = masks_.words();
    const Word accept = Word{1} << ((m_ - 1) % kWordBits<Word>);
    if (words == 1) {
      Word d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        d = ((d << 1) | Word{1}) & masks_.row(t[i])[0];
        if (d & accept) out.push_back(i + 1 - m_);
      }
      return;
    }
    std::vector<Word> d(words, Word{0});
    for (std::size_t i = 0; i < n; ++i) {
      const Word* b = masks_.row(t[i]);
      Word carry = 1;
      for (std::size_t k = 0; k < words; ++k) {
        const Word next_carry = d[k] >> (kWordBits<Word> - 1);
        d[k] = ((d[k] << 1) | carry) & b[k];
        carry = next_carry;
      }
      if (d[words - 1] & accept) out.push_back(i + 1 - m_);
    }
  }

 private:
  std::size_t m_;
  MultiwordMasks<Word> masks_;
};

/// Shift-Or: the complemented dual of Shift-And (0 bits are active states).
template <class Word = std::uint64_t>
class ShiftOr {
 public:
  explicit ShiftOr(const Pattern& p) : m_(p.size()), masks_(p.bytes()) {}

  std::size_t state_words() const noexcept { return masks_.words(); }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    const std::size_t words = masks_.words();
    const Word accept = Word{1} << ((m_ - 1) % kWordBits<Word>);
    if (words == 1) {
      Word d = ~Word{0};
      for (std::size_t i = 0; i < n; ++i) {
        d = (d << 1) | ~masks_.row(t[i])[0];
        if (!(d & accept)) out.push_back(i + 1 - m_);
      }
      return;
    }
    std::vector<Word> d(words, ~Word{0});
    for (std::size_t i = 0; i < n; ++i) {
      const Word* b = masks_.row(t[i]);
      Word carry = 0;
      for (std::size_t k = 0; k < words; ++k) {
        const Word next_carry = d[k] >> (kWordBits<Word> - 1);
        d[k] = (d[k] << 1) | carry | ~b[k];
        carry = next_carry;
      }
      if (!(d[words - 1] & accept)) out.push_back(i + 1 - m_);
    }
  }

 private:
  std::size_t m_;
  MultiwordMasks<Word> masks_;
};

/// Backward nondeterministic DAWG matching, m <= w.
template <class Word = std::uint64_t>
class Bndm {
 public:
  explicit Bndm(const Pattern& p) : m_(p.size()) {
    detail::require_word_fit<Word>("BNDM", m_, kWordBits<Word>);
    masks_ = CharMaskTable<Word>::reversed(p.bytes());
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    const Word prefix = Word{1} << (m_ - 1);
    for (std::size_t s = 0; s + m_ <= n;) {
      std::size_t i = m_;
      std::size_t last = m_;
      Word d = ~Word{0};
      while (true) {
        d &= masks_[t[s + i - 1]];
        --i;
        if (d == 0) break;
        if (d & prefix) {
          if (i == 0) {
            out.push_back(s);
            break;
          }
          last = i;
        }
        if (i == 0) break;
        d <<= 1;
      }
      s += last;
    }
  }

 private:
  std::size_t m_;
  CharMaskTable<Word> masks_;
};

namespace detail {

/// Backward factor scan shared by the simplified BNDM variants. `d` is the
/// state after the first `k` characters ending at `end` were read; returns
/// how many characters were read before the state died (m means the whole
/// window equals the pattern).
template <class Word, class View>
inline std::size_t extend_factor(const CharMaskTable<Word>& masks, View t, std::size_t end,
                                 std::size_t m, std::size_t k, Word d) {
  while (k < m) {
    d = (d << 1) & masks[t[end - k]];
    if (d == 0) break;
    ++k;
  }
  return k;
}

}  // namespace detail

/// Simplified BNDM: no prefix bookkeeping; shifts past the longest factor
/// suffix, and by the pattern period after a match.
template <class Word = std::uint64_t>
class Sbndm {
 public:
  explicit Sbndm(const Pattern& p) : m_(p.size()) {
    detail::require_word_fit<Word>("SBNDM", m_, kWordBits<Word>);
    masks_ = CharMaskTable<Word>::reversed(p.bytes());
    period_ = pattern_period(p.bytes());
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    for (std::size_t j = m_ - 1; j < n;) {
      const Word d = masks_[t[j]];
      if (d == 0) {
        j += m_;
        continue;
      }
      const std::size_t k = detail::extend_factor(masks_, t, j, m_, 1, d);
      if (k == m_) {
        out.push_back(j + 1 - m_);
        j += period_;
      } else {
        j += m_ - k;
      }
    }
  }

 private:
  std::size_t m_;
  std::size_t period_ = 1;
  CharMaskTable<Word> masks_;
};

/// SBNDM entering each window with a q-gram read at once.
template <class Word = std::uint64_t>
class SbndmQ {
 public:
  SbndmQ(unsigned q, const Pattern& p) : q_(q), m_(p.size()) {
    if (q != 2 && q != 4 && q != 6 && q != 8) {
      throw std::invalid_argument("SBNDMq supports q in {2, 4, 6, 8}");
    }
    const std::string name = "SBNDMq" + std::to_string(q);
    if (m_ < q) throw ApplicabilityError(name + " requires m >= " + std::to_string(q));
    detail::require_word_fit<Word>(name.c_str(), m_, kWordBits<Word>);
    masks_ = CharMaskTable<Word>::reversed(p.bytes());
    period_ = pattern_period(p.bytes());
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    const std::size_t skip = m_ - q_ + 1;
    for (std::size_t j = m_ - 1; j < n;) {
      Word d = masks_[t[j]];
      for (unsigned r = 1; r < q_; ++r) d = (d << 1) & masks_[t[j - r]];
      if (d == 0) {
        j += skip;
        continue;
      }
      const std::size_t k = detail::extend_factor(masks_, t, j, m_, q_, d);
      if (k == m_) {
        out.push_back(j + 1 - m_);
        j += period_;
      } else {
        j += m_ - k;
      }
    }
  }

 private:
  unsigned q_;
  std::size_t m_;
  std::size_t period_ = 1;
  CharMaskTable<Word> masks_;
};

/// Forward SBNDM: runs on the pattern extended by one wildcard position, so
/// each window also covers the character that follows it. Uses m + 1 bits.
template <class Word = std::uint64_t>
class Fsbndm {
 public:
  explicit Fsbndm(const Pattern& p) : pattern_(p.bytes().begin(), p.bytes().end()) {
    const std::size_t m = pattern_.size();
    detail::require_word_fit<Word>("FSBNDM", m, kWordBits<Word> - 1);
    const auto base = CharMaskTable<Word>::reversed(p.bytes());
    for (unsigned c = 0; c < 256; ++c) {
      masks_[static_cast<Byte>(c)] = (base[static_cast<Byte>(c)] << 1) | Word{1};
    }
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    // e indexes the lookahead character; the window is t[e - m, e).
    std::size_t e = m;
    while (e < n) {
      const Word d = (masks_[t[e]] << 1) & masks_[t[e - 1]];
      if (d == 0) {
        e += m;
        continue;
      }
      const std::size_t k = detail::extend_factor(masks_, t, e, m + 1, 2, d);
      if (k == m + 1) {
        out.push_back(e - m);
        e += 1;
      } else {
        e += m + 1 - k;
      }
    }
    // The final alignment has no lookahead character.
    if (e == n && matches_at(t, std::span<const Byte>(pattern_), n - m)) out.push_back(n - m);
  }

 private:
  std::vector<Byte> pattern_;
  CharMaskTable<Word> masks_;
};

/// Pattern reduced by superimposition for long-pattern BNDM: with factor
/// k = ceil(m / w), position i of the reduced pattern (length floor(m / k))
/// accepts every byte of p[i*k, i*k + k); leftover bytes join the last class.
class SuperimposedPattern {
 public:
  SuperimposedPattern(std::span<const Byte> p, unsigned word_bits)
      : factor_((p.size() + word_bits - 1) / word_bits), length_(p.size() / factor_),
        classes_(length_) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const std::size_t cls = std::min(j / factor_, length_ - 1);
      classes_[cls][p[j]] = true;
    }
  }

  std::size_t factor() const noexcept { return factor_; }
  std::size_t length() const noexcept { return length_; }
  bool accepts(std::size_t position, Byte c) const noexcept { return classes_[position][c]; }

  /// True iff t[b + i*k] lies in class i for every reduced position i.
  bool admits(std::span<const Byte> t, std::size_t b) const noexcept {
    if (b + (length_ - 1) * factor_ >= t.size()) return false;
    for (std::size_t i = 0; i < length_; ++i) {
      if (!classes_[i][t[b + i * factor_]]) return false;
    }
    return true;
  }

 private:
  std::size_t factor_;
  std::size_t length_;
  std::vector<std::array<bool, 256>> classes_;
};

/// BNDM for long patterns: BNDM with the superimposed pattern over every
/// k-th text character acts as a filter; each hit at sampled position b
/// yields candidate starts (b - k, b] that are verified against p.
template <class Word = std::uint64_t>
class Lbndm {
 public:
  explicit Lbndm(const Pattern& p)
      : pattern_(p.bytes().begin(), p.bytes().end()), reduced_(p.bytes(), kWordBits<Word>) {
    const std::size_t len = reduced_.length();
    for (std::size_t i = 0; i < len; ++i) {
      for (unsigned c = 0; c < 256; ++c) {
        if (reduced_.accepts(i, static_cast<Byte>(c))) {
          masks_[static_cast<Byte>(c)] |= Word{1} << (len - 1 - i);
        }
      }
    }
  }

  const SuperimposedPattern& reduced() const noexcept { return reduced_; }

  /// Candidate starts produced by the filter phase, before verification.
  template <class View>
  Occurrences filter_candidates(View t) const {
    Occurrences cands;
    filter(t, [&](std::size_t s) { cands.push_back(s); });
    return cands;
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    filter(t, [&](std::size_t s) {
      if (matches_at(t, std::span<const Byte>(pattern_), s)) out.push_back(s);
    });
  }

 private:
  template <class View, class F>
  void filter(View t, F&& on_candidate) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    const std::size_t k = reduced_.factor();
    const std::size_t len = reduced_.length();
    const std::size_t reduced_n = (n + k - 1) / k;
    const Word prefix = Word{1} << (len - 1);
    for (std::size_t u = 0; u + len <= reduced_n;) {
      std::size_t i = len;
      std::size_t last = len;
      Word d = ~Word{0};
      while (true) {
        d &= masks_[t[(u + i - 1) * k]];
        --i;
        if (d == 0) break;
        if (d & prefix) {
          if (i == 0) {
            const std::size_t b = u * k;
            const std::size_t lo = b + 1 >= k ? b + 1 - k : 0;
            const std::size_t hi = std::min(b, n - m);
            for (std::size_t s = lo; s <= hi && lo <= hi; ++s) on_candidate(s);
            break;
          }
          last = i;
        }
        if (i == 0) break;
        d <<= 1;
      }
      u += last;
    }
  }

  std::vector<Byte> pattern_;
  SuperimposedPattern reduced_;
  CharMaskTable<Word> masks_;
};

/// SBNDM window test with the shift raised to the Horspool shift of the
/// window's last character whenever that is larger.
template <class Word = std::uint64_t>
class SbndmBmh {
 public:
  explicit SbndmBmh(const Pattern& p)
      : m_(p.size()), hbc_(BadCharTable::horspool(p.bytes())) {
    detail::require_word_fit<Word>("SBNDM-BMH", m_, kWordBits<Word>);
    masks_ = CharMaskTable<Word>::reversed(p.bytes());
    period_ = pattern_period(p.bytes());
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    for (std::size_t j = m_ - 1; j < n;) {
      const Byte c = t[j];
      const Word d = masks_[c];
      if (d == 0) {
        j += m_;
        continue;
      }
      const std::size_t k = detail::extend_factor(masks_, t, j, m_, 1, d);
      std::size_t shift = m_ - k;
      if (k == m_) {
        out.push_back(j + 1 - m_);
        shift = period_;
      }
      j += std::max(shift, hbc_[c]);
    }
  }

 private:
  std::size_t m_;
  std::size_t period_ = 1;
  BadCharTable hbc_;
  CharMaskTable<Word> masks_;
};

/// Horspool skip loop until the window's last character equals p[m-1], then
/// an SBNDM backward test of the window.
template <class Word = std::uint64_t>
class BmhSbndm {
 public:
  explicit BmhSbndm(const Pattern& p)
      : m_(p.size()), last_(p[p.size() - 1]), hbc_(BadCharTable::horspool(p.bytes())) {
    detail::require_word_fit<Word>("BMH-SBNDM", m_, kWordBits<Word>);
    masks_ = CharMaskTable<Word>::reversed(p.bytes());
    period_ = pattern_period(p.bytes());
  }

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t n = t.size();
    if (m_ > n) return;
    for (std::size_t j = m_ - 1; j < n;) {
      const Byte c = t[j];
      if (c != last_) {
        j += hbc_[c];
        continue;
      }
      const std::size_t k = detail::extend_factor(masks_, t, j, m_, 1, masks_[c]);
      std::size_t shift = m_ - k;
      if (k == m_) {
        out.push_back(j + 1 - m_);
        shift = period_;
      }
      j += std::max(shift, hbc_[c]);
    }
  }

 private:
  std::size_t m_;
  Byte last_;
  std::size_t period_ = 1;
  BadCharTable hbc_;
  CharMaskTable<Word> masks_;
};

Occurrences search_so(const Pattern& p, const Text& t);
Occurrences search_sa(const Pattern& p, const Text& t);
Occurrences search_bndm(const Pattern& p, const Text& t);
Occurrences search_sbndm(const Pattern& p, const Text& t);
Occurrences search_sbndmq(unsigned q, const Pattern& p, const Text& t);
Occurrences search_fsbndm(const Pattern& p, const Text& t);
Occurrences search_lbndm(const Pattern& p, const Text& t);
Occurrences search_sbndm_bmh(const Pattern& p, const Text& t);
Occurrences search_bmh_sbndm(const Pattern& p, const Text& t);

}  // namespace smatch
