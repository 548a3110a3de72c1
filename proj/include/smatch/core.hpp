#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smatch {

using Byte = std::uint8_t;

/// Ascending 0-based start positions of every (possibly overlapping) match.
using Occurrences = std::vector<std::size_t>;

/// Raised when an algorithm is asked to handle a pattern length outside its
/// defined range (the blank cells of a result table).
class ApplicabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Needle of length m >= 1.
class Pattern {
 public:
  explicit Pattern(std::vector<Byte> bytes);
  explicit Pattern(std::span<const Byte> bytes);

  static Pattern from_string(std::string_view s);

  std::span<const Byte> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }
  Byte operator[](std::size_t i) const noexcept { return bytes_[i]; }

 private:
  std::vector<Byte> bytes_;
};

/// Haystack bytes plus a short label identifying the buffer ("rand4", "ecoli").
class Text {
 public:
  explicit Text(std::vector<Byte> bytes, std::string id = "text");

  static Text from_string(std::string_view s, std::string id = "text");

  std::span<const Byte> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }
  Byte operator[](std::size_t i) const noexcept { return bytes_[i]; }
  const std::string& id() const noexcept { return id_; }

  /// Number of distinct byte values present.
  std::size_t alphabet_size() const noexcept;

 private:
  std::vector<Byte> bytes_;
  std::string id_;
};

/// Plain read access used on the timing path.
struct ByteView {
  const Byte* data = nullptr;
  std::size_t n = 0;

  Byte operator[](std::size_t i) const noexcept { return data[i]; }
  std::size_t size() const noexcept { return n; }
};

/// Read access that bumps an external counter on every character fetched.
class CountingView {
 public:
  CountingView(std::span<const Byte> bytes, std::uint64_t* reads) noexcept
      : data_(bytes.data()), n_(bytes.size()), reads_(reads) {}

  Byte operator[](std::size_t i) const noexcept {
    ++*reads_;
    return data_[i];
  }
  std::size_t size() const noexcept { return n_; }

 private:
  const Byte* data_;
  std::size_t n_;
  std::uint64_t* reads_;
};

/// A text together with a counter of single-character accesses. The counter
/// is a machine-independent cost proxy; it never changes search results.
/// Not thread-safe.
class InstrumentedText {
 public:
  explicit InstrumentedText(std::span<const Byte> bytes) noexcept : bytes_(bytes) {}
  explicit InstrumentedText(const Text& text) noexcept : bytes_(text.bytes()) {}

  CountingView view() noexcept { return CountingView(bytes_, &reads_); }
  std::span<const Byte> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  std::uint64_t reads() const noexcept { return reads_; }
  void reset() noexcept { reads_ = 0; }

 private:
  std::span<const Byte> bytes_;
  std::uint64_t reads_ = 0;
};

/// Bit width of the machine word driving the bit-parallel searchers.
class WordSpec {
 public:
  constexpr explicit WordSpec(unsigned bits = 64) : bits_(bits) {
    if (bits != 32 && bits != 64 && bits != 128) {
      throw std::invalid_argument("word width must be 32, 64 or 128 bits");
    }
  }

  constexpr unsigned bits() const noexcept { return bits_; }
  friend constexpr bool operator==(WordSpec, WordSpec) = default;

 private:
  unsigned bits_;
};

inline constexpr WordSpec kDefaultWord{64};

/// Compares t[s+from .. s+m) against p[from .. m) left to right, stopping at
/// the first mismatch. Callers guarantee s + m <= t.size().
template <class View>
inline bool matches_at(View t, std::span<const Byte> p, std::size_t s,
                       std::size_t from = 0) noexcept {
  for (std::size_t j = from; j < p.size(); ++j) {
    if (t[s + j] != p[j]) return false;
  }
  return true;
}

/// Naive window-by-window scan; the reference every other searcher is
/// checked against.
class BruteForce {
 public:
  explicit BruteForce(const Pattern& p) : pattern_(p.bytes().begin(), p.bytes().end()) {}

  template <class View>
  void scan(View t, Occurrences& out) const {
    const std::size_t m = pattern_.size();
    const std::size_t n = t.size();
    if (m > n) return;
    for (std::size_t s = 0; s + m <= n; ++s) {
      if (matches_at(t, pattern_, s)) out.push_back(s);
    }
  }

 private:
  std::vector<Byte> pattern_;
};

Occurrences brute_force_search(const Pattern& p, const Text& t);
Occurrences brute_force_search(const Pattern& p, std::span<const Byte> t);

/// Exact sequence equality; order matters.
bool verify_equal(const Occurrences& a, const Occurrences& b) noexcept;

/// Reads a raw binary file (no header) into a Text.
Text load_text_file(const std::filesystem::path& path, std::string id = {});

/// Period of p, i.e. m minus the length of its longest proper border.
std::size_t pattern_period(std::span<const Byte> p);

/// Runs any searcher exposing `scan(View, Occurrences&)` over plain bytes or
/// over an instrumented text.
template <class Searcher>
Occurrences run(const Searcher& s, std::span<const Byte> t) {
  Occurrences out;
  s.scan(ByteView{t.data(), t.size()}, out);
  return out;
}

template <class Searcher>
Occurrences run(const Searcher& s, InstrumentedText& t) {
  Occurrences out;
  s.scan(t.view(), out);
  return out;
}

}  // namespace smatch
