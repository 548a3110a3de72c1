#pragma once

// Algorithm catalog with applicability metadata, and the alphabet-size x
// pattern-length selection map.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smatch/core.hpp"

namespace smatch {

enum class Family { kComparison, kAutomata, kBitParallel };

std::string_view to_string(Family f) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;

/// A preprocessed searcher behind a virtual interface.
class AnySearcher {
 public:
  virtual ~AnySearcher() = default;
  virtual Occurrences find_all(std::span<const Byte> text) const = 0;
  virtual Occurrences find_all(InstrumentedText& text) const = 0;
};

template <class S>
class SearcherModel final : public AnySearcher {
 public:
  explicit SearcherModel(S s) : s_(std::move(s)) {}
  Occurrences find_all(std::span<const Byte> text) const override { return run(s_, text); }
  Occurrences find_all(InstrumentedText& text) const override { return run(s_, text); }
  const S& searcher() const noexcept { return s_; }

 private:
  S s_;
};

using SearcherFactory = std::function<std::unique_ptr<AnySearcher>(const Pattern&)>;

struct AlgorithmDescriptor {
  std::string id;
  Family family = Family::kComparison;
  std::size_t m_min = 1;
  std::optional<std::size_t> m_max;  // nullopt = unbounded
  bool needs_word = false;
  SearcherFactory make;

  bool applicable(std::size_t m) const noexcept {
    return m >= m_min && (!m_max || m <= *m_max);
  }

  /// Human-readable applicability range, e.g. "m >= 5" or "2 <= m <= 64".
  std::string bounds() const;

  /// Preprocesses p; throws ApplicabilityError when m is out of range.
  std::unique_ptr<AnySearcher> prepare(const Pattern& p) const;
};

class Registry {
 public:
  /// The full catalog for the given word width.
  explicit Registry(WordSpec word = kDefaultWord);

  /// Process-wide catalog (64-bit words).
  static const Registry& standard();

  WordSpec word() const noexcept { return word_; }
  std::span<const AlgorithmDescriptor> all() const noexcept { return algos_; }

  /// Case-insensitive lookup; nullptr when absent.
  const AlgorithmDescriptor* find(std::string_view id) const noexcept;
  /// As find, but throws std::out_of_range naming the unknown id.
  const AlgorithmDescriptor& at(std::string_view id) const;

  std::vector<const AlgorithmDescriptor*> applicable(std::size_t m) const;

  /// Appends an entry; ids must stay unique.
  void add(AlgorithmDescriptor d);

 private:
  WordSpec word_;
  std::vector<AlgorithmDescriptor> algos_;
};

std::vector<const AlgorithmDescriptor*> applicable_algorithms(std::size_t m);

enum class SigmaClass { kVerySmall, kSmall, kLarge, kVeryLarge };
enum class LengthClass { kVeryShort, kShort, kLong, kVeryLong };

inline constexpr std::array<SigmaClass, 4> kSigmaClasses{
    SigmaClass::kVerySmall, SigmaClass::kSmall, SigmaClass::kLarge, SigmaClass::kVeryLarge};
inline constexpr std::array<LengthClass, 4> kLengthClasses{
    LengthClass::kVeryShort, LengthClass::kShort, LengthClass::kLong, LengthClass::kVeryLong};

std::string_view to_string(SigmaClass c) noexcept;
std::string_view to_string(LengthClass c) noexcept;
std::optional<SigmaClass> parse_sigma_class(std::string_view s) noexcept;
std::optional<LengthClass> parse_length_class(std::string_view s) noexcept;

struct SizeClasses {
  SigmaClass sigma;
  LengthClass length;
  friend bool operator==(const SizeClasses&, const SizeClasses&) = default;
};

/// sigma: <4 | [4,32) | [32,128) | >=128.  m: <=4 | <=32 | <=256 | >256.
SizeClasses classify(std::size_t sigma, std::size_t m);

enum class Provenance { kPaperStated, kDerivedFill, kMeasured };

std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> parse_provenance(std::string_view s) noexcept;

struct SelectionEntry {
  std::string algorithm;
  Provenance provenance = Provenance::kPaperStated;
  std::vector<std::string> alternates;
};

/// Total map (sigma class, length class) -> algorithm id.
class SelectionMap {
 public:
  /// The published winners, with unlisted cells filled from the per-text
  /// tables and tagged derived-fill.
  static const SelectionMap& standard();

  const SelectionEntry& at(SizeClasses c) const noexcept { return cells_[index(c)]; }
  void set(SizeClasses c, SelectionEntry e) { cells_[index(c)] = std::move(e); }

  /// sigma_class,m_class,algorithm,provenance
  std::string to_csv() const;

 private:
  static std::size_t index(SizeClasses c) noexcept {
    return static_cast<std::size_t>(c.sigma) * 4 + static_cast<std::size_t>(c.length);
  }

  std::array<SelectionEntry, 16> cells_{};
};

/// Map entry for the class rectangle containing (sigma, m).
const AlgorithmDescriptor& select(std::size_t sigma, std::size_t m,
                                  const Registry& registry = Registry::standard(),
                                  const SelectionMap& map = SelectionMap::standard());

/// Like select, but guaranteed applicable at exactly m: falls back to the
/// cell's alternates, then to LBNDM (defined for every m).
const AlgorithmDescriptor& select_applicable(std::size_t sigma, std::size_t m,
                                             const Registry& registry = Registry::standard(),
                                             const SelectionMap& map = SelectionMap::standard());

}  // namespace smatch
