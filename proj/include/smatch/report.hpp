#pragma once

// Result tables (Markdown / CSV) and the best-algorithm map.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smatch/bench.hpp"
#include "smatch/registry.hpp"

namespace smatch {

/// Table number format: two decimals below 10, one below 100, none above
/// ("0.55", "2.70", "16.4", "150").
std::string format_value(double v);

enum class TableFormat { kMarkdown, kCsv };

/// Column header of the measurement CSV.
inline constexpr std::string_view kMeasurementCsvHeader =
    "text_id,sigma,family,algorithm,m,mean,stddev,mean_occurrences,metric";

/// One table for one text. Rows are grouped by family and ordered as in the
/// registry; cells of inapplicable (algorithm, m) pairs are "-". Throws
/// std::invalid_argument when the measurements mix text ids.
std::string render_table(std::span<const Measurement> ms, TableFormat format);

/// CSV rows for any mix of texts, in canonical order.
std::string render_measurements_csv(std::span<const Measurement> ms);

class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses measurement CSV; blank lines and '#' comment lines are skipped.
/// `runs` is not part of the format and comes back as 0.
std::vector<Measurement> parse_measurements_csv(std::string_view csv);

struct ColumnWinner {
  std::size_t m;
  std::string algorithm;
};

/// Lowest mean per m column; ties go to the earlier family, then the
/// lexicographically smaller id.
std::vector<ColumnWinner> column_winners(std::span<const Measurement> ms);

struct BestCell {
  std::string algorithm;
  Provenance provenance = Provenance::kPaperStated;
};

class BestMap {
 public:
  const BestCell& at(SizeClasses c) const noexcept { return cells_[index(c)]; }
  void set(SizeClasses c, BestCell cell) { cells_[index(c)] = std::move(cell); }

  /// sigma_class,m_class,algorithm,provenance
  std::string to_csv() const;
  std::string to_markdown() const;

 private:
  static std::size_t index(SizeClasses c) noexcept {
    return static_cast<std::size_t>(c.sigma) * 4 + static_cast<std::size_t>(c.length);
  }

  std::array<BestCell, 16> cells_{};
};

/// Measured winner per class cell where data exists (lowest mean, averaged
/// over the cell's sampled (text, m) points, among algorithms present at all
/// of them); the fallback map entry elsewhere. Throws std::invalid_argument
/// on mixed metrics.
BestMap render_best_map(std::span<const Measurement> ms,
                        const SelectionMap& fallback = SelectionMap::standard());

}  // namespace smatch
