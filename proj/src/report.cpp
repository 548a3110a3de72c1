#include "smatch/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace smatch {

namespace {

std::size_t registry_rank(std::string_view id) {
  const auto all = Registry::standard().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].id == id) return i;
  }
  return all.size();
}

/// Row order: family, registry position, id.
auto row_key(const Measurement& x) {
  return std::make_tuple(static_cast<int>(x.family), registry_rank(x.algorithm), x.algorithm);
}

bool canonical_less(const Measurement& a, const Measurement& b) {
  const auto ka = std::tuple_cat(std::make_tuple(a.text_id), row_key(a),
                                 std::make_tuple(a.m, a.mean_value, a.stddev, a.mean_occurrences,
                                                 static_cast<int>(a.metric), a.sigma));
  const auto kb = std::tuple_cat(std::make_tuple(b.text_id), row_key(b),
                                 std::make_tuple(b.m, b.mean_value, b.stddev, b.mean_occurrences,
                                                 static_cast<int>(b.metric), b.sigma));
  return ka < kb;
}

std::vector<Measurement> sorted(std::span<const Measurement> ms) {
  std::vector<Measurement> v(ms.begin(), ms.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

/// Winner ordering inside a column: lower mean, then family, then id.
bool better(const Measurement& a, const Measurement& b) {
  return std::make_tuple(a.mean_value, static_cast<int>(a.family), a.algorithm) <
         std::make_tuple(b.mean_value, static_cast<int>(b.family), b.algorithm);
}

void append_csv_row(std::ostringstream& os, const Measurement& x) {
  os << x.text_id << ',' << x.sigma << ',' << to_string(x.family) << ',' << x.algorithm << ','
     << x.m << ',' << format_value(x.mean_value) << ',' << format_value(x.stddev) << ','
     << format_value(x.mean_occurrences) << ',' << to_string(x.metric) << '\n';
}

void require_single_text(std::span<const Measurement> ms) {
  for (const auto& x : ms) {
    if (x.text_id != ms.front().text_id) {
      throw std::invalid_argument("measurements mix text ids '" + ms.front().text_id + "' and '" +
                                  x.text_id + "'");
    }
    if (x.metric != ms.front().metric) {
      throw std::invalid_argument("measurements mix metrics");
    }
  }
}

std::string render_markdown(const std::vector<Measurement>& v) {
  std::ostringstream os;
  std::vector<std::size_t> columns;
  for (const auto& x : v) columns.push_back(x.m);
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  if (!v.empty()) {
    const auto& first = v.front();
    os << "### " << first.text_id << " (sigma " << first.sigma << ", "
       << (first.metric == Metric::kTime ? "mean ms" : "mean reads") << ")\n\n";
  }
  os << "| family | algorithm |";
  for (std::size_t m : columns) os << ' ' << m << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "---:|";
  os << '\n';

  // Rank of every measurement within its column; the first of duplicate
  // (algorithm, m) entries is the one shown.
  std::map<std::pair<std::string, std::size_t>, const Measurement*> cell;
  for (const auto& x : v) cell.emplace(std::make_pair(x.algorithm, x.m), &x);
  std::map<const Measurement*, std::size_t> rank;
  for (std::size_t m : columns) {
    std::vector<const Measurement*> col;
    for (const auto& [key, ptr] : cell) {
      if (key.second == m) col.push_back(ptr);
    }
    std::sort(col.begin(), col.end(),
              [](const Measurement* a, const Measurement* b) { return better(*a, *b); });
    for (std::size_t r = 0; r < col.size(); ++r) rank[col[r]] = r + 1;
  }

  std::vector<std::string> rows_seen;
  for (const auto& x : v) {
    if (!rows_seen.empty() && rows_seen.back() == x.algorithm) continue;
    rows_seen.push_back(x.algorithm);
    os << "| " << to_string(x.family) << " | " << x.algorithm << " |";
    for (std::size_t m : columns) {
      const auto it = cell.find({x.algorithm, m});
      if (it == cell.end()) {
        os << " - |";
        continue;
      }
      const std::size_t r = rank.at(it->second);
      const std::string value = format_value(it->second->mean_value);
      if (r == 1) {
        os << " **" << value << "** (1) |";
      } else {
        os << ' ' << value << " (" << r << ") |";
      }
    }
    os << '\n';
  }
  return os.str();
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_value(double v) {
  auto decimals = [](double x) { return x >= 100 ? 0 : x >= 10 ? 1 : 2; };
  auto print = [](double x, int d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", d, x);
    return std::string(buf);
  };
  const int d = decimals(v);
  std::string s = print(v, d);
  // Rounding may carry into the next magnitude (99.96 -> "100.0").
  const double shown = std::stod(s);
  if (decimals(shown) != d) s = print(shown, decimals(shown));
  return s;
}

std::string render_measurements_csv(std::span<const Measurement> ms) {
  std::ostringstream os;
  os << kMeasurementCsvHeader << '\n';
  for (const auto& x : sorted(ms)) append_csv_row(os, x);
  return os.str();
}

std::string render_table(std::span<const Measurement> ms, TableFormat format) {
  require_single_text(ms);
  if (format == TableFormat::kCsv) return render_measurements_csv(ms);
  return render_markdown(sorted(ms));
}

std::vector<Measurement> parse_measurements_csv(std::string_view csv) {
  std::vector<Measurement> out;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (std::string_view line : split(csv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kMeasurementCsvHeader) {
        throw CsvParseError(line_no, "expected header '" + std::string(kMeasurementCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw CsvParseError(line_no, "expected 9 fields, found " + std::to_string(f.size()));
    }
    Measurement x;
    x.text_id = std::string(f[0]);
    if (x.text_id.empty()) throw CsvParseError(line_no, "empty text_id");
    if (!parse_number(f[1], x.sigma)) throw CsvParseError(line_no, "bad sigma");
    const auto fam = parse_family(f[2]);
    if (!fam) throw CsvParseError(line_no, "unknown family '" + std::string(f[2]) + "'");
    x.family = *fam;
    x.algorithm = std::string(f[3]);
    if (x.algorithm.empty()) throw CsvParseError(line_no, "empty algorithm");
    if (!parse_number(f[4], x.m)) throw CsvParseError(line_no, "bad m");
    if (!parse_number(f[5], x.mean_value)) throw CsvParseError(line_no, "bad mean");
    if (!parse_number(f[6], x.stddev)) throw CsvParseError(line_no, "bad stddev");
    if (!parse_number(f[7], x.mean_occurrences)) {
      throw CsvParseError(line_no, "bad mean_occurrences");
    }
    const auto metric = parse_metric(f[8]);
    if (!metric) throw CsvParseError(line_no, "unknown metric '" + std::string(f[8]) + "'");
    x.metric = *metric;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<ColumnWinner> column_winners(std::span<const Measurement> ms) {
  std::map<std::size_t, const Measurement*> best;
  for (const auto& x : ms) {
    auto [it, inserted] = best.emplace(x.m, &x);
    if (!inserted && better(x, *it->second)) it->second = &x;
  }
  std::vector<ColumnWinner> out;
  for (const auto& [m, x] : best) out.push_back({m, x->algorithm});
  return out;
}

std::string BestMap::to_csv() const {
  std::ostringstream os;
  os << "sigma_class,m_class,algorithm,provenance\n";
  for (SigmaClass s : kSigmaClasses) {
    for (LengthClass l : kLengthClasses) {
      const auto& c = at({s, l});
      os << to_string(s) << ',' << to_string(l) << ',' << c.algorithm << ','
         << to_string(c.provenance) << '\n';
    }
  }
  return os.str();
}

std::string BestMap::to_markdown() const {
  std::ostringstream os;
  os << "| sigma \\ m |";
  for (LengthClass l : kLengthClasses) os << ' ' << to_string(l) << " |";
  os << "\n|---|---|---|---|---|\n";
  for (SigmaClass s : kSigmaClasses) {
    os << "| " << to_string(s) << " |";
    for (LengthClass l : kLengthClasses) {
      const auto& c = at({s, l});
      os << ' ' << c.algorithm << " (" << to_string(c.provenance) << ") |";
    }
    os << '\n';
  }
  return os.str();
}

BestMap render_best_map(std::span<const Measurement> ms, const SelectionMap& fallback) {
  for (const auto& x : ms) {
    if (x.metric != ms.front().metric) throw std::invalid_argument("measurements mix metrics");
  }

  struct Algo {
    Family family;
    std::map<std::pair<std::string, std::size_t>, double> points;
  };
  std::array<std::set<std::pair<std::string, std::size_t>>, 16> cell_points;
  std::array<std::map<std::string, Algo>, 16> cell_algos;
  auto index = [](SizeClasses c) {
    return static_cast<std::size_t>(c.sigma) * 4 + static_cast<std::size_t>(c.length);
  };

  for (const auto& x : ms) {
    if (x.sigma < 1 || x.sigma > 256 || x.m < 1) continue;
    const std::size_t i = index(classify(x.sigma, x.m));
    const auto point = std::make_pair(x.text_id, x.m);
    cell_points[i].insert(point);
    auto& a = cell_algos[i][x.algorithm];
    a.family = x.family;
    a.points[point] = x.mean_value;
  }

  BestMap out;
  for (SigmaClass s : kSigmaClasses) {
    for (LengthClass l : kLengthClasses) {
      const SizeClasses c{s, l};
      const std::size_t i = index(c);
      const Algo* winner = nullptr;
      std::string winner_id;
      double winner_mean = 0;
      for (const auto& [id, a] : cell_algos[i]) {
        if (a.points.size() != cell_points[i].size()) continue;
        double sum = 0;
        for (const auto& [pt, v] : a.points) sum += v;
        const double mean = sum / static_cast<double>(a.points.size());
        const auto key = std::make_tuple(mean, static_cast<int>(a.family), id);
        if (winner == nullptr ||
            key < std::make_tuple(winner_mean, static_cast<int>(winner->family), winner_id)) {
          winner = &a;
          winner_id = id;
          winner_mean = mean;
        }
      }
      if (winner != nullptr) {
        out.set(c, {winner_id, Provenance::kMeasured});
      } else {
        const auto& e = fallback.at(c);
        out.set(c, {e.algorithm, e.provenance});
      }
    }
  }
  return out;
}

}  // namespace smatch
