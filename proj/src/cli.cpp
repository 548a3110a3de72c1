#include "smatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "smatch/bench.hpp"
#include "smatch/registry.hpp"
#include "smatch/report.hpp"
#include "smatch/verify.hpp"

namespace smatch {

namespace {

constexpr int kExitError = 2;

/// Reported as "error: <message>" with exit status 2.
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CommandError("cannot open '" + path + "' for writing");
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw CommandError("write to '" + path + "' failed");
}

void emit(const std::string& path, std::string_view data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
  } else {
    write_file(path, data);
  }
}

std::vector<const AlgorithmDescriptor*> resolve_algos(const Registry& reg,
                                                      const std::string& spec) {
  std::vector<const AlgorithmDescriptor*> out;
  if (spec == "all") {
    for (const auto& d : reg.all()) out.push_back(&d);
    return out;
  }
  std::stringstream ss(spec);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    const auto* d = reg.find(id);
    if (d == nullptr) throw CommandError("unknown algorithm '" + id + "'");
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  if (out.empty()) throw CommandError("no algorithms selected");
  return out;
}

/// Known corpus files keep their conventional ids ("E.coli" -> "ecoli").
Text load_bench_text(const std::string& path, std::ostream& err) {
  const std::string name = std::filesystem::path(path).filename().string();
  for (const auto& known : known_corpora()) {
    if (known.file_name == name) {
      auto loaded = load_corpus(path, known.id);
      for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';
      return std::move(loaded.text);
    }
  }
  if (!std::filesystem::exists(path)) throw CommandError("text file not found: " + path);
  return load_text_file(path);
}

struct GenArgs {
  std::size_t sigma = 0;
  std::size_t size = kReferenceTextSize;
  std::uint64_t seed = 1;
  std::string out;
  bool allow_any = false;
  bool desk = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const std::size_t size = a.desk ? kDeskTextSize : a.size;
  const Text t = generate_rand_text(a.sigma, size, a.seed, a.allow_any);
  const auto bytes = t.bytes();
  write_file(a.out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  out << "n=" << t.size() << " sigma=" << a.sigma << '\n';
  return 0;
}

struct BenchArgs {
  std::vector<std::string> texts;
  std::string algos = "all";
  std::vector<std::size_t> lengths = BenchConfig{}.lengths;
  std::size_t patterns = BenchConfig{}.patterns_per_length;
  std::uint64_t seed = 1;
  std::string metric = "time";
  std::string out = "-";
  bool parallel = false;
};

int cmd_bench(const BenchArgs& a, const Registry& reg, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.lengths = a.lengths;
  cfg.patterns_per_length = a.patterns;
  cfg.seed = a.seed;
  cfg.metric = *parse_metric(a.metric);
  cfg.parallel = a.parallel;
  cfg.validate();
  const auto algos = resolve_algos(reg, a.algos);

  std::vector<Text> texts;
  for (const auto& path : a.texts) texts.push_back(load_bench_text(path, err));
  const auto ms = run_benchmark(cfg, texts, algos);

  std::ostringstream doc;
  doc << "# prng=" << kPrngName << '\n'
      << "# seed=" << cfg.seed << '\n'
      << "# metric=" << to_string(cfg.metric) << '\n'
      << "# patterns=" << cfg.patterns_per_length << '\n'
      << "# word=" << reg.word().bits() << '\n';
  if (cfg.metric == Metric::kTime) {
    for (const auto& x : ms) {
      doc << "# preprocess_ms," << x.text_id << ',' << x.algorithm << ',' << x.m << ','
          << format_value(x.mean_preprocess_ms) << '\n';
    }
  }
  doc << render_measurements_csv(ms);
  emit(a.out, doc.str(), out);
  return 0;
}

struct ReportArgs {
  std::string in;
  std::string format = "md";
  bool best_map = false;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const std::string csv = read_file(a.in);
  std::vector<Measurement> ms;
  try {
    ms = parse_measurements_csv(csv);
  } catch (const CsvParseError& e) {
    throw CommandError(a.in + ": " + e.what());
  }
  const bool md = a.format == "md";

  if (a.best_map) {
    const BestMap map = render_best_map(ms);
    out << (md ? map.to_markdown() : map.to_csv());
    return 0;
  }
  if (!md) {
    out << render_measurements_csv(ms);
    return 0;
  }
  std::map<std::string, std::vector<Measurement>> by_text;
  for (auto& x : ms) by_text[x.text_id].push_back(std::move(x));
  if (by_text.empty()) {
    out << render_table({}, TableFormat::kMarkdown);
    return 0;
  }
  bool first = true;
  for (const auto& [id, group] : by_text) {
    if (!first) out << '\n';
    first = false;
    out << render_table(group, TableFormat::kMarkdown);
  }
  return 0;
}

struct SearchArgs {
  std::string algo = "auto";
  std::string pattern;
  std::string pattern_file;
  std::string text;
};

int cmd_search(const SearchArgs& a, const Registry& reg, std::ostream& out) {
  std::vector<Byte> pbytes;
  if (!a.pattern_file.empty()) {
    const std::string raw = read_file(a.pattern_file);
    pbytes.assign(raw.begin(), raw.end());
  } else {
    auto decoded = decode_pattern_escapes(a.pattern);
    if (!decoded) throw CommandError("malformed escape in --pattern");
    pbytes = std::move(*decoded);
  }
  if (pbytes.empty()) throw CommandError("pattern must not be empty");
  const Pattern p(std::move(pbytes));

  if (!std::filesystem::exists(a.text)) throw CommandError("text file not found: " + a.text);
  const Text t = load_text_file(a.text);

  const AlgorithmDescriptor* algo = nullptr;
  if (a.algo == "auto") {
    algo = &select_applicable(std::max<std::size_t>(1, t.alphabet_size()), p.size(), reg);
  } else {
    algo = reg.find(a.algo);
    if (algo == nullptr) throw CommandError("unknown algorithm '" + a.algo + "'");
  }
  const Occurrences occ = algo->prepare(p)->find_all(t.bytes());
  std::ostringstream os;
  for (std::size_t i : occ) os << i << '\n';
  out << os.str();
  return occ.empty() ? 1 : 0;
}

struct VerifyArgs {
  std::size_t cases = 10000;
  std::uint64_t seed = 1;
  std::string algos = "all";
};

int cmd_verify(const VerifyArgs& a, const Registry& reg, std::ostream& out) {
  VerifyConfig cfg;
  cfg.cases = a.cases;
  cfg.seed = a.seed;
  const auto algos = resolve_algos(reg, a.algos);
  const VerifyReport r = run_verify(cfg, algos);
  out << format_verify_report(r);
  return r.ok() ? 0 : 1;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::optional<std::vector<Byte>> decode_pattern_escapes(std::string_view s) {
  std::vector<Byte> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(static_cast<Byte>(s[i]));
      continue;
    }
    if (i + 1 < s.size() && s[i + 1] == '\\') {
      out.push_back('\\');
      ++i;
      continue;
    }
    if (i + 3 < s.size() && s[i + 1] == 'x') {
      const int hi = hex_digit(s[i + 2]);
      const int lo = hex_digit(s[i + 3]);
      if (hi < 0 || lo < 0) return std::nullopt;
      out.push_back(static_cast<Byte>(hi * 16 + lo));
      i += 3;
      continue;
    }
    return std::nullopt;
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact single-pattern string matching: search, benchmark and report"};
  app.require_subcommand(1);
  unsigned word_bits = 64;
  app.add_option("--word", word_bits, "Machine word width for bit-parallel searchers")
      ->check(CLI::IsMember({32u, 64u, 128u}));

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a uniform random text");
  g->add_option("--sigma", gen.sigma, "Alphabet size (2, 4, ..., 256)")->required();
  g->add_option("--size", gen.size, "Text size in bytes")->capture_default_str();
  g->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output file")->required();
  g->add_flag("--allow-any-sigma", gen.allow_any, "Accept any sigma in [1, 256]");
  g->add_flag("--desk", gen.desk, "Use the 1 MiB desk-scale size");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Measure algorithms on text files, CSV output");
  b->add_option("--text", bench.texts, "Text file (repeatable)")->required();
  b->add_option("--algos", bench.algos, "'all' or comma-separated ids")->capture_default_str();
  b->add_option("--lengths", bench.lengths, "Pattern lengths, comma-separated")
      ->delimiter(',')
      ->capture_default_str();
  b->add_option("--patterns", bench.patterns, "Patterns per length")->capture_default_str();
  b->add_option("--seed", bench.seed, "PRNG seed")->capture_default_str();
  b->add_option("--metric", bench.metric, "time or reads")
      ->check(CLI::IsMember({"time", "reads"}))
      ->capture_default_str();
  b->add_option("--out", bench.out, "Output CSV file, '-' for stdout")->capture_default_str();
  b->add_flag("--parallel", bench.parallel, "Run cells on all cores (reads metric only)");

  ReportArgs report;
  auto* r = app.add_subcommand("report", "Render tables or the best-algorithm map from CSV");
  r->add_option("--in", report.in, "Measurement CSV")->required();
  r->add_option("--format", report.format, "md or csv")
      ->check(CLI::IsMember({"md", "csv"}))
      ->capture_default_str();
  r->add_flag("--best-map", report.best_map, "Render the best-algorithm map");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Print every occurrence position, one per line");
  s->add_option("--algo", search.algo, "Algorithm id or 'auto'")->capture_default_str();
  s->add_option("--pattern", search.pattern, "Pattern; \\xNN escapes allowed");
  s->add_option("--pattern-file", search.pattern_file, "Raw pattern file (wins over --pattern)");
  s->add_option("--text", search.text, "Text file")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Differential test against brute force");
  v->add_option("--cases", verify.cases, "Cases per algorithm")->capture_default_str();
  v->add_option("--seed", verify.seed, "PRNG seed")->capture_default_str();
  v->add_option("--algos", verify.algos, "'all' or comma-separated ids")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const Registry reg{WordSpec(word_bits)};
    if (*g) return cmd_gen(gen, out);
    if (*b) return cmd_bench(bench, reg, out, err);
    if (*r) return cmd_report(report, out);
    if (*s) {
      if (search.pattern.empty() && search.pattern_file.empty()) {
        throw CommandError("one of --pattern or --pattern-file is required");
      }
      return cmd_search(search, reg, out);
    }
    if (*v) return cmd_verify(verify, reg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"smatch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace smatch
