#include "smatch/core.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

namespace smatch {

Pattern::Pattern(std::vector<Byte> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("pattern must not be empty");
}

Pattern::Pattern(std::span<const Byte> bytes)
    : Pattern(std::vector<Byte>(bytes.begin(), bytes.end())) {}

Pattern Pattern::from_string(std::string_view s) {
  return Pattern(std::vector<Byte>(s.begin(), s.end()));
}

Text::Text(std::vector<Byte> bytes, std::string id)
    : bytes_(std::move(bytes)), id_(std::move(id)) {
  if (id_.empty()) throw std::invalid_argument("text id must not be empty");
}

Text Text::from_string(std::string_view s, std::string id) {
  return Text(std::vector<Byte>(s.begin(), s.end()), std::move(id));
}

std::size_t Text::alphabet_size() const noexcept {
  std::array<bool, 256> seen{};
  for (Byte c : bytes_) seen[c] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

Occurrences brute_force_search(const Pattern& p, std::span<const Byte> t) {
  return run(BruteForce(p), t);
}

Occurrences brute_force_search(const Pattern& p, const Text& t) {
  return brute_force_search(p, t.bytes());
}

bool verify_equal(const Occurrences& a, const Occurrences& b) noexcept { return a == b; }

Text load_text_file(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open text file: " + path.string());
  std::vector<Byte> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("error reading text file: " + path.string());
  if (id.empty()) id = path.stem().string();
  if (id.empty()) id = "text";
  return Text(std::move(bytes), std::move(id));
}

std::size_t pattern_period(std::span<const Byte> p) {
  const std::size_t m = p.size();
  if (m == 0) return 1;
  // Standard failure function; border[i] is the longest proper border of p[0..i).
  std::vector<std::size_t> border(m + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < m; ++i) {
    while (k > 0 && p[i] != p[k]) k = border[k];
    if (p[i] == p[k]) ++k;
    border[i + 1] = k;
  }
  return m - border[m];
}

}  // namespace smatch
