#include "smatch/automata.hpp"

#include <algorithm>

namespace smatch {

FactorOracle::FactorOracle(std::span<const Byte> word) : word_(word.begin(), word.end()) {
  const std::size_t m = word_.size();
  initial_.fill(kNone);
  std::vector<std::vector<Edge>> pending(m + 1);

  auto lookup = [&](std::int32_t k, Byte c) -> std::int32_t {
    if (k == 0) return initial_[c];
    const auto ks = static_cast<std::size_t>(k);
    if (ks < m && word_[ks] == c) return k + 1;
    for (const Edge& e : pending[ks]) {
      if (e.symbol == c) return e.target;
    }
    return kNone;
  };

  // supply[i] is the supply (suffix) link of state i.
  std::vector<std::int32_t> supply(m + 1, kNone);
  for (std::size_t i = 1; i <= m; ++i) {
    const Byte c = word_[i - 1];
    const auto target = static_cast<std::int32_t>(i);
    if (i == 1) initial_[c] = 1;
    std::int32_t k = supply[i - 1];
    while (k > kNone && lookup(k, c) == kNone) {
      if (k == 0) {
        initial_[c] = target;
      } else {
        pending[static_cast<std::size_t>(k)].push_back({c, target});
      }
      k = supply[static_cast<std::size_t>(k)];
    }
    supply[i] = (k == kNone) ? 0 : lookup(k, c);
  }

  ext_begin_.assign(m + 2, 0);
  for (std::size_t s = 0; s <= m; ++s) {
    ext_begin_[s + 1] = ext_begin_[s] + static_cast<std::uint32_t>(pending[s].size());
  }
  external_.reserve(ext_begin_[m + 1]);
  for (auto& edges : pending) {
    external_.insert(external_.end(), edges.begin(), edges.end());
  }
}

FactorOracle FactorOracle::for_reversed(const Pattern& p) {
  std::vector<Byte> rev(p.bytes().rbegin(), p.bytes().rend());
  return FactorOracle(rev);
}

std::size_t FactorOracle::transition_count() const noexcept {
  const auto from_initial = static_cast<std::size_t>(
      std::count_if(initial_.begin(), initial_.end(), [](std::int32_t s) { return s != kNone; }));
  const std::size_t spine_after_initial = word_.empty() ? 0 : word_.size() - 1;
  return from_initial + spine_after_initial + external_.size();
}

bool FactorOracle::accepts(std::span<const Byte> w) const noexcept {
  std::int32_t q = 0;
  for (Byte c : w) {
    q = next(q, c);
    if (q == kNone) return false;
  }
  return true;
}

FirstTransitionTable::FirstTransitionTable(const FactorOracle& oracle) : table_(256 * 256) {
  for (unsigned a = 0; a < 256; ++a) {
    const std::int32_t first = oracle.next(0, static_cast<Byte>(a));
    auto row = table_.begin() + a * 256;
    if (first == FactorOracle::kNone) {
      std::fill(row, row + 256, kFailFirst);
      continue;
    }
    for (unsigned b = 0; b < 256; ++b) {
      const std::int32_t second = oracle.next(first, static_cast<Byte>(b));
      row[b] = second == FactorOracle::kNone ? kFailSecond : second;
    }
  }
}

Occurrences search_bom(const Pattern& p, const Text& t) { return run(Bom(p), t.bytes()); }

Occurrences search_ebom(const Pattern& p, const Text& t) { return run(Ebom(p), t.bytes()); }

}  // namespace smatch
