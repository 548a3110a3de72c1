#include "smatch/registry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "smatch/automata.hpp"
#include "smatch/bitparallel.hpp"
#include "smatch/comparison.hpp"

namespace smatch {

namespace {

bool iequals(std::string_view a, std::string_view b) noexcept {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

template <class S, class... Args>
SearcherFactory model(Args... args) {
  return [=](const Pattern& p) -> std::unique_ptr<AnySearcher> {
    return std::make_unique<SearcherModel<S>>(S(args..., p));
  };
}

template <template <class> class S, class... Args>
SearcherFactory word_model(WordSpec word, Args... args) {
  switch (word.bits()) {
    case 32:
      return model<S<std::uint32_t>>(args...);
#ifdef __SIZEOF_INT128__
    case 128:
      return model<S<Word128>>(args...);
#endif
    default:
      return model<S<std::uint64_t>>(args...);
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::kComparison: return "comparison";
    case Family::kAutomata: return "automata";
    case Family::kBitParallel: return "bit-parallel";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) noexcept {
  for (Family f : {Family::kComparison, Family::kAutomata, Family::kBitParallel}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::string AlgorithmDescriptor::bounds() const {
  std::ostringstream os;
  if (m_max) {
    os << m_min << " <= m <= " << *m_max;
  } else {
    os << "m >= " << m_min;
  }
  return os.str();
}

std::unique_ptr<AnySearcher> AlgorithmDescriptor::prepare(const Pattern& p) const {
  if (!applicable(p.size())) {
    throw ApplicabilityError(id + " requires " + bounds() + " (got m = " +
                             std::to_string(p.size()) + ")");
  }
  return make(p);
}

Registry::Registry(WordSpec word) : word_(word) {
  const std::size_t w = word.bits();
  const auto comparison = [](std::string id, std::size_t m_min, SearcherFactory f) {
    return AlgorithmDescriptor{std::move(id), Family::kComparison, m_min, std::nullopt, false,
                               std::move(f)};
  };

  algos_.push_back(comparison("BF", 1, model<BruteForce>()));
  algos_.push_back(comparison("HOR", 1, model<Horspool>()));
  algos_.push_back(comparison("QS", 1, model<QuickSearch>()));
  algos_.push_back(comparison("BR", 1, model<BerryRavindran>()));
  algos_.push_back(comparison("TVSBS", 1, model<Tvsbs>()));
  algos_.push_back(comparison("FJS", 1, model<Fjs>()));
  for (unsigned q : {3u, 5u, 8u}) {
    algos_.push_back(comparison("HASH" + std::to_string(q), q, model<HashQ>(q)));
  }
  algos_.push_back(comparison("SSEF", Ssef::kMinLength, [word](const Pattern& p) {
    return std::unique_ptr<AnySearcher>(std::make_unique<SearcherModel<Ssef>>(Ssef(p, word)));
  }));

  algos_.push_back({"BOM", Family::kAutomata, 1, std::nullopt, false, model<Bom>()});
  algos_.push_back({"EBOM", Family::kAutomata, 2, std::nullopt, false, model<Ebom>()});

  const auto bitpar = [](std::string id, std::size_t m_min, std::optional<std::size_t> m_max,
                         SearcherFactory f) {
    return AlgorithmDescriptor{std::move(id), Family::kBitParallel, m_min, m_max,
                               m_max.has_value(), std::move(f)};
  };
  algos_.push_back(bitpar("SO", 1, std::nullopt, word_model<ShiftOr>(word)));
  algos_.push_back(bitpar("SA", 1, std::nullopt, word_model<ShiftAnd>(word)));
  algos_.push_back(bitpar("BNDM", 1, w, word_model<Bndm>(word)));
  algos_.push_back(bitpar("SBNDM", 1, w, word_model<Sbndm>(word)));
  for (unsigned q : {2u, 4u, 6u, 8u}) {
    algos_.push_back(bitpar("SBNDMq" + std::to_string(q), q, w, word_model<SbndmQ>(word, q)));
  }
  algos_.push_back(bitpar("FSBNDM", 1, w - 1, word_model<Fsbndm>(word)));
  algos_.push_back(bitpar("LBNDM", 1, std::nullopt, word_model<Lbndm>(word)));
  algos_.push_back(bitpar("SBNDM-BMH", 1, w, word_model<SbndmBmh>(word)));
  algos_.push_back(bitpar("BMH-SBNDM", 1, w, word_model<BmhSbndm>(word)));
}

const Registry& Registry::standard() {
  static const Registry registry(kDefaultWord);
  return registry;
}

const AlgorithmDescriptor* Registry::find(std::string_view id) const noexcept {
  for (const auto& a : algos_) {
    if (iequals(a.id, id)) return &a;
  }
  return nullptr;
}

const AlgorithmDescriptor& Registry::at(std::string_view id) const {
  if (const auto* a = find(id)) return *a;
  throw std::out_of_range("unknown algorithm id: " + std::string(id));
}

std::vector<const AlgorithmDescriptor*> Registry::applicable(std::size_t m) const {
  std::vector<const AlgorithmDescriptor*> out;
  for (const auto& a : algos_) {
    if (a.applicable(m)) out.push_back(&a);
  }
  return out;
}

void Registry::add(AlgorithmDescriptor d) {
  if (find(d.id) != nullptr) throw std::invalid_argument("duplicate algorithm id: " + d.id);
  algos_.push_back(std::move(d));
}

std::vector<const AlgorithmDescriptor*> applicable_algorithms(std::size_t m) {
  return Registry::standard().applicable(m);
}

}  // namespace smatch
