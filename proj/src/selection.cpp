#include <sstream>
#include <stdexcept>

#include "smatch/registry.hpp"

namespace smatch {

std::string_view to_string(SigmaClass c) noexcept {
  switch (c) {
    case SigmaClass::kVerySmall: return "very_small";
    case SigmaClass::kSmall: return "small";
    case SigmaClass::kLarge: return "large";
    case SigmaClass::kVeryLarge: return "very_large";
  }
  return "?";
}

std::string_view to_string(LengthClass c) noexcept {
  switch (c) {
    case LengthClass::kVeryShort: return "very_short";
    case LengthClass::kShort: return "short";
    case LengthClass::kLong: return "long";
    case LengthClass::kVeryLong: return "very_long";
  }
  return "?";
}

std::optional<SigmaClass> parse_sigma_class(std::string_view s) noexcept {
  for (SigmaClass c : kSigmaClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<LengthClass> parse_length_class(std::string_view s) noexcept {
  for (LengthClass c : kLengthClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kPaperStated: return "paper-stated";
    case Provenance::kDerivedFill: return "derived-fill";
    case Provenance::kMeasured: return "measured";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view s) noexcept {
  for (Provenance p : {Provenance::kPaperStated, Provenance::kDerivedFill, Provenance::kMeasured}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

SizeClasses classify(std::size_t sigma, std::size_t m) {
  if (sigma < 1 || sigma > 256) throw std::invalid_argument("alphabet size must be in [1, 256]");
  if (m < 1) throw std::invalid_argument("pattern length must be >= 1");
  SizeClasses c{};
  if (sigma < 4) {
    c.sigma = SigmaClass::kVerySmall;
  } else if (sigma < 32) {
    c.sigma = SigmaClass::kSmall;
  } else if (sigma < 128) {
    c.sigma = SigmaClass::kLarge;
  } else {
    c.sigma = SigmaClass::kVeryLarge;  // 128 included
  }
  if (m <= 4) {
    c.length = LengthClass::kVeryShort;
  } else if (m <= 32) {
    c.length = LengthClass::kShort;
  } else if (m <= 256) {
    c.length = LengthClass::kLong;
  } else {
    c.length = LengthClass::kVeryLong;
  }
  return c;
}

const SelectionMap& SelectionMap::standard() {
  static const SelectionMap map = [] {
    using S = SigmaClass;
    using L = LengthClass;
    constexpr auto stated = Provenance::kPaperStated;
    constexpr auto fill = Provenance::kDerivedFill;
    SelectionMap m;
    m.set({S::kVerySmall, L::kVeryShort}, {"SA", stated, {}});
    m.set({S::kVerySmall, L::kShort}, {"HASH5", fill, {"HASH8"}});
    m.set({S::kVerySmall, L::kLong}, {"HASH8", fill, {"SSEF"}});
    m.set({S::kVerySmall, L::kVeryLong}, {"SSEF", stated, {}});

    m.set({S::kSmall, L::kVeryShort}, {"TVSBS", stated, {}});
    m.set({S::kSmall, L::kShort}, {"HASH5", stated, {"HASH3"}});
    m.set({S::kSmall, L::kLong}, {"HASH5", stated, {"SBNDMq4"}});
    m.set({S::kSmall, L::kVeryLong}, {"SSEF", stated, {}});

    m.set({S::kLarge, L::kVeryShort}, {"FJS", stated, {}});
    m.set({S::kLarge, L::kShort}, {"EBOM", stated, {}});
    m.set({S::kLarge, L::kLong}, {"FSBNDM", stated, {"TVSBS"}});
    m.set({S::kLarge, L::kVeryLong}, {"SSEF", stated, {}});

    m.set({S::kVeryLarge, L::kVeryShort}, {"FJS", stated, {}});
    m.set({S::kVeryLarge, L::kShort}, {"EBOM", stated, {"SBNDM-BMH", "BMH-SBNDM"}});
    m.set({S::kVeryLarge, L::kLong}, {"FSBNDM", stated, {}});
    m.set({S::kVeryLarge, L::kVeryLong}, {"LBNDM", stated, {"SSEF"}});
    return m;
  }();
  return map;
}

std::string SelectionMap::to_csv() const {
  std::ostringstream os;
  os << "sigma_class,m_class,algorithm,provenance\n";
  for (SigmaClass s : kSigmaClasses) {
    for (LengthClass l : kLengthClasses) {
      const auto& e = at({s, l});
      os << to_string(s) << ',' << to_string(l) << ',' << e.algorithm << ','
         << to_string(e.provenance) << '\n';
    }
  }
  return os.str();
}

const AlgorithmDescriptor& select(std::size_t sigma, std::size_t m, const Registry& registry,
                                  const SelectionMap& map) {
  return registry.at(map.at(classify(sigma, m)).algorithm);
}

const AlgorithmDescriptor& select_applicable(std::size_t sigma, std::size_t m,
                                             const Registry& registry, const SelectionMap& map) {
  const auto& entry = map.at(classify(sigma, m));
  const auto& primary = registry.at(entry.algorithm);
  if (primary.applicable(m)) return primary;
  for (const auto& alt : entry.alternates) {
    if (const auto* a = registry.find(alt); a != nullptr && a->applicable(m)) return *a;
  }
  return registry.at("LBNDM");
}

}  // namespace smatch
