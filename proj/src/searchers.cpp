#include "smatch/automata.hpp"
#include "smatch/bitparallel.hpp"
#include "smatch/comparison.hpp"

namespace smatch {

Occurrences search_hor(const Pattern& p, const Text& t) { return run(Horspool(p), t.bytes()); }
Occurrences search_qs(const Pattern& p, const Text& t) { return run(QuickSearch(p), t.bytes()); }
Occurrences search_br(const Pattern& p, const Text& t) { return run(BerryRavindran(p), t.bytes()); }
Occurrences search_tvsbs(const Pattern& p, const Text& t) { return run(Tvsbs(p), t.bytes()); }
Occurrences search_fjs(const Pattern& p, const Text& t) { return run(Fjs(p), t.bytes()); }

Occurrences search_hashq(unsigned q, const Pattern& p, const Text& t) {
  return run(HashQ(q, p), t.bytes());
}

Occurrences search_ssef(const Pattern& p, const Text& t) { return run(Ssef(p), t.bytes()); }

Occurrences search_so(const Pattern& p, const Text& t) { return run(ShiftOr<>(p), t.bytes()); }
Occurrences search_sa(const Pattern& p, const Text& t) { return run(ShiftAnd<>(p), t.bytes()); }
Occurrences search_bndm(const Pattern& p, const Text& t) { return run(Bndm<>(p), t.bytes()); }
Occurrences search_sbndm(const Pattern& p, const Text& t) { return run(Sbndm<>(p), t.bytes()); }

Occurrences search_sbndmq(unsigned q, const Pattern& p, const Text& t) {
  return run(SbndmQ<>(q, p), t.bytes());
}

Occurrences search_fsbndm(const Pattern& p, const Text& t) { return run(Fsbndm<>(p), t.bytes()); }
Occurrences search_lbndm(const Pattern& p, const Text& t) { return run(Lbndm<>(p), t.bytes()); }

Occurrences search_sbndm_bmh(const Pattern& p, const Text& t) {
  return run(SbndmBmh<>(p), t.bytes());
}

Occurrences search_bmh_sbndm(const Pattern& p, const Text& t) {
  return run(BmhSbndm<>(p), t.bytes());
}

}  // namespace smatch
