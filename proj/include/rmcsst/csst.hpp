#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmcsst/css.hpp"

namespace rmcsst {

enum class CsstMethod { Definition, Corollary, Theorem };

// Outcome of a CSS-T check. When the verdict is false the witness is a
// codeword of C2 that fails the per-codeword condition (or, if C2 is not
// even, a minimal odd-weight canonical generator). checked_count is the
// number of messages examined up to and including the decisive one, which
// makes it independent of how the enumeration was scheduled.
struct CssTReport {
  bool verdict = false;
  CsstMethod method = CsstMethod::Definition;
  std::optional<BitVector> witness;
  std::uint64_t checked_count = 0;
};

inline constexpr std::size_t kCsstDimCap = 20;

// Definition route: C2 even, and for every nonzero x in C2 the restriction
// of dual(C1) to supp(x) contains a self-dual code (even restriction length
// and self-orthogonal dual). Enumerates messages in increasing integer
// order; the witness is the first failure in that order. May split the range
// across worker threads (RMCSST_THREADS caps them); the minimal failing
// index wins, so results do not depend on scheduling.
CssTReport check_csst_bruteforce(const CssPair& p);

// Puncture/shorten route: C2 even, and for every nonzero x in C2,
// punct(C1, comp) is a subcode of short(dual(C1), comp) where comp is the
// complement of supp(x). Same enumeration order and witness rule.
CssTReport check_csst_corollary(const CssPair& p);

// Closed form for CSS(RM(r1,m), RM(r2,m)) with r2 <= r1 <= floor((m-1)/2):
// writing t = floor((m-1)/2) - r1, the pair is CSS-T iff r2 <= 2t+1 for even
// m, r2 <= 2t for odd m. Parameters outside that range are rejected
// ("inapplicable; use brute force").
bool check_csst_theorem(unsigned m, int r1, int r2);

struct CrossRow {
  unsigned m = 0;
  int r1 = 0;
  int r2 = 0;
  bool theorem_verdict = false;
  bool bruteforce_verdict = false;
};

// Closed form vs. brute force over every (m, r1, r2) with 1 <= m <= m_max,
// 0 <= r2 <= r1 <= floor((m-1)/2). m_max <= 5.
std::vector<CrossRow> cross_validate(unsigned m_max);

// Worker count used by the enumeration: RMCSST_THREADS if set and positive,
// otherwise a hardware-based default.
unsigned csst_worker_count();

}  // namespace rmcsst
