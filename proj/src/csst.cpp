#include "rmcsst/csst.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "rmcsst/errors.hpp"
#include "rmcsst/reed_muller.hpp"

namespace rmcsst {

unsigned csst_worker_count() {
  if (const char* env = std::getenv("RMCSST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {

// Per-codeword condition of the definition route: the restriction of
// dual(C1) to supp(x), realized as short(dual(C1), complement of supp(x)),
// contains a self-dual code.
bool definition_condition(const LinearCode& c1_dual, const BitVector& x) {
  const SupportSet comp = SupportSet::support_of(x).complement(x.size());
  return contains_self_dual(shorten(c1_dual, comp));
}

// Per-codeword condition of the puncture/shorten route.
bool corollary_condition(const LinearCode& c1, const LinearCode& c1_dual, const BitVector& x) {
  const SupportSet comp = SupportSet::support_of(x).complement(x.size());
  return is_subcode(puncture(c1, comp), shorten(c1_dual, comp));
}

template <typename Condition>
CssTReport run_check(const CssPair& p, CsstMethod method, Condition&& condition) {
  if (p.c2().dim() > kCsstDimCap)
    throw EnumerationCapError("csst check: dim(C2) = " + std::to_string(p.c2().dim()) +
                              " exceeds enumeration cap " + std::to_string(kCsstDimCap));

  CssTReport report;
  report.method = method;

  // Evenness of C2 first; a violation short-circuits with the lightest
  // odd-weight canonical generator as witness.
  std::optional<std::size_t> odd_row;
  for (std::size_t r = 0; r < p.c2().canon().rows(); ++r) {
    const std::size_t w = p.c2().canon().row(r).weight();
    if (w % 2 == 0) continue;
    if (!odd_row || w < p.c2().canon().row(*odd_row).weight()) odd_row = r;
  }
  if (odd_row) {
    report.verdict = false;
    report.witness = p.c2().canon().row(*odd_row);
    report.checked_count = 0;
    return report;
  }

  const std::uint64_t total = std::uint64_t{1} << p.c2().dim();
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> first_fail{kNone};

  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t msg = begin; msg < end; ++msg) {
      if (msg >= first_fail.load(std::memory_order_relaxed)) return;
      const BitVector x = p.c2().codeword(msg);
      if (condition(x)) continue;
      // Record the minimal failing message index.
      std::uint64_t seen = first_fail.load(std::memory_order_relaxed);
      while (msg < seen && !first_fail.compare_exchange_weak(seen, msg)) {
      }
      return;
    }
  };

  const unsigned workers = total >= 4096 ? std::min<std::uint64_t>(csst_worker_count(), 64) : 1;
  if (workers <= 1) {
    scan(1, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total - 1 + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = 1 + w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(scan, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  const std::uint64_t fail = first_fail.load();
  if (fail == kNone) {
    report.verdict = true;
    report.checked_count = total - 1;
  } else {
    report.verdict = false;
    report.witness = p.c2().codeword(fail);
    report.checked_count = fail;
  }
  return report;
}

}  // namespace

CssTReport check_csst_bruteforce(const CssPair& p) {
  const LinearCode c1_dual = dual(p.c1());
  return run_check(p, CsstMethod::Definition,
                   [&](const BitVector& x) { return definition_condition(c1_dual, x); });
}

CssTReport check_csst_corollary(const CssPair& p) {
  const LinearCode c1_dual = dual(p.c1());
  return run_check(p, CsstMethod::Corollary,
                   [&](const BitVector& x) { return corollary_condition(p.c1(), c1_dual, x); });
}

bool check_csst_theorem(unsigned m, int r1, int r2) {
  if (m < 1) throw std::invalid_argument("check_csst_theorem: m must be >= 1");
  const int half = static_cast<int>((m - 1) / 2);
  if (r2 < 0 || r2 > r1 || r1 > half)
    throw std::invalid_argument("check_csst_theorem: theorem inapplicable for these parameters; use brute force");
  const int t = half - r1;
  if (m % 2 == 0) return r2 <= 2 * t + 1;
  return r2 <= 2 * t;
}

std::vector<CrossRow> cross_validate(unsigned m_max) {
  if (m_max > 5) throw std::invalid_argument("cross_validate: m_max must be <= 5 (brute-force scale)");
  std::vector<CrossRow> rows;
  for (unsigned m = 1; m <= m_max; ++m) {
    const int half = static_cast<int>((m - 1) / 2);
    for (int r1 = half; r1 >= 0; --r1) {
      for (int r2 = 0; r2 <= r1; ++r2) {
        CrossRow row;
        row.m = m;
        row.r1 = r1;
        row.r2 = r2;
        row.theorem_verdict = check_csst_theorem(m, r1, r2);
        const CssPair pair = make_css(rm_code(r1, m).code, rm_code(r2, m).code);
        row.bruteforce_verdict = check_csst_bruteforce(pair).verdict;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace rmcsst
