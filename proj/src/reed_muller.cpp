#include "rmcsst/reed_muller.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmcsst/errors.hpp"

namespace rmcsst {

namespace {

void validate_rm_args(int r, unsigned m) {
  if (m < 1) throw std::invalid_argument("rm: m must be >= 1");
  if (r < -1 || r > static_cast<int>(m))
    throw std::invalid_argument("rm: order r=" + std::to_string(r) + " outside [-1, m] for m=" + std::to_string(m));
}

// Advances `combo` (strictly increasing indices into [0, m)) to its
// lexicographic successor; false once exhausted.
bool next_combination(std::vector<unsigned>& combo, unsigned m) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] + 1 <= m - (k - i)) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RmCode rm_code(int r, unsigned m) {
  validate_rm_args(r, m);
  if (m > kRmConstructionMaxM)
    throw EnumerationCapError("rm_code: m = " + std::to_string(m) + " exceeds construction cap " +
                              std::to_string(kRmConstructionMaxM) + "; use rm_params for parameters");
  const std::size_t n = std::size_t{1} << m;
  if (r == -1) return RmCode{r, m, LinearCode::zero(n)};

  BitMatrix gen(0, n);
  // Monomials prod_{j in T} x_j in graded-lex order on T. Variable x_j reads
  // the j-th least significant bit of the column index.
  for (int deg = 0; deg <= r; ++deg) {
    std::vector<unsigned> combo(static_cast<std::size_t>(deg));
    std::iota(combo.begin(), combo.end(), 0u);
    do {
      std::uint64_t mask = 0;
      for (unsigned j : combo) mask |= std::uint64_t{1} << j;
      BitVector row(n);
      for (std::size_t point = 0; point < n; ++point) {
        if ((point & mask) == mask) row.set(point, true);
      }
      gen.append_row(std::move(row));
    } while (deg > 0 && next_combination(combo, m));
  }
  return RmCode{r, m, LinearCode(gen)};
}

RmParams rm_params(int r, unsigned m) {
  validate_rm_args(r, m);
  if (m > 62) throw std::invalid_argument("rm_params: m > 62 overflows the 64-bit parameter fields");
  RmParams p;
  p.n = std::uint64_t{1} << m;
  if (r == -1) {
    p.k = 0;
    p.d = std::nullopt;
    return p;
  }
  p.k = *binomial_sum(m, r).to_u64();
  p.d = std::uint64_t{1} << (m - static_cast<unsigned>(r));
  return p;
}

int rm_dual_order(int r, unsigned m) {
  if (r < -1 || r > static_cast<int>(m)) throw std::invalid_argument("rm_dual_order: r outside [-1, m]");
  return static_cast<int>(m) - r - 1;
}

}  // namespace rmcsst
