#include "rmcsst/css.hpp"

#include <stdexcept>

#include "rmcsst/reed_muller.hpp"

namespace rmcsst {

CssPair::CssPair(LinearCode c1, LinearCode c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
  if (c1_.length() != c2_.length()) throw std::invalid_argument("CssPair: code lengths differ");
  if (!is_subcode(c2_, c1_)) throw std::invalid_argument("CssPair: C2 is not a subcode of C1");
}

CssParams css_params(const CssPair& p) {
  CssParams out;
  out.n = p.length();
  out.k = p.logical_dim();
  const auto d1 = min_distance(p.c1());
  const auto d2perp = min_distance(dual(p.c2()));
  if (!d1)
    out.d_lower = d2perp;
  else if (!d2perp)
    out.d_lower = d1;
  else
    out.d_lower = std::min(*d1, *d2perp);
  return out;
}

CssParams rm_css_params(unsigned m, int r1, int r2) {
  if (r2 > r1) throw std::invalid_argument("rm_css_params: r2 > r1 breaks the nesting");
  const RmParams p1 = rm_params(r1, m);
  const RmParams p2 = rm_params(r2, m);
  CssParams out;
  out.n = p1.n;
  out.k = p1.k - p2.k;
  // d2perp = d(RM(m - r2 - 1, m)) = 2^(r2 + 1); infinite when the dual order
  // hits -1 (r2 = m, the full space).
  std::optional<std::uint64_t> d2perp;
  if (r2 < static_cast<int>(m)) d2perp = std::uint64_t{1} << (r2 + 1);
  if (!p1.d)
    out.d_lower = d2perp;
  else if (!d2perp)
    out.d_lower = p1.d;
  else
    out.d_lower = std::min(*p1.d, *d2perp);
  return out;
}

BitMatrix stabilizer_matrix(const CssPair& p) {
  const std::size_t n = p.length();
  const LinearCode c1_dual = dual(p.c1());

  BitMatrix g(0, 2 * n);
  for (std::size_t r = 0; r < c1_dual.canon().rows(); ++r) {
    BitVector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row.set(n + j, c1_dual.canon().get(r, j));
    g.append_row(std::move(row));
  }
  for (std::size_t r = 0; r < p.c2().canon().rows(); ++r) {
    BitVector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row.set(j, p.c2().canon().get(r, j));
    g.append_row(std::move(row));
  }
  if (g.rows() == 0) g = BitMatrix(0, 2 * n);
  return g;
}

bool symplectic_product(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("symplectic_product: rows must have equal even length");
  const std::size_t n = x.size() / 2;
  bool acc = false;
  for (std::size_t i = 0; i < n; ++i) {
    acc ^= (x.get(i) && y.get(n + i));
    acc ^= (x.get(n + i) && y.get(i));
  }
  return acc;
}

}  // namespace rmcsst
