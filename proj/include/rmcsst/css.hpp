#pragma once

#include <cstdint>
#include <optional>

#include "rmcsst/linear_code.hpp"

namespace rmcsst {

// Validated nested pair (C1, C2) with C2 inside C1; the classical data of a
// CSS code on n physical qubits.
class CssPair {
 public:
  CssPair(LinearCode c1, LinearCode c2);  // rejects length mismatch and C2 not inside C1

  const LinearCode& c1() const { return c1_; }
  const LinearCode& c2() const { return c2_; }
  std::size_t length() const { return c1_.length(); }
  std::size_t logical_dim() const { return c1_.dim() - c2_.dim(); }  // k1 - k2

 private:
  LinearCode c1_;
  LinearCode c2_;
};

inline CssPair make_css(LinearCode c1, LinearCode c2) { return CssPair(std::move(c1), std::move(c2)); }

struct CssParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> d_lower;  // min(d1, d of dual(C2)); nullopt = infinite
};

// Parameters with the distance bound min(d1, d2perp) computed by codeword
// enumeration; the enumeration cap of min_distance applies to both codes.
CssParams css_params(const CssPair& p);

// Closed-form parameters for CSS(RM(r1,m), RM(r2,m)): n = 2^m, k a binomial
// sum, d_lower = min(2^(m-r1), 2^(r2+1)). No matrices are built, so this
// works wherever the 64-bit fields do.
CssParams rm_css_params(unsigned m, int r1, int r2);

// Stabilizer generator matrix, rows of length 2n in (X part | Z part)
// layout: first the Z-type rows (0 | g) for g in canon(dual(C1)), then the
// X-type rows (g | 0) for g in canon(C2). (n - k1 + k2) rows total.
BitMatrix stabilizer_matrix(const CssPair& p);

// Symplectic product of rows (a|b) and (c|d): <a,d> + <b,c> mod 2. Zero for
// every pair of stabilizer rows.
bool symplectic_product(const BitVector& x, const BitVector& y);

}  // namespace rmcsst
