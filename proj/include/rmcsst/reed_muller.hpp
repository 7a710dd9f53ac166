#pragma once

#include <cstdint>
#include <optional>

#include "rmcsst/linear_code.hpp"

namespace rmcsst {

// RM(r, m): evaluations of all m-variate polynomials of total degree <= r
// over the 2^m points of GF(2)^m. r = -1 is admitted as the zero code.
struct RmCode {
  int r = 0;
  unsigned m = 1;
  LinearCode code;
};

struct RmParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> d;  // nullopt: infinite (zero code)
};

// Construction cap: generator matrices get impractical past this.
inline constexpr unsigned kRmConstructionMaxM = 14;

// Generator rows are the evaluations of the monomials prod_{j in T} x_j with
// |T| <= r, in graded-lex order on T. Column i evaluates at the point whose
// j-th variable is the j-th least significant bit of i.
RmCode rm_code(int r, unsigned m);

// Closed-form [2^m, sum_{i<=r} C(m,i), 2^(m-r)] without building the matrix.
RmParams rm_params(int r, unsigned m);

// Order of the dual: m - r - 1.
int rm_dual_order(int r, unsigned m);

}  // namespace rmcsst
