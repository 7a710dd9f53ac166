#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmcsst/bigint.hpp"

namespace rmcsst {

// Standard normal CDF, absolute error <= 1e-12.
double phi(double x);

// Exact rate of RM(r, m): (C(m,0) + ... + C(m,r)) / 2^m as a dyadic
// rational. Requires 0 <= r <= m.
Dyadic exact_rate(int r, unsigned m);

// A family of nested RM pairs indexed by m, described through the gap
// t(m) = floor((m-1)/2) - r1(m) and a rule for r2(m).
enum class FamilyKind : std::uint8_t {
  ConstantT,   // t(m) = t0
  SqrtT,       // t(m) = floor(c * sqrt(m))
  LinearT,     // t(m) = floor(a * m), 0 < a
  ThirdOrder,  // defined for 3 | m: t = (floor((m-1)/2) - 2)/3 for even m,
               //                    t = (floor((m-1)/2) - 1)/3 for odd m
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::ConstantT;
  double param = 0.0;                 // t0, c, or a; unused for ThirdOrder
  std::optional<int> explicit_r2;     // nullopt: largest r2 the parity rule allows
};

// Rejects invalid parameters (negative t0, negative c, a <= 0). Returns a
// warning for accepted-but-dubious parameters (a >= 1/8).
std::optional<std::string> validate_family(const FamilySpec& spec);

// One table row of a family. Inadmissible rows (r1 < r2, negative orders,
// m not a multiple of 3 for ThirdOrder, or an explicit r2 the parity rule
// forbids) carry admissible = false and a reason.
struct FamilyRow {
  unsigned m = 0;
  bool admissible = false;
  std::string reason;        // set when inadmissible
  int r1 = 0;
  int r2 = 0;
  std::uint64_t n = 0;       // 2^m
  BigUint k_quantum;         // sum_{i=r2+1}^{r1} C(m,i)
  std::uint64_t d_lower = 0; // 2^(r2+1)
  Dyadic rate_c1;            // dim(C1) / n
  Dyadic quantum_rate;       // k_quantum / n
  Dyadic rel_distance;       // d_lower / n
};

FamilyRow family_row(const FamilySpec& spec, unsigned m);

// Limit of the C1 rate along the family: 1/2 for constant t, phi(-2c) for
// sqrt families, nullopt ("vanishing") for linear and third-order families.
std::optional<double> asymptotic_rate(const FamilySpec& spec);

// Rule for the order r(m) of a plain RM family RM(r(m), m).
enum class OrderRule : std::uint8_t { Constant, HalfFloor, SqrtFloor, LinearFloor };

struct RmDistanceVerdict {
  bool nonvanishing = false;
  std::optional<Dyadic> relative_distance;  // 2^-r for a constant rule
};

// The relative distance 2^-r(m) has a nonzero limit iff r(m) is eventually
// constant.
RmDistanceVerdict rm_family_distance_verdict(OrderRule rule, double param);

// Demonstration that the family's relative distance decays, plus the check
// that its asymptotic rate never exceeds 1/2.
struct DistanceDecayDemo {
  std::vector<FamilyRow> rows;  // admissible rows only, ascending m
  bool strictly_decreasing = false;
  bool rate_cap_holds = false;  // asymptotic_rate(spec) <= 1/2
};

DistanceDecayDemo css_family_distance_vanishes(const FamilySpec& spec, unsigned m_min, unsigned m_max);

}  // namespace rmcsst
