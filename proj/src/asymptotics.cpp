#include "rmcsst/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmcsst {

double phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

Dyadic exact_rate(int r, unsigned m) {
  if (r < 0 || r > static_cast<int>(m)) throw std::invalid_argument("exact_rate: requires 0 <= r <= m");
  return Dyadic(binomial_sum(m, r), m);
}

std::optional<std::string> validate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::ConstantT:
      if (spec.param < 0 || spec.param != std::floor(spec.param))
        throw std::invalid_argument("constant family: t0 must be a non-negative integer");
      break;
    case FamilyKind::SqrtT:
      if (spec.param < 0) throw std::invalid_argument("sqrt family: c must be non-negative");
      break;
    case FamilyKind::LinearT:
      if (spec.param <= 0) throw std::invalid_argument("linear family: a must be positive");
      if (spec.param >= 0.125) return "a >= 1/8 is outside the usual working range for this family";
      break;
    case FamilyKind::ThirdOrder:
      break;
  }
  if (spec.explicit_r2 && *spec.explicit_r2 < 0) throw std::invalid_argument("explicit r2 must be non-negative");
  return std::nullopt;
}

namespace {

// t(m) for the family; nullopt when the family is undefined at this m.
std::optional<long> family_t(const FamilySpec& spec, unsigned m) {
  switch (spec.kind) {
    case FamilyKind::ConstantT:
      return static_cast<long>(spec.param);
    case FamilyKind::SqrtT:
      return static_cast<long>(std::floor(spec.param * std::sqrt(static_cast<double>(m))));
    case FamilyKind::LinearT:
      return static_cast<long>(std::floor(spec.param * static_cast<double>(m)));
    case FamilyKind::ThirdOrder: {
      if (m % 3 != 0) return std::nullopt;
      const long half = static_cast<long>((m - 1) / 2);
      return (m % 2 == 0) ? (half - 2) / 3 : (half - 1) / 3;
    }
  }
  return std::nullopt;
}

}  // namespace

FamilyRow family_row(const FamilySpec& spec, unsigned m) {
  validate_family(spec);
  if (m < 1 || m > 62) throw std::invalid_argument("family_row: m must be in [1, 62]");

  FamilyRow row;
  row.m = m;
  row.n = std::uint64_t{1} << m;

  const std::optional<long> t = family_t(spec, m);
  if (!t) {
    row.reason = "m not a multiple of 3";
    return row;
  }
  const long half = static_cast<long>((m - 1) / 2);
  const long r1 = half - *t;
  const long r2_bound = (m % 2 == 0) ? 2 * *t + 1 : 2 * *t;
  // "max allowed" is the largest r2 the closed-form test certifies, which is
  // also capped by the nesting requirement r2 <= r1.
  const long r2 = spec.explicit_r2 ? *spec.explicit_r2 : std::min(r2_bound, r1);

  row.r1 = static_cast<int>(r1);
  row.r2 = static_cast<int>(r2);
  if (r1 < 0 || r2 < 0 || r2 > r1) {
    row.reason = "orders out of range (need 0 <= r2 <= r1)";
    return row;
  }
  if (r2 > r2_bound) {
    row.reason = "r2 exceeds the parity bound";
    return row;
  }

  row.admissible = true;
  row.k_quantum = binomial_sum(m, row.r1) - binomial_sum(m, row.r2);
  row.d_lower = std::uint64_t{1} << (row.r2 + 1);
  row.rate_c1 = exact_rate(row.r1, m);
  row.quantum_rate = Dyadic(row.k_quantum, m);
  row.rel_distance = Dyadic(BigUint(row.d_lower), m);
  return row;
}

std::optional<double> asymptotic_rate(const FamilySpec& spec) {
  validate_family(spec);
  switch (spec.kind) {
    case FamilyKind::ConstantT:
      return 0.5;  // t/sqrt(m) -> 0
    case FamilyKind::SqrtT:
      return phi(-2.0 * spec.param);
    case FamilyKind::LinearT:
    case FamilyKind::ThirdOrder:
      return std::nullopt;  // t/sqrt(m) -> infinity
  }
  return std::nullopt;
}

RmDistanceVerdict rm_family_distance_verdict(OrderRule rule, double param) {
  RmDistanceVerdict v;
  if (rule == OrderRule::Constant) {
    if (param < 0 || param != std::floor(param))
      throw std::invalid_argument("constant order rule: r must be a non-negative integer");
    v.nonvanishing = true;
    v.relative_distance = Dyadic(BigUint(1), static_cast<unsigned>(param));
  }
  return v;
}

DistanceDecayDemo css_family_distance_vanishes(const FamilySpec& spec, unsigned m_min, unsigned m_max) {
  if (m_min < 1 || m_min > m_max) throw std::invalid_argument("css_family_distance_vanishes: bad m range");
  DistanceDecayDemo demo;
  for (unsigned m = m_min; m <= m_max; ++m) {
    FamilyRow row = family_row(spec, m);
    if (row.admissible) demo.rows.push_back(std::move(row));
  }
  demo.strictly_decreasing = true;
  for (std::size_t i = 1; i < demo.rows.size(); ++i) {
    if (!(demo.rows[i].rel_distance < demo.rows[i - 1].rel_distance)) demo.strictly_decreasing = false;
  }
  const std::optional<double> rate = asymptotic_rate(spec);
  demo.rate_cap_holds = !rate || *rate <= 0.5;
  return demo;
}

}  // namespace rmcsst
