#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rmcsst {

// Unsigned big integer, 32-bit limbs, little-endian. Supports exactly the
// operations the counting and rate code needs: add, subtract, shifts,
// comparison and decimal printing. No general multiply/divide.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  static BigUint pow2(unsigned e);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  unsigned trailing_zeros() const;  // undefined for zero

  BigUint& operator+=(const BigUint& rhs);
  // Requires *this >= rhs.
  BigUint& operator-=(const BigUint& rhs);
  BigUint& operator<<=(unsigned bits);
  BigUint& operator>>=(unsigned bits);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }
  friend BigUint operator<<(BigUint lhs, unsigned bits) { return lhs <<= bits; }
  friend BigUint operator>>(BigUint lhs, unsigned bits) { return lhs >>= bits; }

  // -1, 0, +1 as *this compares to rhs.
  int cmp(const BigUint& rhs) const;
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return a.cmp(b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return a.cmp(b) >= 0; }

  std::optional<std::uint64_t> to_u64() const;  // nullopt if the value does not fit
  std::string to_string() const;                // decimal
  double to_double() const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

// Gaussian binomial coefficient [n choose k]_2: the number of k-dimensional
// subspaces of an n-dimensional space over GF(2). Computed with the q-Pascal
// recurrence [n,k] = [n-1,k-1] + 2^k [n-1,k], so every intermediate is an
// exact integer.
BigUint gaussian_binomial_2(unsigned n, unsigned k);

// C(m,0) + C(m,1) + ... + C(m,r), exactly. Returns 0 for r < 0.
BigUint binomial_sum(unsigned m, int r);

// Exact dyadic rational num / 2^exp, normalized so num is odd or the value
// is 0/1. Every rate in this project has a power-of-two denominator, which
// keeps exact arithmetic trivial.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(BigUint num, unsigned exp);
  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(BigUint(1), 0); }

  const BigUint& numerator() const { return num_; }
  unsigned log2_denominator() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }

  int cmp(const Dyadic& rhs) const;
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return a.cmp(b) != 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.cmp(b) > 0; }

  // |*this - rhs|
  Dyadic abs_diff(const Dyadic& rhs) const;

  std::string str() const;  // "p/q" with q a power of two; integers print bare
  double to_double() const;

 private:
  BigUint num_;
  unsigned exp_;
};

}  // namespace rmcsst
