#include "rmcsst/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmcsst {

BigUint::BigUint(std::uint64_t v) {
  if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

BigUint BigUint::pow2(unsigned e) {
  BigUint r;
  r.limbs_.assign(e / 32 + 1, 0);
  r.limbs_.back() = 1u << (e % 32);
  return r;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

unsigned BigUint::trailing_zeros() const {
  unsigned tz = 0;
  for (std::uint32_t limb : limbs_) {
    if (limb == 0) {
      tz += 32;
    } else {
      return tz + static_cast<unsigned>(__builtin_ctz(limb));
    }
  }
  return tz;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()) + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  trim();
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (cmp(rhs) < 0) throw std::underflow_error("BigUint subtraction would go negative");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    borrow = 0;
    if (diff < 0) {
      diff += (std::int64_t{1} << 32);
      borrow = 1;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator<<=(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  const unsigned limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

BigUint& BigUint::operator>>=(unsigned bits) {
  const unsigned limb_shift = bits / 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  const unsigned bit_shift = bits % 32;
  if (bit_shift) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= bit_shift;
      if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (32 - bit_shift);
    }
  }
  trim();
  return *this;
}

int BigUint::cmp(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::optional<std::uint64_t> BigUint::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  // Repeated division by 1e9, printing 9 digits per round.
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
    out = chunk + out;
  }
  return out;
}

double BigUint::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return v;
}

BigUint gaussian_binomial_2(unsigned n, unsigned k) {
  if (k > n) return BigUint(0);
  if (k == 0 || k == n) return BigUint(1);
  // Row-by-row q-Pascal: row[j] over j = 0..min(i,k) for increasing i.
  std::vector<BigUint> row(k + 1);
  row[0] = BigUint(1);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) {
      BigUint t = row[j];  // [i-1, j]; zero when j == i
      t <<= j;
      row[j] = row[j - 1] + t;
    }
  }
  return row[k];
}

BigUint binomial_sum(unsigned m, int r) {
  if (r < 0) return BigUint(0);
  const unsigned top = std::min<unsigned>(static_cast<unsigned>(r), m);
  // Pascal row m, accumulating the first top+1 entries.
  std::vector<BigUint> row(m + 1);
  row[0] = BigUint(1);
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  BigUint sum;
  for (unsigned i = 0; i <= top; ++i) sum += row[i];
  return sum;
}

Dyadic::Dyadic(BigUint num, unsigned exp) : num_(std::move(num)), exp_(exp) {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  const unsigned tz = std::min(num_.trailing_zeros(), exp_);
  num_ >>= tz;
  exp_ -= tz;
}

int Dyadic::cmp(const Dyadic& rhs) const {
  const unsigned e = std::max(exp_, rhs.exp_);
  BigUint a = num_ << (e - exp_);
  BigUint b = rhs.num_ << (e - rhs.exp_);
  return a.cmp(b);
}

Dyadic Dyadic::abs_diff(const Dyadic& rhs) const {
  const unsigned e = std::max(exp_, rhs.exp_);
  BigUint a = num_ << (e - exp_);
  BigUint b = rhs.num_ << (e - rhs.exp_);
  if (a >= b) return Dyadic(a - b, e);
  return Dyadic(b - a, e);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.to_string();
  return num_.to_string() + "/" + BigUint::pow2(exp_).to_string();
}

double Dyadic::to_double() const { return num_.to_double() / std::ldexp(1.0, static_cast<int>(exp_)); }

}  // namespace rmcsst
