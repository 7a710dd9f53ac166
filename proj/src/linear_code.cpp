#include "rmcsst/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rmcsst/errors.hpp"

namespace rmcsst {

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("SupportSet: duplicate index");
}

SupportSet SupportSet::support_of(const BitVector& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) idx.push_back(i);
  SupportSet s;
  s.indices_ = std::move(idx);  // already increasing
  return s;
}

SupportSet SupportSet::complement(std::size_t n) const {
  std::vector<std::size_t> idx;
  idx.reserve(n - indices_.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < indices_.size() && indices_[j] == i) {
      ++j;
    } else {
      idx.push_back(i);
    }
  }
  SupportSet s;
  s.indices_ = std::move(idx);
  return s;
}

LinearCode LinearCode::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("LinearCode: length must be positive");
  LinearCode c;
  c.n_ = n;
  c.gen_ = BitMatrix(0, n);
  c.canon_ = BitMatrix(0, n);
  return c;
}

LinearCode::LinearCode(const BitMatrix& generator) : n_(generator.cols()), gen_(generator) {
  if (n_ == 0) throw std::invalid_argument("LinearCode: length must be positive");
  RrefResult red = rref(gen_);
  canon_ = std::move(red.matrix);
  pivots_ = std::move(red.pivots);
}

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("contains: length mismatch");
  BitVector rem = v;
  for (std::size_t r = 0; r < canon_.rows(); ++r) {
    if (rem.get(pivots_[r])) rem ^= canon_.row(r);
  }
  return rem.is_zero();
}

BitVector LinearCode::codeword(std::uint64_t message) const {
  BitVector w(n_);
  for (std::size_t r = 0; r < canon_.rows(); ++r) {
    if ((message >> r) & 1u) w ^= canon_.row(r);
  }
  return w;
}

LinearCode dual(const LinearCode& c) { return LinearCode(nullspace_basis(c.canon())); }

namespace {

void validate_index_set(const LinearCode& c, const SupportSet& i) {
  if (!i.empty() && i.max_index() >= c.length())
    throw std::invalid_argument("index set: position beyond code length");
  if (i.size() == c.length())
    throw std::invalid_argument("index set covers all coordinates: empty residual length");
}

BitVector delete_coords(const BitVector& v, const SupportSet& i) {
  BitVector out(v.size() - i.size());
  std::size_t j = 0, o = 0;
  const auto& idx = i.indices();
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (j < idx.size() && idx[j] == p) {
      ++j;
    } else {
      out.set(o++, v.get(p));
    }
  }
  return out;
}

}  // namespace

LinearCode puncture(const LinearCode& c, const SupportSet& i) {
  validate_index_set(c, i);
  BitMatrix gen(0, c.length() - i.size());
  for (std::size_t r = 0; r < c.canon().rows(); ++r) gen.append_row(delete_coords(c.canon().row(r), i));
  if (gen.rows() == 0) return LinearCode::zero(c.length() - i.size());
  return LinearCode(gen);
}

LinearCode shorten(const LinearCode& c, const SupportSet& i) {
  validate_index_set(c, i);
  const std::size_t k = c.dim();
  const std::size_t residual = c.length() - i.size();
  if (k == 0) return LinearCode::zero(residual);

  // Messages whose codewords vanish on i: kernel of the k x |i| restriction.
  BitMatrix restricted_t(i.size(), k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < i.size(); ++j) restricted_t.set(j, r, c.canon().get(r, i.indices()[j]));
  }
  const BitMatrix kernel = i.empty() ? BitMatrix::identity(k) : nullspace_basis(restricted_t);

  BitMatrix gen(0, residual);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    BitVector w(c.length());
    for (std::size_t b = 0; b < k; ++b) {
      if (kernel.get(r, b)) w ^= c.canon().row(b);
    }
    gen.append_row(delete_coords(w, i));
  }
  if (gen.rows() == 0) return LinearCode::zero(residual);
  return LinearCode(gen);
}

std::optional<std::uint64_t> min_distance(const LinearCode& c) {
  const std::size_t k = c.dim();
  if (k == 0) return std::nullopt;
  if (k > kMinDistanceDimCap)
    throw EnumerationCapError("min_distance: dim " + std::to_string(k) + " exceeds enumeration cap " +
                              std::to_string(kMinDistanceDimCap));

  // Gray-code walk: consecutive messages differ in exactly one generator.
  BitVector current(c.length());
  std::uint64_t best = c.length() + 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= c.canon().row(static_cast<std::size_t>(std::countr_zero(i)));
    const std::uint64_t w = current.weight();
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

bool is_even(const LinearCode& c) {
  for (std::size_t r = 0; r < c.canon().rows(); ++r) {
    if (c.canon().row(r).weight() & 1u) return false;
  }
  return true;
}

bool is_self_orthogonal(const LinearCode& c) { return mat_mul_transpose(c.canon(), c.canon()).is_zero(); }

bool is_subcode(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("is_subcode: code lengths differ");
  for (std::size_t r = 0; r < a.canon().rows(); ++r) {
    if (!b.contains(a.canon().row(r))) return false;
  }
  return true;
}

bool contains_self_dual(const LinearCode& c) {
  if (c.length() % 2 != 0) return false;
  return is_subcode(dual(c), c);
}

BigUint count_self_dual_subcodes(const LinearCode& c) {
  if (!contains_self_dual(c)) throw std::invalid_argument("count_self_dual_subcodes: no self-dual subcode exists");
  const unsigned k = static_cast<unsigned>(c.dim());
  const unsigned half = static_cast<unsigned>(c.length() / 2);
  return gaussian_binomial_2(2 * k - c.length(), k - half);
}

namespace {

// DFS over self-orthogonal subspaces of c. Each subspace is reached exactly
// once: basis vectors are chosen in increasing order and each must be the
// minimal element of its coset modulo the span so far, which pins down the
// greedy-minimal basis of the subspace.
void self_dual_search(const LinearCode& c, const std::vector<BitVector>& words, std::size_t first_candidate,
                      std::vector<BitVector>& basis, std::size_t target_dim, std::vector<LinearCode>& out) {
  if (basis.size() == target_dim) {
    BitMatrix gen(0, c.length());
    for (const BitVector& b : basis) gen.append_row(b);
    LinearCode d(gen);
    if (d == dual(d)) out.push_back(std::move(d));
    return;
  }
  for (std::size_t idx = first_candidate; idx < words.size(); ++idx) {
    const BitVector& v = words[idx];
    if (v.weight() & 1u) continue;  // not orthogonal to itself
    bool ok = true;
    for (const BitVector& b : basis) {
      if (v.dot(b)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Coset-minimality: v must be the smallest element of v + span(basis).
    const std::uint64_t span_size = std::uint64_t{1} << basis.size();
    for (std::uint64_t mask = 1; ok && mask < span_size; ++mask) {
      BitVector alt = v;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((mask >> b) & 1u) alt ^= basis[b];
      }
      if (alt < v || alt == v) ok = false;  // alt == v would mean v in span
    }
    if (!ok) continue;
    basis.push_back(v);
    self_dual_search(c, words, idx + 1, basis, target_dim, out);
    basis.pop_back();
  }
}

}  // namespace

std::vector<LinearCode> enumerate_self_dual_subcodes(const LinearCode& c) {
  if (c.length() > 12)
    throw EnumerationCapError("enumerate_self_dual_subcodes: n = " + std::to_string(c.length()) +
                              " exceeds oracle scale (12)");
  if (c.length() % 2 != 0) return {};
  const std::size_t half = c.length() / 2;
  if (c.dim() < half) return {};

  // All nonzero codewords in increasing order.
  std::vector<BitVector> words;
  words.reserve((std::size_t{1} << c.dim()) - 1);
  for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << c.dim()); ++msg) words.push_back(c.codeword(msg));
  std::sort(words.begin(), words.end());

  std::vector<LinearCode> out;
  std::vector<BitVector> basis;
  self_dual_search(c, words, 0, basis, half, out);
  std::sort(out.begin(), out.end(), [](const LinearCode& a, const LinearCode& b) { return a.canon() < b.canon(); });
  return out;
}

}  // namespace rmcsst
