#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmcsst/bigint.hpp"
#include "rmcsst/gf2.hpp"

namespace rmcsst {

// Strictly increasing set of coordinate positions, the "I" of puncturing and
// shortening and the support of a codeword.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> indices);  // sorted, duplicates rejected

  static SupportSet support_of(const BitVector& v);

  // All positions in [0, n) not in this set.
  SupportSet complement(std::size_t n) const;

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t max_index() const { return indices_.back(); }  // requires nonempty

 private:
  std::vector<std::size_t> indices_;
};

// A binary linear code of length n, held as the unique reduced echelon basis
// of its row space. The originally supplied generator is kept alongside.
// Immutable after construction.
class LinearCode {
 public:
  // Zero code of the given length.
  static LinearCode zero(std::size_t n);
  // Code spanned by the rows of `generator` (length = generator.cols()).
  explicit LinearCode(const BitMatrix& generator);

  std::size_t length() const { return n_; }
  std::size_t dim() const { return canon_.rows(); }

  const BitMatrix& generator() const { return gen_; }
  const BitMatrix& canon() const { return canon_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const BitVector& v) const;

  // Codeword for a message index: XOR of the canon rows selected by the
  // message bits. message < 2^dim.
  BitVector codeword(std::uint64_t message) const;

  // Same row space, i.e. identical canonical bases.
  bool operator==(const LinearCode& rhs) const { return n_ == rhs.n_ && canon_ == rhs.canon_; }

 private:
  LinearCode() = default;
  std::size_t n_ = 0;
  BitMatrix gen_;
  BitMatrix canon_;
  std::vector<std::size_t> pivots_;
};

// Dual code: dimension n - dim(c), every pair of codewords orthogonal.
LinearCode dual(const LinearCode& c);

// Deletes the coordinates in `i` from every codeword. Rejects removing all
// coordinates (empty residual length). Dimension may drop.
LinearCode puncture(const LinearCode& c, const SupportSet& i);

// Keeps the codewords vanishing on `i`, then deletes those coordinates.
// Computed directly from the generator (kernel of the restriction to `i`),
// not via the dual, so shorten/puncture duality is a real cross-check.
LinearCode shorten(const LinearCode& c, const SupportSet& i);

inline constexpr std::size_t kMinDistanceDimCap = 28;

// Minimum Hamming weight over all nonzero codewords, by Gray-code walk of
// the message space. nullopt is the infinite marker of the zero code.
// Throws EnumerationCapError for dim > kMinDistanceDimCap.
std::optional<std::uint64_t> min_distance(const LinearCode& c);

// Every codeword has even weight. Weight parity is additive over GF(2), so
// checking the canonical generators suffices.
bool is_even(const LinearCode& c);

// C subset of its own dual, i.e. G G^T = 0 for the canonical generator.
bool is_self_orthogonal(const LinearCode& c);

// Every canonical generator of `a` is a member of `b`. Lengths must match.
bool is_subcode(const LinearCode& a, const LinearCode& b);

// C contains a self-dual subcode iff n is even and dual(C) is a subcode of C.
bool contains_self_dual(const LinearCode& c);

// Cardinality of {D : dual(C) inside D inside C, dim(D) = n/2}, the chain
// count whose odd parity forces a self-dual subcode to exist: the Gaussian
// binomial [2k-n choose k-n/2]_2. Exact. Requires contains_self_dual(c).
BigUint count_self_dual_subcodes(const LinearCode& c);

// Test oracle: every dimension-n/2 subcode D of C with D == dual(D), found
// by depth-first search over self-orthogonal subspaces (each subspace is
// visited once via its greedy-minimal basis). Sorted by canonical generator.
// Capped at n <= 12.
std::vector<LinearCode> enumerate_self_dual_subcodes(const LinearCode& c);

}  // namespace rmcsst
