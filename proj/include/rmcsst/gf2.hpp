#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rmcsst {

// Packed GF(2) vector. Bit i lives in word i/64 at position i%64; bits past
// the length are kept zero so whole-word equality and popcount are valid.
// Values are treated as immutable once built: every operation below returns
// a fresh vector, so instances can be shared freely across threads.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  // Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    if (v)
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t weight() const;
  bool is_zero() const;

  // Parity of the overlap <a,b> mod 2. Lengths must match.
  bool dot(const BitVector& rhs) const;

  BitVector& operator^=(const BitVector& rhs);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  bool operator==(const BitVector& rhs) const = default;
  // Lexicographic on the 0/1 string (bit 0 first).
  bool operator<(const BitVector& rhs) const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix as a list of equal-length rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  // Appends a row; the first row of an empty matrix fixes the column count.
  void append_row(BitVector v);

  bool is_zero() const;
  bool operator==(const BitMatrix& rhs) const = default;
  bool operator<(const BitMatrix& rhs) const;  // rows() then lexicographic rows

  std::string to_string() const;  // one 0/1 string per line, debugging aid

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;                 // reduced row-echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns, one per row
};

// Full Gauss-Jordan reduction: pivots chosen left to right, eliminating both
// above and below, zero rows dropped. The result is the unique canonical
// basis of the row space, so two matrices have equal row spaces iff their
// rref matrices are equal.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of {v : m * v^T = 0}, one row per free column of rref(m), in
// increasing free-column order. rows() == cols(m) - rank(m).
BitMatrix nullspace_basis(const BitMatrix& m);

// Entry (i,j) = <row_i(a), row_j(b)> mod 2. Column counts must match.
BitMatrix mat_mul_transpose(const BitMatrix& a, const BitMatrix& b);

// Matrix text format: first line "rows cols", then one 0/1 string of exactly
// cols characters per row, each line newline-terminated. Lines starting with
// '#' before the header are skipped on input (the CLI writes such headers).
std::string to_text(const BitMatrix& m);
BitMatrix matrix_from_text(std::istream& in);
BitMatrix matrix_from_text(const std::string& text);

}  // namespace rmcsst
