#include "rmcsst/gf2.hpp"

#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace rmcsst {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may contain only '0' and '1'");
  }
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  for (std::uint64_t word : words_)
    if (word) return false;
  return true;
}

bool BitVector::dot(const BitVector& rhs) const {
  if (len_ != rhs.len_) throw std::invalid_argument("dot: vector lengths differ");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & rhs.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  if (len_ != rhs.len_) throw std::invalid_argument("xor: vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

bool BitVector::operator<(const BitVector& rhs) const {
  const std::size_t common = std::min(words_.size(), rhs.words_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const std::uint64_t diff = words_[i] ^ rhs.words_[i];
    if (diff) {
      // The lowest differing bit decides; '0' sorts before '1'.
      const int bit = std::countr_zero(diff);
      return !((words_[i] >> bit) & 1u);
    }
  }
  return len_ < rhs.len_;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  BitMatrix m;
  for (const std::string& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector v) {
  if (rows_.empty())
    cols_ = v.size();
  else if (v.size() != cols_)
    throw std::invalid_argument("append_row: row length differs from matrix width");
  rows_.push_back(std::move(v));
}

bool BitMatrix::is_zero() const {
  for (const BitVector& r : rows_)
    if (!r.is_zero()) return false;
  return true;
}

bool BitMatrix::operator<(const BitMatrix& rhs) const {
  if (rows_.size() != rhs.rows_.size()) return rows_.size() < rhs.rows_.size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == rhs.rows_[i]) continue;
    return rows_[i] < rhs.rows_[i];
  }
  return false;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const BitVector& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t done = 0;  // rows fixed so far
  for (std::size_t col = 0; col < m.cols() && done < work.size(); ++col) {
    std::size_t pivot_row = done;
    while (pivot_row < work.size() && !work[pivot_row].get(col)) ++pivot_row;
    if (pivot_row == work.size()) continue;
    std::swap(work[done], work[pivot_row]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != done && work[r].get(col)) work[r] ^= work[done];
    }
    pivots.push_back(col);
    ++done;
  }
  BitMatrix out(0, m.cols());
  RrefResult res{std::move(out), std::move(pivots)};
  for (std::size_t r = 0; r < done; ++r) res.matrix.append_row(std::move(work[r]));
  if (res.matrix.rows() == 0) res.matrix = BitMatrix(0, m.cols());
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).matrix.rows(); }

BitMatrix nullspace_basis(const BitMatrix& m) {
  const RrefResult red = rref(m);
  const std::size_t n = m.cols();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  BitMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f, true);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      if (red.matrix.get(r, f)) v.set(red.pivots[r], true);
    }
    basis.append_row(std::move(v));
  }
  if (basis.rows() == 0) basis = BitMatrix(0, n);
  return basis;
}

BitMatrix mat_mul_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("mat_mul_transpose: column counts differ");
  BitMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) out.set(i, j, a.row(i).dot(b.row(j)));
  }
  return out;
}

std::string to_text(const BitMatrix& m) {
  std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += m.row(i).to_string();
    s += '\n';
  }
  return s;
}

BitMatrix matrix_from_text(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::invalid_argument("matrix text: missing header line");
  } while (!line.empty() && line[0] == '#');

  std::istringstream header(line);
  std::size_t rows = 0, cols = 0;
  if (!(header >> rows >> cols)) throw std::invalid_argument("matrix text: bad header line");
  std::string rest;
  if (header >> rest) throw std::invalid_argument("matrix text: trailing junk in header");

  BitMatrix m(0, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) throw std::invalid_argument("matrix text: missing row " + std::to_string(r));
    if (line.size() != cols) throw std::invalid_argument("matrix text: row " + std::to_string(r) + " has wrong length");
    m.append_row(BitVector::from_string(line));
  }
  if (m.rows() == 0) m = BitMatrix(0, cols);
  return m;
}

BitMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  return matrix_from_text(in);
}

}  // namespace rmcsst
