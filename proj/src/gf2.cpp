#include "wetstego/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wetstego {

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("bit string may contain only 0/1, got '" +
                                  std::string(1, s[i]) + "'");
  }
  return v;
}

BitVector BitVector::random(std::size_t length, std::mt19937_64& rng) {
  BitVector v(length);
  for (auto& w : v.words_) w = rng();
  if (length & 63)
    v.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_)
    throw std::invalid_argument("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (len_ != other.len_)
    throw std::invalid_argument("BitVector dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::hamming_distance(const BitVector& other) const {
  if (len_ != other.len_)
    throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    d += std::popcount(words_[i] ^ other.words_[i]);
  return d;
}

bool BitVector::lex_less(const BitVector& other) const {
  const std::size_t nw = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < nw; ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      const int bit = std::countr_zero(diff);
      return !((words_[i] >> bit) & 1);  // 0 precedes 1
    }
  }
  return len_ < other.len_;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != m.cols_)
      throw std::invalid_argument("BitMatrix rows of unequal length");
  m.row_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    m.row_[i] = BitVector::random(cols, rng);
  return m;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BitVector BitMatrix::apply_left(const BitVector& x) const {
  if (x.size() != rows_)
    throw std::invalid_argument("apply_left: vector length != rows");
  BitVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (x.get(i)) y ^= row_[i];
  return y;
}

BitVector BitMatrix::apply_right(const BitVector& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("apply_right: vector length != cols");
  BitVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (row_[i].dot(x)) y.set(i, true);
  return y;
}

std::uint64_t AffineSolution::solution_count() const {
  if (!feasible) return 0;
  if (kernel_basis.size() >= 64)
    throw std::overflow_error("solution count exceeds 2^63");
  return std::uint64_t{1} << kernel_basis.size();
}

namespace {

// Reduced row echelon form in place; returns pivot column per reduced row.
// Pivot choice: first nonzero column, rows scanned in order.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows.size(); ++col) {
    std::size_t pr = next_row;
    while (pr < rows.size() && !rows[pr].get(col)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next_row], rows[pr]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != next_row && rows[i].get(col)) rows[i] ^= rows[next_row];
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rref(rows, m.cols()).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const auto pivots = rref(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].get(free)) v.set(pivots[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

BitMatrix column_submatrix(const BitMatrix& m,
                           const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> cols = keep;
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw std::invalid_argument("column_submatrix: duplicate index");
  for (auto c : cols)
    if (c >= m.cols())
      throw std::out_of_range("column_submatrix: index out of range");

  BitMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (m.get(i, cols[j])) out.set(i, j, true);
  return out;
}

AffineSolution solve(const BitMatrix& a, const BitVector& b) {
  return solve_constrained(a, b, {});
}

AffineSolution solve_constrained(const BitMatrix& a, const BitVector& b,
                                 const std::map<std::size_t, bool>& fixed) {
  const std::size_t n = a.cols();
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_constrained: rhs length != rows");
  for (const auto& [idx, _] : fixed)
    if (idx >= n)
      throw std::out_of_range("solve_constrained: fixed index out of range");

  // Substitute the fixed coordinates into the right-hand side and restrict
  // the system to the free columns.
  BitVector rhs = b;
  std::vector<std::size_t> free_cols;
  free_cols.reserve(n - fixed.size());
  for (std::size_t j = 0; j < n; ++j)
    if (!fixed.contains(j)) free_cols.push_back(j);
  for (const auto& [idx, val] : fixed) {
    if (!val) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.get(i, idx)) rhs.flip(i);
  }
  const BitMatrix af = column_submatrix(a, free_cols);

  // Augmented elimination on [af | rhs].
  std::vector<BitVector> rows;
  rows.reserve(af.rows());
  for (std::size_t i = 0; i < af.rows(); ++i) {
    BitVector r(af.cols() + 1);
    for (std::size_t j = 0; j < af.cols(); ++j)
      if (af.get(i, j)) r.set(j, true);
    if (rhs.get(i)) r.set(af.cols(), true);
    rows.push_back(std::move(r));
  }
  auto pivots = rref(rows, af.cols() + 1);

  AffineSolution sol;
  if (!pivots.empty() && pivots.back() == af.cols()) return sol;  // 0 = 1 row

  // Particular solution: free variables of the reduced system set to 0.
  BitVector part_free(af.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (rows[r].get(af.cols())) part_free.set(pivots[r], true);

  sol.feasible = true;
  sol.particular = BitVector(n);
  for (const auto& [idx, val] : fixed) sol.particular.set(idx, val);
  for (std::size_t j = 0; j < free_cols.size(); ++j)
    if (part_free.get(j)) sol.particular.set(free_cols[j], true);

  for (const auto& kv : kernel_basis(af)) {
    BitVector v(n);
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      if (kv.get(j)) v.set(free_cols[j], true);
    sol.kernel_basis.push_back(std::move(v));
  }
  return sol;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return BitMatrix::random(rows, cols, rng);
}

BitMatrix parse_matrix(std::istream& in) {
  std::size_t rows, cols;
  if (!(in >> rows >> cols))
    throw std::runtime_error("matrix header: expected \"rows cols\"");
  std::vector<BitVector> rv;
  rv.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line))
      throw std::runtime_error("matrix: missing row " + std::to_string(i + 1));
    BitVector v = BitVector::from_string(line);
    if (v.size() != cols)
      throw std::runtime_error("matrix row " + std::to_string(i + 1) +
                               ": expected " + std::to_string(cols) + " bits");
    rv.push_back(std::move(v));
  }
  if (rows == 0) {
    BitMatrix m(0, cols);
    return m;
  }
  return BitMatrix::from_rows(std::move(rv));
}

void write_matrix(const BitMatrix& m, std::ostream& out) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    out << m.row(i).to_string() << '\n';
}

BitVector parse_vector(std::istream& in) {
  std::string line;
  if (!(in >> line)) throw std::runtime_error("vector: expected a 0/1 string");
  return BitVector::from_string(line);
}

}  // namespace wetstego
