#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

// Dense linear algebra over GF(2). Bits are packed into 64-bit words,
// coordinate 0 in the least significant bit of word 0. All external
// interfaces (file formats, CLI) use 1-based indices; everything in this
// header is 0-based.

namespace wetstego {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  static BitVector from_string(std::string_view s);
  static BitVector random(std::size_t length, std::mt19937_64& rng);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool is_zero() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  // Inner product over GF(2).
  bool dot(const BitVector& other) const;

  std::size_t hamming_distance(const BitVector& other) const;

  // Coordinate-0-first comparison, i.e. the order of the 0/1 strings.
  bool lex_less(const BitVector& other) const;

  std::string to_string() const;

  bool operator==(const BitVector& other) const {
    return len_ == other.len_ && words_ == other.words_;
  }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix identity(std::size_t n);
  static BitMatrix random(std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { row_[i].set(j, v); }

  const BitVector& row(std::size_t i) const { return row_[i]; }
  BitVector& row(std::size_t i) { return row_[i]; }

  BitMatrix transposed() const;

  // x * M for a row vector x of length rows().
  BitVector apply_left(const BitVector& x) const;
  // M * x^T for x of length cols().
  BitVector apply_right(const BitVector& x) const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> row_;
};

struct AffineSolution {
  bool feasible = false;
  BitVector particular;               // present iff feasible
  std::vector<BitVector> kernel_basis;  // independent, nonzero

  // 2^|kernel_basis| when feasible, else 0. Throws if the count would
  // overflow 64 bits.
  std::uint64_t solution_count() const;
};

std::size_t rank(const BitMatrix& m);

// Basis of {x : M x^T = 0}, deterministic (free variables in ascending
// column order, one basis vector per free column).
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Columns with 0-based indices in `keep` (ascending output order).
BitMatrix column_submatrix(const BitMatrix& m,
                           const std::vector<std::size_t>& keep);

// Full affine description of {x : A x^T = b}.
AffineSolution solve(const BitMatrix& a, const BitVector& b);

// {x : A x^T = b, x_i = fixed[i]}. Fixed coordinates are eliminated by
// substitution into the right-hand side; kernel vectors are zero on them.
AffineSolution solve_constrained(const BitMatrix& a, const BitVector& b,
                                 const std::map<std::size_t, bool>& fixed);

BitMatrix random_matrix(std::size_t rows, std::size_t cols,
                        std::uint64_t seed);

// Text format: first line "rows cols", then one 0/1 string per row.
BitMatrix parse_matrix(std::istream& in);
void write_matrix(const BitMatrix& m, std::ostream& out);
BitVector parse_vector(std::istream& in);

}  // namespace wetstego
