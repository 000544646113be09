#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "wetstego/gf2.hpp"

namespace wetstego {

// An [n, k] binary linear code held as generator and parity-check matrices.
// Immutable after construction; safely shareable across threads.
class LinearCode {
 public:
  static LinearCode from_generator(const BitMatrix& g);
  static LinearCode from_parity(const BitMatrix& h);

  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  std::size_t redundancy() const { return parity_.rows(); }

  const BitMatrix& generator() const { return generator_; }
  const BitMatrix& parity() const { return parity_; }

  BitVector encode(const BitVector& message) const;
  // x H^T; zero iff x is a codeword.
  BitVector syndrome(const BitVector& x) const;

  // All 2^k codewords, enumerated once and cached (k <= 24).
  const std::vector<BitVector>& codewords() const;

  // Minimum-weight vector with the given syndrome, lexicographically
  // smallest among ties. Table built on first use (n-k <= 24), lookups
  // are concurrent-read-safe.
  BitVector coset_leader(const BitVector& syn) const;

  LinearCode dual() const;

 private:
  LinearCode(BitMatrix g, BitMatrix h);

  BitMatrix generator_;
  BitMatrix parity_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Binary Hamming code of redundancy s: parity-check column j is the binary
// expansion of j (LSB in row 0), j = 1..2^s-1.
LinearCode hamming_code(unsigned s);

// An [n, u] systematic code: u information positions and the truth table of
// the generator function sigma : F_2^u -> F_2^(n-u). Covers nonlinear codes;
// every linear code is systematic at the pivot positions of its generator.
class SystematicCode {
 public:
  // sigma_table[a] is sigma of the info pattern a, where bit i of the index
  // a is the value at the i-th (ascending) info position.
  SystematicCode(std::size_t n, std::vector<std::size_t> info_positions,
                 std::vector<BitVector> sigma_table);

  // Builds the table from an explicit codeword list; throws unless the
  // projection onto info_positions is a bijection.
  static SystematicCode from_codewords(std::size_t n,
                                       std::vector<std::size_t> info_positions,
                                       const std::vector<BitVector>& words);

  static SystematicCode from_linear(const LinearCode& code);

  std::size_t length() const { return n_; }
  std::size_t info_count() const { return info_positions_.size(); }
  std::size_t syndrome_length() const { return n_ - info_positions_.size(); }

  const std::vector<std::size_t>& info_positions() const {
    return info_positions_;
  }
  const std::vector<std::size_t>& check_positions() const {
    return check_positions_;
  }

  BitVector sigma(const BitVector& info) const;
  BitVector encode(const BitVector& info) const;

  // s(x) = pi_V(x) - sigma(pi_U(x)); zero iff x is a codeword.
  BitVector syndrome(const BitVector& x) const;

  // (0, v): the vector vanishing on the info positions with v on the check
  // positions. syndrome((0,v) + codeword) = v.
  BitVector check_embed(const BitVector& v) const;

  const std::vector<BitVector>& codewords() const { return codewords_; }

  // Sigma is additive <=> the code is linear.
  bool is_linear() const;
  LinearCode to_linear() const;  // throws unless is_linear()

 private:
  std::size_t n_;
  std::vector<std::size_t> info_positions_;
  std::vector<std::size_t> check_positions_;
  std::vector<BitVector> sigma_table_;
  std::vector<BitVector> codewords_;
};

// The [12,5] nonlinear Nadler code, stored as the explicit 32-codeword list;
// systematic at positions {1,2,4,7,10} (1-based).
SystematicCode nadler_code();

// The same code presented by its generator-function polynomials, systematic
// at positions {1..5}. Coordinate j of this presentation is coordinate
// NADLER_SIGMA_PERMUTATION[j] of nadler_code().
SystematicCode nadler_code_from_sigma();

// 0-based: sigma-form coordinate j corresponds to Table-form coordinate p[j].
inline constexpr std::size_t kNadlerSigmaPermutation[12] = {0, 1, 3, 6,  9,  4,
                                                            7, 10, 11, 8, 5, 2};

using Code = std::variant<LinearCode, SystematicCode>;

std::size_t code_length(const Code& code);
std::size_t syndrome_length(const Code& code);
BitVector syndrome(const Code& code, const BitVector& x);
const std::vector<BitVector>& codewords(const Code& code);

// Minimum-distance decoding by enumeration, lexicographically smallest
// among ties.
BitVector nearest_codeword(const std::vector<BitVector>& words,
                           const BitVector& x);
BitVector nearest_codeword(const Code& code, const BitVector& x);

// Decoding map for the translate z + C: z + dec(x - z).
BitVector translated_decode(const Code& code, const BitVector& z,
                            const BitVector& x);

// Code file format: line 1 "linear n k" or "systematic n u"; linear: k
// generator rows as 0/1 strings; systematic: a line of 1-based info
// positions, then 2^u lines "infobits sigmabits".
Code parse_code(std::istream& in);
void write_code(const Code& code, std::ostream& out);

}  // namespace wetstego
