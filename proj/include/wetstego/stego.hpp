#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wetstego/codes.hpp"

// Matrix encoding and the wet-paper systems [S] / [SS]: embed r message bits
// into an n-bit cover while never touching the locked (wet) coordinates.

namespace wetstego {

struct WetInstance {
  BitVector cover;              // length n
  BitVector message;            // length = syndrome length of the code
  std::vector<std::size_t> wet; // 0-based locked indices, sorted, distinct
};

struct WetResult {
  bool feasible = false;
  BitVector stego;                    // present iff feasible
  std::uint64_t solution_count = 0;
  std::size_t changes = 0;            // modified dry positions
};

// emb(c, m) = c - cl(c H^T - m); the result has syndrome m and differs from
// c in at most covering-radius positions.
BitVector emb(const LinearCode& code, const BitVector& cover,
              const BitVector& message);

// emb(c, m) = (0,m) + dec(c - (0,m)).
BitVector emb(const SystematicCode& code, const BitVector& cover,
              const BitVector& message);
BitVector emb(const Code& code, const BitVector& cover,
              const BitVector& message);

// rec = the syndrome; the receiver needs no knowledge of the wet set.
BitVector rec(const Code& code, const BitVector& x);

// Solves [S]: x H^T = m with x fixed to the cover on the wet coordinates.
// Infeasibility is a normal result (solution_count = 0). Among the solutions
// the one changing fewest dry positions is returned, ties broken
// lexicographically; full enumeration requires at most 2^20 solutions.
WetResult solve_wet(const LinearCode& code, const WetInstance& inst);

// Solves [SS]: s(x) = m under the same locking, by enumerating the codewords
// y with pi_W(y) = pi_W(c + (0,m)); each gives the solution x = y + (0,m).
WetResult solve_wet(const SystematicCode& code, const WetInstance& inst);
WetResult solve_wet(const Code& code, const WetInstance& inst);

// Minimum dry count guaranteeing solvability for every cover, message and
// wet set. Linear codes: n - d_perp + 1 (tight). Systematic codes:
// n - oa_strength, since universal solvability at n - delta locked positions
// is exactly the coverage-strength property; at most n - d_perp + 1.
std::size_t wet_threshold(const Code& code);

// tau - r = n - d_perp + 1 - r; zero iff the dual code is MDS.
long long strict_overhead(const LinearCode& code);

// Wet-mask line: either one 0/1 string of length n (1 = wet) or
// space-separated 1-based locked indices. Returns sorted 0-based indices.
std::vector<std::size_t> parse_wet_mask(const std::string& line, std::size_t n);

// Instance file: code spec line (see parse_code_spec in the CLI), cover line,
// message line, mask line.
WetInstance make_instance(BitVector cover, BitVector message,
                          std::vector<std::size_t> wet);

}  // namespace wetstego
