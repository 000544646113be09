#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wetstego/codes.hpp"

// Code parameters controlling wet-paper solvability. Distributions are exact
// rationals (the A_i and alpha_i of nonlinear codes are averages over |C|);
// equality tests against fixtures are therefore bit-precise.

namespace wetstego {

using Rational = boost::rational<long long>;

struct RadiiResult {
  std::vector<Rational> alpha;  // distances-to-code distribution
  std::size_t covering_radius = 0;
  Rational average_radius;
};

struct CodeProfile {
  std::size_t n = 0;
  std::size_t log_size = 0;  // code cardinality is 2^log_size
  std::vector<Rational> distance_distribution;
  std::vector<Rational> dual_distribution;
  std::size_t dual_distance = 0;
  std::vector<Rational> alpha;
  std::size_t covering_radius = 0;
  Rational average_radius;
  std::size_t oa_strength = 0;           // coverage strength (wet solvability)
  std::size_t oa_balanced_strength = 0;  // Delsarte strength, = d_perp - 1
  std::vector<std::size_t> weight_hierarchy;  // linear codes only
  std::optional<std::size_t> mds_rank;        // defined iff d_k = n
  std::optional<long long> singleton_defect;  // n - d_perp + 1 - r, linear
};

// K_i(x) for the binary scheme of length n, exact integer arithmetic.
long long krawtchouk(std::size_t n, std::size_t i, std::size_t x);

// A_i = (1/|C|) #{(x,y) in C^2 : d(x,y) = i}. For linear codes this is the
// weight distribution (computed from weights, not pairs).
std::vector<Rational> distance_distribution(const std::vector<BitVector>& words,
                                            std::size_t n);
std::vector<Rational> distance_distribution(const Code& code);

// MacWilliams / Delsarte transform: B_i = (1/|C|) sum_j A_j K_i(j), with
// |C| recovered from A via sum A_j = |C|·(normalization) — callers pass the
// code so the cardinality is exact.
std::vector<Rational> dual_transform(const std::vector<Rational>& dist,
                                     std::size_t n, long long code_size);
std::vector<Rational> dual_distribution(const Code& code);

// First positive index with a nonzero dual-distribution entry; n+1 when the
// dual distribution is (1,0,...,0) (convention: the full space).
std::size_t dual_distance(const Code& code);
std::size_t dual_distance_of(const std::vector<Rational>& dual_dist);

// d_t = min support size over t-dimensional subcodes, t = 1..k. Computed by
// scanning support sets in increasing size and checking the dimension of the
// subcode supported there.
std::vector<std::size_t> generalized_hamming_weights(const LinearCode& code);

// Least t with d_t = r + t; defined only when d_k = n.
std::size_t mds_rank(const LinearCode& code);

RadiiResult radii(const Code& code);

// Largest t such that every t-subset of columns takes all 2^t patterns
// (pi_W(C) surjective for every |W| = t). For linear codes this equals the
// balanced strength and d_perp - 1.
std::size_t oa_strength(const std::vector<BitVector>& words, std::size_t n);
std::size_t oa_strength(const Code& code);

// Largest t such that every t-subset of columns takes every pattern exactly
// |C|/2^t times (Delsarte's orthogonal-array strength).
std::size_t oa_balanced_strength(const std::vector<BitVector>& words,
                                 std::size_t n);
std::size_t oa_balanced_strength(const Code& code);

// True iff for every t-subset T, fixing pattern and output y,
// #{x : pi_T(x) = t, s(x) = y} = 2^(n-t)/2^r.
bool is_resilient(const SystematicCode& code, std::size_t t);

// Checks rank(G_W) >= n - delta - t + 1, the generator-restriction rank
// bound that wet solvability guarantees. W holds 0-based wet indices.
bool rank_lower_bound_check(const LinearCode& code,
                            const std::vector<std::size_t>& wet,
                            std::size_t t);

CodeProfile profile(const Code& code);

// One "name: values" line per field.
void write_profile(const CodeProfile& p, std::ostream& out);

}  // namespace wetstego
