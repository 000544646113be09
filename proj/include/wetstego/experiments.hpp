#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wetstego/gf2.hpp"

// The probabilistic side: limiting rank law of random binary matrices, the
// Q_m products, the ~1.6067 average overhead, and Monte Carlo checks for
// both the rank law and the solvability of random wet systems.

namespace wetstego {

struct ExperimentReport {
  std::vector<double> theoretical;  // indexed by rank defect s (or a single
                                    // probability for feasibility runs)
  std::vector<double> empirical;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double max_abs_deviation = 0.0;
};

// lim_{t->inf} P(rank(M_{t+m,t}) = t - s)
//   = prod_{j=s+m+1..inf}(1 - 2^-j) / (2^{s(s+m)} prod_{j=1..s}(1 - 2^-j)).
// Infinite products truncated at `terms` factors; the tail of the product is
// below 2^-terms, far under 1e-12 at the default 64. The limit does not
// depend on t; the argument only bounds the admissible defect s <= t.
double rank_defect_probability(unsigned t, unsigned m, unsigned s,
                               unsigned terms = 64);

// Q_m = prod_{j=m+1..inf}(1 - 2^-j), the probability that m extra rows
// suffice for full rank. Satisfies Q_{m-1} = ((2^m - 1)/2^m) Q_m.
double q_m(unsigned m, unsigned terms = 64);

// m~ = sum_{m>=1} (m/2^m) Q_m = 1.6067...; partial sums increase and stay
// below 2.
double average_overhead(unsigned terms = 64);

// E[rank] of a (t+m) x t random matrix under the limiting law.
double expected_rank(unsigned t, unsigned m, unsigned terms = 64);

// p = 2^(avrank - (n - delta)); the probability that delta dry symbols carry
// r message symbols for random code, cover, message and wet set.
double solvability_probability(unsigned n, unsigned r, unsigned delta,
                               double avrank);

// Samples (t+m) x t uniform matrices and tabulates the rank-defect
// frequencies against the limiting law. Deterministic given the seed.
ExperimentReport monte_carlo_rank(unsigned t, unsigned m, std::uint64_t trials,
                                  std::uint64_t seed);

// Samples random full-rank r x n parity-check matrices, covers, messages and
// wet sets of size n - delta, and measures the feasibility frequency of [S].
ExperimentReport monte_carlo_wet_feasibility(unsigned n, unsigned r,
                                             unsigned delta,
                                             std::uint64_t trials,
                                             std::uint64_t seed);

// Adds uniform rows to a fixed t-column matrix until it reaches rank t and
// averages the number of extra rows beyond t; the Monte Carlo counterpart of
// average_overhead().
double empirical_average_overhead(unsigned t, std::uint64_t trials,
                                  std::uint64_t seed);

// Uniform full-rank r x n matrix by rejection sampling.
BitMatrix random_full_rank_matrix(std::size_t rows, std::size_t cols,
                                  std::mt19937_64& rng);

// CSV with columns: index, theoretical, empirical, deviation.
void write_report_csv(const ExperimentReport& report, std::ostream& out,
                      const char* index_name = "s");

}  // namespace wetstego
