#include "wetstego/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "wetstego/stego.hpp"

namespace wetstego {

namespace {

// prod_{j=a..a+terms-1} (1 - 2^-j)
double tail_product(unsigned a, unsigned terms) {
  double p = 1.0;
  for (unsigned j = 0; j < terms; ++j)
    p *= 1.0 - std::ldexp(1.0, -static_cast<int>(a + j));
  return p;
}

// Incremental GF(2) row basis keyed by leading bit; tracks the rank of the
// rows added so far.
class RankTracker {
 public:
  explicit RankTracker(std::size_t cols) : cols_(cols) {}

  // Returns true if the row was independent of the basis.
  bool add(BitVector row) {
    while (true) {
      std::size_t lead = cols_;
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row.get(i)) {
          lead = i;
          break;
        }
      if (lead == cols_) return false;
      auto [it, inserted] = basis_.try_emplace(lead, row);
      if (inserted) return true;
      row ^= it->second;
    }
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t cols_;
  std::map<std::size_t, BitVector> basis_;
};

}  // namespace

double rank_defect_probability(unsigned t, unsigned m, unsigned s,
                               unsigned terms) {
  if (terms < 1)
    throw std::invalid_argument("rank_defect_probability: terms < 1");
  if (s > t)
    throw std::invalid_argument("rank_defect_probability: defect s > t");
  double num = tail_product(s + m + 1, terms);
  double den = std::ldexp(1.0, static_cast<int>(s * (s + m)));
  for (unsigned j = 1; j <= s; ++j)
    den *= 1.0 - std::ldexp(1.0, -static_cast<int>(j));
  return num / den;
}

double q_m(unsigned m, unsigned terms) {
  return tail_product(m + 1, terms);
}

double average_overhead(unsigned terms) {
  if (terms < 1) throw std::invalid_argument("average_overhead: terms < 1");
  double sum = 0.0;
  for (unsigned m = 1; m <= terms; ++m)
    sum += m * std::ldexp(q_m(m, terms), -static_cast<int>(m));
  return sum;
}

double expected_rank(unsigned t, unsigned m, unsigned terms) {
  double e = 0.0;
  for (unsigned s = 0; s <= t; ++s) {
    const double p = rank_defect_probability(t, m, s, terms);
    e += (t - s) * p;
    if (p < 1e-18) break;  // factor 2^{-s(s+m)} collapses fast
  }
  return e;
}

double solvability_probability(unsigned n, unsigned r, unsigned delta,
                               double avrank) {
  if (r > delta || delta > n)
    throw std::invalid_argument("solvability_probability: need r <= delta <= n");
  return std::pow(2.0, avrank - static_cast<double>(n - delta));
}

ExperimentReport monte_carlo_rank(unsigned t, unsigned m, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_rank: trials < 1");
  std::mt19937_64 rng(seed);
  const unsigned max_defect = std::min(t, 16u);
  std::vector<std::uint64_t> count(max_defect + 1, 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    RankTracker tracker(t);
    for (unsigned i = 0; i < t + m; ++i)
      tracker.add(BitVector::random(t, rng));
    const unsigned defect = t - static_cast<unsigned>(tracker.rank());
    ++count[std::min(defect, max_defect)];
  }

  ExperimentReport report;
  report.trials = trials;
  report.seed = seed;
  for (unsigned s = 0; s <= max_defect; ++s) {
    report.theoretical.push_back(rank_defect_probability(t, m, s));
    report.empirical.push_back(static_cast<double>(count[s]) /
                               static_cast<double>(trials));
    report.max_abs_deviation =
        std::max(report.max_abs_deviation,
                 std::abs(report.theoretical.back() - report.empirical.back()));
  }
  return report;
}

BitMatrix random_full_rank_matrix(std::size_t rows, std::size_t cols,
                                  std::mt19937_64& rng) {
  if (rows > cols)
    throw std::invalid_argument("random_full_rank_matrix: rows > cols");
  while (true) {
    BitMatrix m = BitMatrix::random(rows, cols, rng);
    if (rank(m) == rows) return m;
  }
}

ExperimentReport monte_carlo_wet_feasibility(unsigned n, unsigned r,
                                             unsigned delta,
                                             std::uint64_t trials,
                                             std::uint64_t seed) {
  if (r > delta || delta > n)
    throw std::invalid_argument(
        "monte_carlo_wet_feasibility: need r <= delta <= n");
  if (n > 24)
    throw std::invalid_argument("monte_carlo_wet_feasibility: n > 24");
  if (trials < 1)
    throw std::invalid_argument("monte_carlo_wet_feasibility: trials < 1");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);

  std::uint64_t feasible = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const BitMatrix h = random_full_rank_matrix(r, n, rng);
    const BitVector cover = BitVector::random(n, rng);
    const BitVector message = BitVector::random(r, rng);
    std::shuffle(indices.begin(), indices.end(), rng);
    std::map<std::size_t, bool> fixed;
    for (std::size_t i = 0; i < n - delta; ++i)
      fixed[indices[i]] = cover.get(indices[i]);
    if (solve_constrained(h, message, fixed).feasible) ++feasible;
  }

  ExperimentReport report;
  report.trials = trials;
  report.seed = seed;
  report.theoretical.push_back(solvability_probability(
      n, r, delta, expected_rank(n - delta, delta - r)));
  report.empirical.push_back(static_cast<double>(feasible) /
                             static_cast<double>(trials));
  report.max_abs_deviation =
      std::abs(report.theoretical[0] - report.empirical[0]);
  return report;
}

double empirical_average_overhead(unsigned t, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (trials < 1)
    throw std::invalid_argument("empirical_average_overhead: trials < 1");
  std::mt19937_64 rng(seed);
  std::uint64_t total_extra = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    RankTracker tracker(t);
    std::size_t rows = 0;
    while (tracker.rank() < t) {
      tracker.add(BitVector::random(t, rng));
      ++rows;
    }
    total_extra += rows - t;
  }
  return static_cast<double>(total_extra) / static_cast<double>(trials);
}

void write_report_csv(const ExperimentReport& report, std::ostream& out,
                      const char* index_name) {
  out << index_name << ",theoretical,empirical,deviation\n";
  for (std::size_t i = 0; i < report.theoretical.size(); ++i) {
    const double dev = report.empirical[i] - report.theoretical[i];
    out << i << ',' << report.theoretical[i] << ',' << report.empirical[i]
        << ',' << dev << '\n';
  }
}

}  // namespace wetstego
