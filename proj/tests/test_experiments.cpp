#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "wetstego/experiments.hpp"

using namespace wetstego;

TEST_CASE("limiting rank law") {
  // Full-rank probability of a square random matrix: prod_{j>=1}(1 - 2^-j).
  CHECK(rank_defect_probability(20, 0, 0) == doctest::Approx(0.2887880951).epsilon(1e-9));
  // One extra row roughly doubles it.
  CHECK(rank_defect_probability(20, 1, 0) == doctest::Approx(0.5775761902).epsilon(1e-9));
  // Large defects are astronomically rare: s = 10 costs a 2^-100 factor.
  CHECK(rank_defect_probability(40, 0, 10) < 1e-20);
  // Law is independent of t.
  CHECK(rank_defect_probability(10, 2, 1) ==
        doctest::Approx(rank_defect_probability(50, 2, 1)).epsilon(1e-12));
  CHECK_THROWS_AS(rank_defect_probability(3, 0, 4), std::invalid_argument);

  for (unsigned m = 0; m <= 5; ++m) {
    double total = 0.0;
    for (unsigned s = 0; s <= 30; ++s)
      total += rank_defect_probability(40, m, s);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("q_m products") {
  CHECK(q_m(0) == doctest::Approx(0.2887880951).epsilon(1e-9));
  // Recurrence Q_{m-1} = ((2^m - 1) / 2^m) Q_m.
  for (unsigned m = 1; m <= 12; ++m) {
    const double lhs = q_m(m - 1);
    const double rhs = (std::pow(2.0, m) - 1.0) / std::pow(2.0, m) * q_m(m);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK(q_m(40) > 1.0 - 1e-11);
  CHECK(q_m(40) <= 1.0);
}

TEST_CASE("average overhead constant") {
  const double mt = average_overhead();
  CHECK(mt == doctest::Approx(1.6067).epsilon(1e-3));
  CHECK(mt < 2.0);
  // First summand alone: (1/2) Q_1.
  CHECK(mt > 0.5 * q_m(1));
}

TEST_CASE("expected rank") {
  // E[rank] = sum_s (t - s) P(s); close to t for square-ish matrices and
  // essentially t once a few extra rows exist.
  const double e0 = expected_rank(30, 0);
  CHECK(e0 < 30.0);
  CHECK(e0 > 29.0);
  CHECK(30.0 - expected_rank(30, 8) < 0.01);
  CHECK(30.0 - expected_rank(30, 20) < 1e-5);
  CHECK(expected_rank(10, 0) < expected_rank(10, 1));
}

TEST_CASE("solvability probability") {
  // p = 2^(avrank - (n - delta)).
  CHECK(solvability_probability(20, 5, 10, 5.0) == doctest::Approx(0.03125));
  CHECK(solvability_probability(20, 5, 15, 5.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(solvability_probability(20, 5, 4, 4.0),
                  std::invalid_argument);
}

TEST_CASE("monte carlo rank matches the law") {
  const ExperimentReport rep = monte_carlo_rank(24, 1, 20000, 1234);
  CHECK(rep.trials == 20000);
  CHECK(rep.seed == 1234);
  CHECK(rep.theoretical.size() == rep.empirical.size());
  double esum = 0.0;
  for (std::size_t s = 0; s < rep.empirical.size(); ++s) {
    esum += rep.empirical[s];
    const double p = rep.theoretical[s];
    const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / 20000);
    CHECK(std::abs(rep.empirical[s] - p) <= std::max(4 * sigma, 1e-3));
  }
  CHECK(esum == doctest::Approx(1.0).epsilon(1e-12));

  // Deterministic under the seed.
  const ExperimentReport again = monte_carlo_rank(24, 1, 20000, 1234);
  CHECK(again.empirical == rep.empirical);
  CHECK(monte_carlo_rank(8, 0, 1, 5).empirical[0] +
            monte_carlo_rank(8, 0, 1, 5).empirical[1] +
            monte_carlo_rank(8, 0, 1, 5).empirical[2] > 0.0);
}

TEST_CASE("monte carlo wet feasibility") {
  // delta - r = 3 extra dry symbols: the random system behaves like a random
  // (delta) x (delta - r) ... feasibility ~ 2^(avrank - r) with avrank from
  // the limiting law.
  const ExperimentReport rep = monte_carlo_wet_feasibility(16, 5, 8, 20000, 777);
  CHECK(rep.theoretical.size() == 1);
  CHECK(rep.empirical.size() == 1);
  const double p = rep.theoretical[0];
  CHECK(p > 0.5);
  CHECK(p < 1.0);
  // 2^(avrank - r) <= E[2^(rank - r)] (convexity), so the prediction sits a
  // little below the observed rate; the gap here is ~0.02.
  CHECK(rep.empirical[0] >= p - 0.005);
  CHECK(rep.empirical[0] <= p + 0.05);
  CHECK(rep.max_abs_deviation == doctest::Approx(std::abs(rep.empirical[0] - p)));

  // With a large dry margin the system is almost surely solvable.
  const ExperimentReport easy = monte_carlo_wet_feasibility(16, 3, 13, 4000, 8);
  CHECK(easy.empirical[0] > 0.99);
}

TEST_CASE("empirical average overhead") {
  const double mt = average_overhead();
  const double emp = empirical_average_overhead(24, 20000, 2024);
  // Var of the overhead is below 4; 3 sigma of the mean over 20000 trials.
  CHECK(std::abs(emp - mt) < 3 * std::sqrt(4.0 / 20000) + 5e-2);
  CHECK(empirical_average_overhead(24, 5000, 11) ==
        empirical_average_overhead(24, 5000, 11));
}

TEST_CASE("random full rank matrices") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 20; ++i) {
    const BitMatrix h = random_full_rank_matrix(4, 9, rng);
    CHECK(h.rows() == 4);
    CHECK(h.cols() == 9);
    CHECK(rank(h) == 4);
  }
}

TEST_CASE("report csv") {
  ExperimentReport rep;
  rep.theoretical = {0.5, 0.25};
  rep.empirical = {0.5, 0.3};
  rep.trials = 10;
  rep.max_abs_deviation = 0.05;
  std::ostringstream out;
  write_report_csv(rep, out);
  const std::string text = out.str();
  CHECK(text.find("s,theoretical,empirical,deviation") != std::string::npos);
  CHECK(text.find("\n0,") != std::string::npos);
  CHECK(text.find("\n1,") != std::string::npos);
}
