#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "wetstego/analysis.hpp"

using namespace wetstego;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }

BitVector from_index(std::size_t v, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((v >> i) & 1) x.set(i, true);
  return x;
}

long long binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long long r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<Rational> dist(std::initializer_list<long long> v) {
  std::vector<Rational> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

// A_i straight from the definition: average over x of #{y : d(x,y) = i}.
std::vector<Rational> pairwise_distribution(const std::vector<BitVector>& w,
                                            std::size_t n) {
  std::vector<long long> counts(n + 1, 0);
  for (const auto& a : w)
    for (const auto& b : w) ++counts[a.hamming_distance(b)];
  std::vector<Rational> out;
  for (long long c : counts)
    out.emplace_back(c, static_cast<long long>(w.size()));
  return out;
}

LinearCode random_linear(std::size_t n, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t bump = 0;; ++bump) {
    const BitMatrix g = random_matrix(k, n, seed + 1000 * bump);
    if (rank(g) == k) return LinearCode::from_generator(g);
  }
}

// d_t by brute force: minimum union support over all rank-t tuples of
// codewords.
std::vector<std::size_t> ghw_oracle(const LinearCode& code) {
  const auto& words = code.codewords();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  std::vector<std::size_t> d(k, n);
  const std::size_t m = words.size();
  std::vector<std::size_t> pick;
  for (std::size_t t = 1; t <= k; ++t) {
    pick.clear();
    auto run = [&](auto&& self, std::size_t start) -> void {
      if (pick.size() == t) {
        std::vector<BitVector> rows;
        for (std::size_t i : pick) rows.push_back(words[i]);
        if (rank(BitMatrix::from_rows(rows)) != t) return;
        std::size_t sz = 0;
        for (std::size_t j = 0; j < n; ++j) {
          bool any = false;
          for (const auto& r : rows) any = any || r.get(j);
          if (any) ++sz;
        }
        d[t - 1] = std::min(d[t - 1], sz);
        return;
      }
      for (std::size_t i = start; i < m; ++i) {
        if (words[i].is_zero()) continue;
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    run(run, 0);
  }
  return d;
}

}  // namespace

TEST_CASE("krawtchouk fixtures and orthogonality") {
  const std::size_t n = 7;
  for (std::size_t x = 0; x <= n; ++x) {
    CHECK(krawtchouk(n, 0, x) == 1);
    CHECK(krawtchouk(n, 1, x) ==
          static_cast<long long>(n) - 2 * static_cast<long long>(x));
  }
  for (std::size_t i = 0; i <= n; ++i) CHECK(krawtchouk(n, i, 0) == binom(n, i));

  // sum_x C(n,x) K_i(x) K_j(x) = delta_ij 2^n C(n,i)
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      long long s = 0;
      for (std::size_t x = 0; x <= n; ++x)
        s += binom(n, x) * krawtchouk(n, i, x) * krawtchouk(n, j, x);
      CHECK(s == (i == j ? 128 * binom(n, i) : 0));
    }
}

TEST_CASE("distance distribution matches the pairwise definition") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const std::size_t k = 1 + seed % std::min<std::size_t>(n - 1, 4);
    const LinearCode c = random_linear(n, k, seed);
    CHECK(distance_distribution(Code{c}) ==
          pairwise_distribution(c.codewords(), n));
  }
  const SystematicCode nad = nadler_code();
  CHECK(distance_distribution(Code{nad}) ==
        pairwise_distribution(nad.codewords(), 12));
}

TEST_CASE("distance distribution fixtures") {
  CHECK(distance_distribution(Code{hamming_code(2)}) == dist({1, 0, 0, 1}));
  CHECK(distance_distribution(Code{hamming_code(3)}) ==
        dist({1, 0, 0, 7, 7, 0, 0, 1}));
  CHECK(distance_distribution(Code{nadler_code()}) ==
        dist({1, 0, 0, 0, 0, 12, 12, 0, 3, 4, 0, 0, 0}));
}

TEST_CASE("dual transform equals the dual code's weight distribution") {
  for (std::uint64_t seed = 30; seed <= 45; ++seed) {
    const std::size_t n = 4 + seed % 5;
    const std::size_t k = 1 + seed % (n - 1);
    const LinearCode c = random_linear(n, k, seed);
    CHECK(dual_distribution(Code{c}) ==
          distance_distribution(Code{c.dual()}));
  }
}

TEST_CASE("dual transform applied twice is the identity") {
  const std::vector<Code> cases{Code{hamming_code(3)}, Code{nadler_code()},
                                Code{random_linear(9, 4, 7)}};
  for (const auto& c : cases) {
    const std::size_t n = code_length(c);
    const long long size =
        static_cast<long long>(codewords(c).size());
    const auto a = distance_distribution(c);
    const auto b = dual_transform(a, n, size);
    // |C^perp,formal| = 2^n / |C|.
    const long long dual_size = (1LL << n) / size;
    CHECK(dual_transform(b, n, dual_size) == a);
  }
}

TEST_CASE("dual distance fixtures and full-space convention") {
  CHECK(dual_distance(Code{hamming_code(3)}) == 4);  // dual is the simplex code
  CHECK(dual_distance(Code{nadler_code()}) == 3);
  CHECK(dual_distribution(Code{nadler_code()}) ==
        dist({1, 0, 0, 4, 18, 36, 24, 12, 21, 12, 0, 0, 0}));

  // The full space has trivial dual distribution; convention: d_perp = n + 1.
  const LinearCode full = LinearCode::from_generator(BitMatrix::identity(4));
  CHECK(dual_distance(Code{full}) == 5);
}

TEST_CASE("generalized hamming weights") {
  CHECK(generalized_hamming_weights(hamming_code(3)) ==
        std::vector<std::size_t>{3, 5, 6, 7});
  CHECK(generalized_hamming_weights(hamming_code(2)) ==
        std::vector<std::size_t>{3});

  for (std::uint64_t seed = 50; seed <= 62; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const std::size_t k = 2 + seed % 3;
    const LinearCode c = random_linear(n, std::min(k, n - 1), seed);
    CHECK(generalized_hamming_weights(c) == ghw_oracle(c));
  }

  // Monotone and shifted-bounded: t <= d_t - d_1 + 1 ... just monotonicity
  // plus d_k <= n.
  const auto h = generalized_hamming_weights(hamming_code(4));
  CHECK(h.size() == 11);
  CHECK(std::is_sorted(h.begin(), h.end()));
  CHECK(h.front() == 3);
  CHECK(h.back() == 15);
}

TEST_CASE("mds rank") {
  // Hamming(3): hierarchy (3,5,6,7), r = 3, least t with d_t = 3 + t is 2;
  // the closed form n - r - d_perp + 2 gives 7 - 3 - 4 + 2 = 2 as well.
  CHECK(mds_rank(hamming_code(3)) == 2);
  CHECK(mds_rank(hamming_code(2)) == 1);  // repetition: d_1 = 3 = r + 1

  for (std::uint64_t seed = 70; seed <= 80; ++seed) {
    const LinearCode c = random_linear(6 + seed % 3, 3, seed);
    const auto h = generalized_hamming_weights(c);
    if (h.back() != c.length()) continue;
    const std::size_t t = mds_rank(c);
    const std::size_t r = c.redundancy();
    CHECK(h[t - 1] == r + t);
    if (t > 1) CHECK(h[t - 2] != r + t - 1);
    CHECK(t == c.length() - r - dual_distance(Code{c}) + 2);
  }
}

TEST_CASE("radii fixtures") {
  SUBCASE("perfect hamming(3)") {
    const RadiiResult rr = radii(Code{hamming_code(3)});
    CHECK(rr.covering_radius == 1);
    CHECK(rr.alpha == dist({1, 7, 0, 0, 0, 0, 0, 0}));
    CHECK(rr.average_radius == Rational(7, 8));
  }
  SUBCASE("repetition [3,1]") {
    const RadiiResult rr = radii(Code{hamming_code(2)});
    CHECK(rr.covering_radius == 1);
    CHECK(rr.alpha == dist({1, 3, 0, 0}));
    CHECK(rr.average_radius == Rational(3, 4));
  }
  SUBCASE("nadler") {
    const RadiiResult rr = radii(Code{nadler_code()});
    CHECK(rr.covering_radius == 4);
    CHECK(rr.average_radius == Rational(147, 64));
    // alpha_i = C(n,i) within the packing radius (d = 5).
    CHECK(rr.alpha[0] == Rational(1));
    CHECK(rr.alpha[1] == Rational(12));
    CHECK(rr.alpha[2] == Rational(66));
    Rational total;
    for (const auto& a : rr.alpha) total += a;
    CHECK(total == Rational(128));  // 2^12 / 32
  }
}

TEST_CASE("radii invariants on random codes") {
  for (std::uint64_t seed = 90; seed <= 99; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const LinearCode c = random_linear(n, 2 + seed % 3, seed);
    const RadiiResult rr = radii(Code{c});
    CHECK(rr.average_radius <= Rational(rr.covering_radius));
    CHECK(rr.alpha.size() == c.length() + 1);
    CHECK(rr.alpha[rr.covering_radius] != Rational(0));
    for (std::size_t i = rr.covering_radius + 1; i < rr.alpha.size(); ++i)
      CHECK(rr.alpha[i] == Rational(0));
    CHECK(rr.alpha[0] == Rational(1));
    Rational total;
    for (const auto& a : rr.alpha) total += a;
    CHECK(total == Rational(1LL << c.redundancy()));
  }
}

TEST_CASE("orthogonal array strengths") {
  // Linear codes: coverage and balance coincide and equal d_perp - 1.
  for (std::uint64_t seed = 110; seed <= 122; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const LinearCode c = random_linear(n, 2 + seed % 3, seed);
    const std::size_t s = oa_strength(Code{c});
    CHECK(s == oa_balanced_strength(Code{c}));
    CHECK(s == dual_distance(Code{c}) - 1);
  }

  // Nadler: every 4-column projection is onto, but only 2-column
  // projections are balanced (the Delsarte strength is d_perp - 1 = 2).
  CHECK(oa_strength(Code{nadler_code()}) == 4);
  CHECK(oa_balanced_strength(Code{nadler_code()}) == 2);
}

TEST_CASE("resilience of the nadler syndrome map") {
  const SystematicCode nad = nadler_code();
  CHECK(is_resilient(nad, 1));
  CHECK(is_resilient(nad, 2));
  CHECK_FALSE(is_resilient(nad, 3));
  CHECK_FALSE(is_resilient(nad, 4));
  CHECK_FALSE(is_resilient(nad, 5));
}

TEST_CASE("generator restriction rank bound") {
  const LinearCode c = hamming_code(3);  // n = 7, r = 3, d_perp = 4
  // delta >= n - d_perp + 1 = 4 guarantees solvability, hence the bound
  // holds for every wet set of that size and every admissible t.
  for (std::size_t delta = 4; delta <= 7; ++delta) {
    const std::size_t wsize = 7 - delta;
    for (std::size_t mask = 0; mask < 128; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != wsize)
        continue;
      std::vector<std::size_t> wet;
      for (std::size_t j = 0; j < 7; ++j)
        if ((mask >> j) & 1) wet.push_back(j);
      for (std::size_t t = delta - 3; t <= delta; ++t)
        CHECK(rank_lower_bound_check(c, wet, t));
    }
  }
  CHECK_THROWS_AS(rank_lower_bound_check(c, {0, 1, 2, 3, 4}, 1),
                  std::invalid_argument);  // delta < r
  CHECK_THROWS_AS(rank_lower_bound_check(c, {0}, 1),
                  std::invalid_argument);  // t < delta - r
}

TEST_CASE("profile and serialization") {
  const CodeProfile p = profile(Code{nadler_code()});
  CHECK(p.n == 12);
  CHECK(p.log_size == 5);
  CHECK(p.dual_distance == 3);
  CHECK(p.covering_radius == 4);
  CHECK(p.average_radius == Rational(147, 64));
  CHECK(p.oa_strength == 4);
  CHECK(p.oa_balanced_strength == 2);
  CHECK(p.weight_hierarchy.empty());
  CHECK_FALSE(p.mds_rank.has_value());
  CHECK_FALSE(p.singleton_defect.has_value());

  const CodeProfile h = profile(Code{hamming_code(3)});
  CHECK(h.dual_distance == 4);
  CHECK(h.weight_hierarchy == std::vector<std::size_t>{3, 5, 6, 7});
  CHECK(h.mds_rank == 2);
  CHECK(h.singleton_defect == 1);  // n - d_perp + 1 - r

  std::ostringstream out;
  write_profile(h, out);
  const std::string text = out.str();
  CHECK(text.find("dual_distance: 4") != std::string::npos);
  CHECK(text.find("average_radius: 7/8") != std::string::npos);
}
