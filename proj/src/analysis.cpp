#include "wetstego/analysis.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wetstego {

namespace {

long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  long long c = 1;
  for (std::size_t j = 1; j <= k; ++j) c = c * static_cast<long long>(n - k + j) / static_cast<long long>(j);
  return c;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t w, F&& f) {
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t j = w;
    while (j > 0 && idx[j - 1] == n - w + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < w; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::string fmt_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

long long krawtchouk(std::size_t n, std::size_t i, std::size_t x) {
  if (i > n || x > n)
    throw std::out_of_range("krawtchouk: need 0 <= i, x <= n");
  long long sum = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    const long long term = binomial(x, j) * binomial(n - x, i - j);
    sum += (j & 1) ? -term : term;
  }
  return sum;
}

std::vector<Rational> distance_distribution(const std::vector<BitVector>& words,
                                            std::size_t n) {
  if (words.size() > 4096)
    throw std::length_error("distance_distribution: code too large for "
                            "pairwise enumeration");
  std::vector<long long> count(n + 1, 0);
  for (const auto& x : words)
    for (const auto& y : words) ++count[x.hamming_distance(y)];
  std::vector<Rational> dist(n + 1);
  const long long m = static_cast<long long>(words.size());
  for (std::size_t i = 0; i <= n; ++i) dist[i] = Rational(count[i], m);
  return dist;
}

std::vector<Rational> distance_distribution(const Code& code) {
  if (const auto* lin = std::get_if<LinearCode>(&code)) {
    // Distance distribution = weight distribution for linear codes.
    std::vector<long long> count(lin->length() + 1, 0);
    for (const auto& w : lin->codewords()) ++count[w.weight()];
    std::vector<Rational> dist(lin->length() + 1);
    for (std::size_t i = 0; i <= lin->length(); ++i) dist[i] = count[i];
    return dist;
  }
  const auto& sys = std::get<SystematicCode>(code);
  return distance_distribution(sys.codewords(), sys.length());
}

std::vector<Rational> dual_transform(const std::vector<Rational>& dist,
                                     std::size_t n, long long code_size) {
  if (dist.size() != n + 1)
    throw std::invalid_argument("dual_transform: distribution length != n+1");
  std::vector<Rational> dual(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc;
    for (std::size_t j = 0; j <= n; ++j)
      acc += dist[j] * krawtchouk(n, i, j);
    dual[i] = acc / code_size;
  }
  return dual;
}

std::vector<Rational> dual_distribution(const Code& code) {
  const long long size =
      std::visit([](const auto& c) { return static_cast<long long>(
                                         c.codewords().size()); },
                 code);
  return dual_transform(distance_distribution(code), code_length(code), size);
}

std::size_t dual_distance_of(const std::vector<Rational>& dual_dist) {
  for (std::size_t i = 1; i < dual_dist.size(); ++i)
    if (dual_dist[i] != Rational(0)) return i;
  return dual_dist.size();  // full space: n + 1 by convention
}

std::size_t dual_distance(const Code& code) {
  return dual_distance_of(dual_distribution(code));
}

std::vector<std::size_t> generalized_hamming_weights(const LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (k > 16)
    throw std::length_error("generalized_hamming_weights: dimension > 16");

  std::vector<std::size_t> hierarchy(k, 0);
  std::size_t unset = k;
  for (std::size_t w = 1; w <= n && unset > 0; ++w) {
    for_each_subset(n, w, [&](const std::vector<std::size_t>& support) {
      if (unset == 0) return;
      // dim{c in C : supp(c) within support} = k - rank(G outside support).
      std::vector<std::size_t> outside;
      outside.reserve(n - w);
      std::size_t s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (s < support.size() && support[s] == j)
          ++s;
        else
          outside.push_back(j);
      }
      const std::size_t dim =
          k - rank(column_submatrix(code.generator(), outside));
      for (std::size_t t = 1; t <= dim; ++t) {
        if (hierarchy[t - 1] == 0) {
          hierarchy[t - 1] = w;
          --unset;
        }
      }
    });
  }
  return hierarchy;
}

std::size_t mds_rank(const LinearCode& code) {
  const auto hierarchy = generalized_hamming_weights(code);
  const std::size_t r = code.redundancy();
  if (hierarchy.empty() || hierarchy.back() != code.length())
    throw std::logic_error("mds_rank: undefined, d_k < n");
  for (std::size_t t = 1; t <= hierarchy.size(); ++t)
    if (hierarchy[t - 1] == r + t) return t;
  throw std::logic_error("mds_rank: no t with d_t = r + t");  // unreachable
}

RadiiResult radii(const Code& code) {
  const std::size_t n = code_length(code);
  RadiiResult res;

  if (const auto* lin = std::get_if<LinearCode>(&code)) {
    // alpha_i = number of coset leaders of weight i.
    const std::size_t r = lin->redundancy();
    if (r > 24) throw std::length_error("radii: n-k > 24");
    std::vector<long long> count(n + 1, 0);
    for (std::size_t s = 0; s < (std::size_t{1} << r); ++s) {
      BitVector syn(r);
      for (std::size_t i = 0; i < r; ++i)
        if ((s >> i) & 1) syn.set(i, true);
      ++count[lin->coset_leader(syn).weight()];
    }
    res.alpha.resize(n + 1);
    Rational weighted;
    for (std::size_t i = 0; i <= n; ++i) {
      res.alpha[i] = count[i];
      if (count[i] > 0) res.covering_radius = i;
      weighted += Rational(static_cast<long long>(i) * count[i]);
    }
    res.average_radius = weighted / (1LL << r);
    return res;
  }

  const auto& sys = std::get<SystematicCode>(code);
  if (n > 20) throw std::length_error("radii: length > 20");
  const auto& words = sys.codewords();
  std::vector<long long> count(n + 1, 0);
  for (std::size_t xv = 0; xv < (std::size_t{1} << n); ++xv) {
    BitVector x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((xv >> i) & 1) x.set(i, true);
    std::size_t best = n + 1;
    for (const auto& w : words) best = std::min(best, x.hamming_distance(w));
    ++count[best];
  }
  const long long size = static_cast<long long>(words.size());
  res.alpha.resize(n + 1);
  Rational weighted;
  for (std::size_t i = 0; i <= n; ++i) {
    res.alpha[i] = Rational(count[i], size);
    if (count[i] > 0) res.covering_radius = i;
    weighted += Rational(static_cast<long long>(i) * count[i], size);
  }
  res.average_radius = weighted * Rational(size, 1LL << n);
  return res;
}

namespace {

enum class StrengthKind { Coverage, Balanced };

std::size_t strength_impl(const std::vector<BitVector>& words, std::size_t n,
                          StrengthKind kind) {
  std::size_t t = 0;
  while (t < n) {
    const std::size_t next = t + 1;
    if (kind == StrengthKind::Balanced &&
        words.size() % (std::size_t{1} << next) != 0)
      break;
    const std::size_t expected = words.size() >> next;
    bool ok = true;
    for_each_subset(n, next, [&](const std::vector<std::size_t>& cols) {
      if (!ok) return;
      std::vector<std::size_t> count(std::size_t{1} << next, 0);
      for (const auto& w : words) {
        std::size_t pat = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
          if (w.get(cols[i])) pat |= std::size_t{1} << i;
        ++count[pat];
      }
      for (auto c : count) {
        const bool bad =
            kind == StrengthKind::Coverage ? c == 0 : c != expected;
        if (bad) {
          ok = false;
          return;
        }
      }
    });
    if (!ok) break;
    t = next;
  }
  return t;
}

}  // namespace

std::size_t oa_strength(const std::vector<BitVector>& words, std::size_t n) {
  return strength_impl(words, n, StrengthKind::Coverage);
}

std::size_t oa_strength(const Code& code) {
  return oa_strength(codewords(code), code_length(code));
}

std::size_t oa_balanced_strength(const std::vector<BitVector>& words,
                                 std::size_t n) {
  return strength_impl(words, n, StrengthKind::Balanced);
}

std::size_t oa_balanced_strength(const Code& code) {
  return oa_balanced_strength(codewords(code), code_length(code));
}

bool is_resilient(const SystematicCode& code, std::size_t t) {
  const std::size_t n = code.length();
  const std::size_t r = code.syndrome_length();
  if (n > 20) throw std::length_error("is_resilient: length > 20");
  if (t > n) throw std::out_of_range("is_resilient: t > n");
  if (n - t < r) return false;  // required count 2^(n-t-r) not an integer
  const std::size_t expected = std::size_t{1} << (n - t - r);

  bool ok = true;
  for_each_subset(n, t, [&](const std::vector<std::size_t>& cols) {
    if (!ok) return;
    std::vector<std::size_t> count((std::size_t{1} << t) << r, 0);
    for (std::size_t xv = 0; xv < (std::size_t{1} << n); ++xv) {
      BitVector x(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((xv >> i) & 1) x.set(i, true);
      std::size_t pat = 0;
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (x.get(cols[i])) pat |= std::size_t{1} << i;
      std::size_t syn = 0;
      const BitVector s = code.syndrome(x);
      for (std::size_t i = 0; i < r; ++i)
        if (s.get(i)) syn |= std::size_t{1} << i;
      ++count[(pat << r) | syn];
    }
    for (auto c : count)
      if (c != expected) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool rank_lower_bound_check(const LinearCode& code,
                            const std::vector<std::size_t>& wet,
                            std::size_t t) {
  const std::size_t n = code.length();
  const std::size_t r = code.redundancy();
  if (wet.size() > n)
    throw std::invalid_argument("rank_lower_bound_check: |W| > n");
  const std::size_t delta = n - wet.size();
  if (delta < r || t + r < delta)
    throw std::invalid_argument(
        "rank_lower_bound_check: need delta >= r and t >= delta - r");
  if (wet.empty()) return true;
  const std::size_t rk = rank(column_submatrix(code.generator(), wet));
  const long long bound = static_cast<long long>(n) - delta - t + 1;
  return static_cast<long long>(rk) >= bound;
}

CodeProfile profile(const Code& code) {
  CodeProfile p;
  p.n = code_length(code);
  const auto& words = codewords(code);
  p.log_size = 0;
  while ((std::size_t{1} << p.log_size) < words.size()) ++p.log_size;
  p.distance_distribution = distance_distribution(code);
  p.dual_distribution = dual_transform(
      p.distance_distribution, p.n, static_cast<long long>(words.size()));
  p.dual_distance = dual_distance_of(p.dual_distribution);
  const RadiiResult rr = radii(code);
  p.alpha = rr.alpha;
  p.covering_radius = rr.covering_radius;
  p.average_radius = rr.average_radius;
  p.oa_strength = oa_strength(words, p.n);
  p.oa_balanced_strength = oa_balanced_strength(words, p.n);
  if (const auto* lin = std::get_if<LinearCode>(&code)) {
    p.weight_hierarchy = generalized_hamming_weights(*lin);
    if (!p.weight_hierarchy.empty() && p.weight_hierarchy.back() == p.n)
      p.mds_rank = mds_rank(*lin);
    p.singleton_defect = static_cast<long long>(p.n) - p.dual_distance + 1 -
                         static_cast<long long>(lin->redundancy());
  }
  return p;
}

void write_profile(const CodeProfile& p, std::ostream& out) {
  auto list = [&](const char* name, const std::vector<Rational>& v) {
    out << name << ":";
    for (const auto& q : v) out << ' ' << fmt_rational(q);
    out << '\n';
  };
  out << "length: " << p.n << '\n';
  out << "log2_size: " << p.log_size << '\n';
  list("distance_distribution", p.distance_distribution);
  list("dual_distribution", p.dual_distribution);
  out << "dual_distance: " << p.dual_distance << '\n';
  list("alpha", p.alpha);
  out << "covering_radius: " << p.covering_radius << '\n';
  {
    std::ostringstream dec;
    dec.precision(12);
    dec << boost::rational_cast<double>(p.average_radius);
    out << "average_radius: " << fmt_rational(p.average_radius) << " = "
        << dec.str() << '\n';
  }
  out << "oa_strength: " << p.oa_strength << '\n';
  out << "oa_balanced_strength: " << p.oa_balanced_strength << '\n';
  if (!p.weight_hierarchy.empty()) {
    out << "weight_hierarchy:";
    for (auto d : p.weight_hierarchy) out << ' ' << d;
    out << '\n';
  }
  if (p.mds_rank) out << "mds_rank: " << *p.mds_rank << '\n';
  if (p.singleton_defect)
    out << "singleton_defect: " << *p.singleton_defect << '\n';
}

}  // namespace wetstego
