#include "wetstego/stego.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wetstego/analysis.hpp"

namespace wetstego {

BitVector emb(const LinearCode& code, const BitVector& cover,
              const BitVector& message) {
  if (cover.size() != code.length() || message.size() != code.redundancy())
    throw std::invalid_argument("emb: length mismatch");
  return cover ^ code.coset_leader(code.syndrome(cover) ^ message);
}

BitVector emb(const SystematicCode& code, const BitVector& cover,
              const BitVector& message) {
  if (cover.size() != code.length() ||
      message.size() != code.syndrome_length())
    throw std::invalid_argument("emb: length mismatch");
  const BitVector zm = code.check_embed(message);
  return zm ^ nearest_codeword(code.codewords(), cover ^ zm);
}

BitVector emb(const Code& code, const BitVector& cover,
              const BitVector& message) {
  return std::visit([&](const auto& c) { return emb(c, cover, message); },
                    code);
}

BitVector rec(const Code& code, const BitVector& x) {
  return syndrome(code, x);
}

namespace {

void check_instance(std::size_t n, std::size_t r, const WetInstance& inst) {
  if (inst.cover.size() != n)
    throw std::invalid_argument("wet instance: cover length != n");
  if (inst.message.size() != r)
    throw std::invalid_argument("wet instance: message length != r");
  for (auto i : inst.wet)
    if (i >= n) throw std::out_of_range("wet instance: index out of range");
}

std::size_t dry_changes(const BitVector& stego, const BitVector& cover) {
  return stego.hamming_distance(cover);
}

}  // namespace

WetResult solve_wet(const LinearCode& code, const WetInstance& inst) {
  check_instance(code.length(), code.redundancy(), inst);
  std::map<std::size_t, bool> fixed;
  for (auto i : inst.wet) fixed[i] = inst.cover.get(i);

  const AffineSolution sol =
      solve_constrained(code.parity(), inst.message, fixed);
  WetResult res;
  if (!sol.feasible) return res;

  res.feasible = true;
  res.solution_count = sol.solution_count();

  if (sol.kernel_basis.size() > 20)
    throw std::length_error("solve_wet: solution space too large to minimize "
                            "changes (kernel dimension > 20)");
  BitVector best = sol.particular;
  std::size_t best_changes = dry_changes(best, inst.cover);
  BitVector current = sol.particular;
  // Gray-code walk over the solution set.
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << sol.kernel_basis.size());
       ++g) {
    unsigned bit = 0;
    while (!((g >> bit) & 1)) ++bit;
    current ^= sol.kernel_basis[bit];
    const std::size_t ch = dry_changes(current, inst.cover);
    if (ch < best_changes || (ch == best_changes && current.lex_less(best))) {
      best = current;
      best_changes = ch;
    }
  }
  res.stego = best;
  res.changes = best_changes;
  return res;
}

WetResult solve_wet(const SystematicCode& code, const WetInstance& inst) {
  check_instance(code.length(), code.syndrome_length(), inst);
  const BitVector zm = code.check_embed(inst.message);
  const BitVector target = inst.cover ^ zm;

  WetResult res;
  for (const auto& y : code.codewords()) {
    bool match = true;
    for (auto i : inst.wet)
      if (y.get(i) != target.get(i)) {
        match = false;
        break;
      }
    if (!match) continue;
    const BitVector x = y ^ zm;
    const std::size_t ch = dry_changes(x, inst.cover);
    ++res.solution_count;
    if (!res.feasible || ch < res.changes ||
        (ch == res.changes && x.lex_less(res.stego))) {
      res.stego = x;
      res.changes = ch;
    }
    res.feasible = true;
  }
  return res;
}

WetResult solve_wet(const Code& code, const WetInstance& inst) {
  return std::visit([&](const auto& c) { return solve_wet(c, inst); }, code);
}

std::size_t wet_threshold(const Code& code) {
  const std::size_t n = code_length(code);
  if (std::holds_alternative<LinearCode>(code))
    return n - dual_distance(code) + 1;
  return n - oa_strength(code);
}

long long strict_overhead(const LinearCode& code) {
  const long long tau =
      static_cast<long long>(code.length()) - dual_distance(Code{code}) + 1;
  return tau - static_cast<long long>(code.redundancy());
}

std::vector<std::size_t> parse_wet_mask(const std::string& line,
                                        std::size_t n) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);

  std::vector<std::size_t> wet;
  const bool looks_like_mask =
      tokens.size() == 1 && tokens[0].size() == n &&
      tokens[0].find_first_not_of("01") == std::string::npos;
  if (looks_like_mask) {
    for (std::size_t i = 0; i < n; ++i)
      if (tokens[0][i] == '1') wet.push_back(i);
    return wet;
  }
  for (const auto& t : tokens) {
    std::size_t pos = 0;
    unsigned long idx = std::stoul(t, &pos);
    if (pos != t.size() || idx < 1 || idx > n)
      throw std::invalid_argument("wet mask: bad index \"" + t + "\"");
    wet.push_back(idx - 1);
  }
  std::sort(wet.begin(), wet.end());
  if (std::adjacent_find(wet.begin(), wet.end()) != wet.end())
    throw std::invalid_argument("wet mask: duplicate index");
  return wet;
}

WetInstance make_instance(BitVector cover, BitVector message,
                          std::vector<std::size_t> wet) {
  std::sort(wet.begin(), wet.end());
  return WetInstance{std::move(cover), std::move(message), std::move(wet)};
}

}  // namespace wetstego
