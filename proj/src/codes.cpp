#include "wetstego/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wetstego {

struct LinearCode::Cache {
  std::once_flag words_once;
  std::vector<BitVector> words;

  std::once_flag leaders_once;
  std::vector<BitVector> leaders;  // indexed by packed syndrome
};

LinearCode::LinearCode(BitMatrix g, BitMatrix h)
    : generator_(std::move(g)),
      parity_(std::move(h)),
      cache_(std::make_shared<Cache>()) {}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
  const std::size_t n = g.cols();
  const std::size_t k = g.rows();
  if (rank(g) != k)
    throw std::invalid_argument("from_generator: rank-deficient matrix");

  // RREF of G; the dual basis comes from the free columns.
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(g.row(i));
  BitMatrix gm = BitMatrix::from_rows(std::move(rows));
  std::vector<BitVector> hk = kernel_basis(gm);
  BitMatrix h = hk.empty() ? BitMatrix(0, n)
                           : BitMatrix::from_rows(std::move(hk));
  return LinearCode(g, std::move(h));
}

LinearCode LinearCode::from_parity(const BitMatrix& h) {
  const std::size_t n = h.cols();
  const std::size_t r = h.rows();
  if (rank(h) != r)
    throw std::invalid_argument("from_parity: rank-deficient matrix");
  std::vector<BitVector> gk = kernel_basis(h);
  BitMatrix g = gk.empty() ? BitMatrix(0, n)
                           : BitMatrix::from_rows(std::move(gk));
  return LinearCode(std::move(g), h);
}

BitVector LinearCode::encode(const BitVector& message) const {
  return generator_.apply_left(message);
}

BitVector LinearCode::syndrome(const BitVector& x) const {
  if (x.size() != length())
    throw std::invalid_argument("syndrome: vector length != n");
  return parity_.apply_right(x);
}

const std::vector<BitVector>& LinearCode::codewords() const {
  std::call_once(cache_->words_once, [this] {
    const std::size_t k = dimension();
    if (k > 24) throw std::length_error("codewords: dimension > 24");
    cache_->words.reserve(std::size_t{1} << k);
    for (std::size_t a = 0; a < (std::size_t{1} << k); ++a) {
      BitVector msg(k);
      for (std::size_t i = 0; i < k; ++i)
        if ((a >> i) & 1) msg.set(i, true);
      cache_->words.push_back(encode(msg));
    }
    std::sort(cache_->words.begin(), cache_->words.end(),
              [](const BitVector& a, const BitVector& b) {
                return a.lex_less(b);
              });
  });
  return cache_->words;
}

namespace {

std::size_t pack_bits(const BitVector& v) {
  std::size_t x = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) x |= std::size_t{1} << i;
  return x;
}

// All weight-w supports of {0..n-1}, invoking f on each candidate vector.
template <typename F>
void for_each_weight(std::size_t n, std::size_t w, F&& f) {
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    BitVector v(n);
    for (auto i : idx) v.set(i, true);
    f(v);
    std::size_t j = w;
    while (j > 0 && idx[j - 1] == n - w + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < w; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

BitVector LinearCode::coset_leader(const BitVector& syn) const {
  if (syn.size() != redundancy())
    throw std::invalid_argument("coset_leader: syndrome length != n-k");
  std::call_once(cache_->leaders_once, [this] {
    const std::size_t r = redundancy();
    if (r > 24) throw std::length_error("coset_leader: n-k > 24");
    const std::size_t slots = std::size_t{1} << r;
    cache_->leaders.assign(slots, BitVector());
    std::vector<std::size_t> found_weight(slots, length() + 1);
    std::size_t remaining = slots;
    for (std::size_t w = 0; w <= length() && remaining > 0; ++w) {
      for_each_weight(length(), w, [&](const BitVector& v) {
        const std::size_t s = pack_bits(syndrome(v));
        if (found_weight[s] > w) {
          found_weight[s] = w;
          cache_->leaders[s] = v;
          --remaining;
        } else if (found_weight[s] == w &&
                   v.lex_less(cache_->leaders[s])) {
          cache_->leaders[s] = v;
        }
      });
    }
  });
  return cache_->leaders[pack_bits(syn)];
}

LinearCode LinearCode::dual() const {
  return LinearCode(parity_, generator_);
}

LinearCode hamming_code(unsigned s) {
  if (s < 2 || s > 24)
    throw std::invalid_argument("hamming_code: redundancy must be in [2, 24]");
  const std::size_t n = (std::size_t{1} << s) - 1;
  BitMatrix h(s, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (unsigned i = 0; i < s; ++i)
      if ((j >> i) & 1) h.set(i, j - 1, true);
  return LinearCode::from_parity(h);
}

SystematicCode::SystematicCode(std::size_t n,
                               std::vector<std::size_t> info_positions,
                               std::vector<BitVector> sigma_table)
    : n_(n),
      info_positions_(std::move(info_positions)),
      sigma_table_(std::move(sigma_table)) {
  if (!std::is_sorted(info_positions_.begin(), info_positions_.end()) ||
      std::adjacent_find(info_positions_.begin(), info_positions_.end()) !=
          info_positions_.end())
    throw std::invalid_argument("info positions must be sorted and distinct");
  for (auto p : info_positions_)
    if (p >= n_) throw std::out_of_range("info position out of range");
  const std::size_t u = info_positions_.size();
  if (u > 24) throw std::length_error("info count > 24");
  if (sigma_table_.size() != (std::size_t{1} << u))
    throw std::invalid_argument("sigma table must have 2^u entries");
  for (const auto& row : sigma_table_)
    if (row.size() != n_ - u)
      throw std::invalid_argument("sigma table entry length != n-u");

  std::vector<bool> is_info(n_, false);
  for (auto p : info_positions_) is_info[p] = true;
  for (std::size_t j = 0; j < n_; ++j)
    if (!is_info[j]) check_positions_.push_back(j);

  codewords_.reserve(sigma_table_.size());
  for (std::size_t a = 0; a < sigma_table_.size(); ++a) {
    BitVector info(u);
    for (std::size_t i = 0; i < u; ++i)
      if ((a >> i) & 1) info.set(i, true);
    codewords_.push_back(encode(info));
  }
  std::sort(codewords_.begin(), codewords_.end(),
            [](const BitVector& a, const BitVector& b) {
              return a.lex_less(b);
            });
}

SystematicCode SystematicCode::from_codewords(
    std::size_t n, std::vector<std::size_t> info_positions,
    const std::vector<BitVector>& words) {
  const std::size_t u = info_positions.size();
  if (words.size() != (std::size_t{1} << u))
    throw std::invalid_argument("from_codewords: expected 2^u codewords");
  std::vector<bool> is_info(n, false);
  for (auto p : info_positions) is_info[p] = true;

  std::vector<BitVector> table(words.size());
  std::vector<bool> seen(words.size(), false);
  for (const auto& w : words) {
    if (w.size() != n)
      throw std::invalid_argument("from_codewords: codeword length != n");
    std::size_t a = 0;
    for (std::size_t i = 0; i < u; ++i)
      if (w.get(info_positions[i])) a |= std::size_t{1} << i;
    if (seen[a])
      throw std::invalid_argument(
          "from_codewords: projection onto info positions is not a bijection");
    seen[a] = true;
    BitVector check(n - u);
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_info[j]) check.set(c++, w.get(j));
    table[a] = std::move(check);
  }
  return SystematicCode(n, std::move(info_positions), std::move(table));
}

SystematicCode SystematicCode::from_linear(const LinearCode& code) {
  // RREF the generator; the pivot columns are the information set.
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < code.dimension(); ++i)
    rows.push_back(code.generator().row(i));
  BitMatrix g = BitMatrix::from_rows(std::move(rows));
  // Re-run a reduction by building the kernel-free RREF through rank calls is
  // wasteful; reduce explicitly here.
  std::vector<std::size_t> pivots;
  {
    std::size_t next = 0;
    for (std::size_t col = 0; col < g.cols() && next < g.rows(); ++col) {
      std::size_t pr = next;
      while (pr < g.rows() && !g.get(pr, col)) ++pr;
      if (pr == g.rows()) continue;
      std::swap(g.row(next), g.row(pr));
      for (std::size_t i = 0; i < g.rows(); ++i)
        if (i != next && g.get(i, col)) g.row(i) ^= g.row(next);
      pivots.push_back(col);
      ++next;
    }
  }
  const std::size_t u = pivots.size();
  std::vector<BitVector> words;
  words.reserve(std::size_t{1} << u);
  for (std::size_t a = 0; a < (std::size_t{1} << u); ++a) {
    BitVector w(g.cols());
    for (std::size_t i = 0; i < u; ++i)
      if ((a >> i) & 1) w ^= g.row(i);
    words.push_back(std::move(w));
  }
  return from_codewords(g.cols(), std::move(pivots), words);
}

BitVector SystematicCode::sigma(const BitVector& info) const {
  if (info.size() != info_count())
    throw std::invalid_argument("sigma: info length != u");
  std::size_t a = 0;
  for (std::size_t i = 0; i < info.size(); ++i)
    if (info.get(i)) a |= std::size_t{1} << i;
  return sigma_table_[a];
}

BitVector SystematicCode::encode(const BitVector& info) const {
  const BitVector check = sigma(info);
  BitVector w(n_);
  for (std::size_t i = 0; i < info_positions_.size(); ++i)
    w.set(info_positions_[i], info.get(i));
  for (std::size_t j = 0; j < check_positions_.size(); ++j)
    w.set(check_positions_[j], check.get(j));
  return w;
}

BitVector SystematicCode::syndrome(const BitVector& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("syndrome: vector length != n");
  BitVector info(info_count());
  for (std::size_t i = 0; i < info_positions_.size(); ++i)
    info.set(i, x.get(info_positions_[i]));
  BitVector s = sigma(info);
  for (std::size_t j = 0; j < check_positions_.size(); ++j)
    if (x.get(check_positions_[j])) s.flip(j);
  return s;
}

BitVector SystematicCode::check_embed(const BitVector& v) const {
  if (v.size() != syndrome_length())
    throw std::invalid_argument("check_embed: length != n-u");
  BitVector x(n_);
  for (std::size_t j = 0; j < check_positions_.size(); ++j)
    x.set(check_positions_[j], v.get(j));
  return x;
}

bool SystematicCode::is_linear() const {
  const std::size_t u = info_count();
  if (!sigma_table_[0].is_zero()) return false;
  for (std::size_t a = 0; a < sigma_table_.size(); ++a) {
    BitVector expect(syndrome_length());
    for (std::size_t i = 0; i < u; ++i)
      if ((a >> i) & 1) expect ^= sigma_table_[std::size_t{1} << i];
    if (!(expect == sigma_table_[a])) return false;
  }
  return true;
}

LinearCode SystematicCode::to_linear() const {
  if (!is_linear())
    throw std::logic_error("to_linear: generator function is not additive");
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < info_count(); ++i) {
    BitVector e(info_count());
    e.set(i, true);
    rows.push_back(encode(e));
  }
  return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
}

namespace {

// Table 1 of the van Lint presentation, one 12-bit codeword per row.
constexpr const char* kNadlerWords[32] = {
    "011100100100", "101010010010", "110001001001", "100011100100",
    "010101010010", "001110001001", "100100011100", "010010101010",
    "001001110001", "100100100011", "010010010101", "001001001110",
    "111010100001", "111001010100", "111100001010", "010111001100",
    "001111100010", "100111010001", "100001111010", "010100111001",
    "001010111100", "001100010111", "100010001111", "010001100111",
    "011011011011", "101101101101", "110110110110", "000111111111",
    "111000111111", "111111000111", "111111111000", "000000000000",
};

}  // namespace

SystematicCode nadler_code() {
  std::vector<BitVector> words;
  words.reserve(32);
  for (const char* w : kNadlerWords) words.push_back(BitVector::from_string(w));
  return SystematicCode::from_codewords(12, {0, 1, 3, 6, 9}, words);
}

SystematicCode nadler_code_from_sigma() {
  // The published sigma_11 has a misprinted linear part (x1+x4+x5); the code
  // it produces has minimum distance 4. With x2+x4+x5, matching the pattern
  // of sigma_9 and sigma_10, the codeword set is exactly a coordinate
  // permutation of Table 1 (see kNadlerSigmaPermutation).
  std::vector<BitVector> table(32);
  for (std::size_t a = 0; a < 32; ++a) {
    const bool x1 = a & 1, x2 = a >> 1 & 1, x3 = a >> 2 & 1, x4 = a >> 3 & 1,
               x5 = a >> 4 & 1;
    BitVector s(7);
    s.set(0, x1 ^ x2 ^ x3 ^ ((x1 ^ x5) & (x3 ^ x4)));
    s.set(1, x1 ^ x2 ^ x4 ^ ((x1 ^ x3) & (x4 ^ x5)));
    s.set(2, x1 ^ x2 ^ x5 ^ ((x1 ^ x4) & (x3 ^ x5)));
    s.set(3, x2 ^ x3 ^ x4 ^ (x1 & x4) ^ (x4 & x5) ^ (x5 & x1));
    s.set(4, x2 ^ x3 ^ x5 ^ (x1 & x3) ^ (x3 & x4) ^ (x4 & x1));
    s.set(5, x2 ^ x4 ^ x5 ^ (x1 & x3) ^ (x3 & x5) ^ (x5 & x1));
    s.set(6, x1 ^ x2 ^ x3 ^ x4 ^ x5 ^ (x3 & x4) ^ (x4 & x5) ^ (x5 & x3));
    table[a] = std::move(s);
  }
  return SystematicCode(12, {0, 1, 2, 3, 4}, std::move(table));
}

std::size_t code_length(const Code& code) {
  return std::visit([](const auto& c) { return c.length(); }, code);
}

std::size_t syndrome_length(const Code& code) {
  if (const auto* lin = std::get_if<LinearCode>(&code))
    return lin->redundancy();
  return std::get<SystematicCode>(code).syndrome_length();
}

BitVector syndrome(const Code& code, const BitVector& x) {
  return std::visit([&](const auto& c) { return c.syndrome(x); }, code);
}

const std::vector<BitVector>& codewords(const Code& code) {
  return std::visit(
      [](const auto& c) -> const std::vector<BitVector>& {
        return c.codewords();
      },
      code);
}

BitVector nearest_codeword(const std::vector<BitVector>& words,
                           const BitVector& x) {
  const BitVector* best = nullptr;
  std::size_t best_d = x.size() + 1;
  for (const auto& w : words) {
    const std::size_t d = x.hamming_distance(w);
    if (d < best_d || (d == best_d && w.lex_less(*best))) {
      best = &w;
      best_d = d;
    }
  }
  return *best;
}

BitVector nearest_codeword(const Code& code, const BitVector& x) {
  return nearest_codeword(codewords(code), x);
}

BitVector translated_decode(const Code& code, const BitVector& z,
                            const BitVector& x) {
  return z ^ nearest_codeword(code, x ^ z);
}

Code parse_code(std::istream& in) {
  std::string kind;
  std::size_t n, dim;
  if (!(in >> kind >> n >> dim))
    throw std::runtime_error("code file: expected \"linear n k\" or "
                             "\"systematic n u\" header");
  if (kind == "linear") {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      std::string line;
      if (!(in >> line))
        throw std::runtime_error("code file: missing generator row " +
                                 std::to_string(i + 1));
      BitVector v = BitVector::from_string(line);
      if (v.size() != n)
        throw std::runtime_error("code file: generator row length != n");
      rows.push_back(std::move(v));
    }
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
  }
  if (kind == "systematic") {
    std::vector<std::size_t> positions(dim);
    for (auto& p : positions) {
      if (!(in >> p) || p < 1 || p > n)
        throw std::runtime_error("code file: bad info position");
      --p;  // 1-based on disk
    }
    std::vector<BitVector> table(std::size_t{1} << dim);
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::string info, sig;
      if (!(in >> info >> sig))
        throw std::runtime_error("code file: missing sigma table row");
      const BitVector iv = BitVector::from_string(info);
      if (iv.size() != dim)
        throw std::runtime_error("code file: info bits length != u");
      table[pack_bits(iv)] = BitVector::from_string(sig);
    }
    return SystematicCode(n, std::move(positions), std::move(table));
  }
  throw std::runtime_error("code file: unknown kind \"" + kind + "\"");
}

void write_code(const Code& code, std::ostream& out) {
  if (const auto* lin = std::get_if<LinearCode>(&code)) {
    out << "linear " << lin->length() << ' ' << lin->dimension() << '\n';
    for (std::size_t i = 0; i < lin->dimension(); ++i)
      out << lin->generator().row(i).to_string() << '\n';
    return;
  }
  const auto& sys = std::get<SystematicCode>(code);
  out << "systematic " << sys.length() << ' ' << sys.info_count() << '\n';
  for (std::size_t i = 0; i < sys.info_count(); ++i)
    out << (i ? " " : "") << sys.info_positions()[i] + 1;
  out << '\n';
  for (std::size_t a = 0; a < (std::size_t{1} << sys.info_count()); ++a) {
    BitVector info(sys.info_count());
    for (std::size_t i = 0; i < sys.info_count(); ++i)
      if ((a >> i) & 1) info.set(i, true);
    out << info.to_string() << ' ' << sys.sigma(info).to_string() << '\n';
  }
}

}  // namespace wetstego
