#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wetstego/analysis.hpp"
#include "wetstego/codes.hpp"
#include "wetstego/experiments.hpp"
#include "wetstego/pgm.hpp"
#include "wetstego/stego.hpp"

namespace {

using namespace wetstego;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

Code parse_code_spec(const std::string& spec) {
  if (spec == "nadler") return Code{nadler_code()};
  if (spec == "nadler-sigma") return Code{nadler_code_from_sigma()};
  if (spec.rfind("hamming:", 0) == 0) {
    const unsigned s = static_cast<unsigned>(std::stoul(spec.substr(8)));
    return Code{hamming_code(s)};
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::runtime_error("code spec: cannot open " + spec.substr(5));
    return parse_code(in);
  }
  throw std::runtime_error("code spec: expected hamming:s, nadler, "
                           "nadler-sigma or file:PATH, got \"" + spec + "\"");
}

// Either a 0/1 string or hex:DIGITS:NBITS with the first message bit taken
// from the most significant end.
BitVector parse_message(const std::string& text, std::size_t expected_bits) {
  BitVector m(expected_bits);
  if (text.rfind("hex:", 0) == 0) {
    const std::size_t colon = text.rfind(':');
    if (colon == 3) throw std::runtime_error("message: hex needs a bit length");
    const std::string digits = text.substr(4, colon - 4);
    const std::size_t nbits = std::stoul(text.substr(colon + 1));
    if (nbits != expected_bits)
      throw std::runtime_error("message: expected " +
                               std::to_string(expected_bits) + " bits, got " +
                               std::to_string(nbits));
    if (digits.empty() || digits.size() * 4 < nbits)
      throw std::runtime_error("message: hex too short for the bit length");
    auto hex_bit = [&](std::size_t bitpos) {
      const char c = digits[digits.size() - 1 - bitpos / 4];
      const int v = (c >= '0' && c <= '9')   ? c - '0'
                    : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                    : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                             : -1;
      if (v < 0) throw std::runtime_error("message: bad hex digit");
      return (v >> (bitpos % 4)) & 1;
    };
    for (std::size_t bitpos = nbits; bitpos < digits.size() * 4; ++bitpos)
      if (hex_bit(bitpos))
        throw std::runtime_error("message: hex value wider than the bit length");
    // First message bit = most significant of the nbits-wide value.
    for (std::size_t i = 0; i < nbits; ++i) m.set(i, hex_bit(nbits - 1 - i));
    return m;
  }
  if (text.size() != expected_bits)
    throw std::runtime_error("message: expected " +
                             std::to_string(expected_bits) + " bits, got " +
                             std::to_string(text.size()));
  return BitVector::from_string(text);
}

std::vector<std::size_t> parse_mask_spec(const std::string& spec,
                                         std::size_t n) {
  if (spec.empty()) return {};
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::runtime_error("mask: cannot open " + spec.substr(5));
    std::string line;
    std::getline(in, line);
    return parse_wet_mask(line, n);
  }
  return parse_wet_mask(spec, n);
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : v) {
    if (r.denominator() == 1)
      arr.push_back(r.numerator());
    else
      arr.push_back(rational_str(r));
  }
  return arr;
}

nlohmann::json profile_json(const CodeProfile& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["log_size"] = p.log_size;
  j["distance_distribution"] = rationals_json(p.distance_distribution);
  j["dual_distribution"] = rationals_json(p.dual_distribution);
  j["dual_distance"] = p.dual_distance;
  j["alpha"] = rationals_json(p.alpha);
  j["covering_radius"] = p.covering_radius;
  j["average_radius"] = rational_str(p.average_radius);
  j["average_radius_value"] =
      boost::rational_cast<double>(p.average_radius);
  j["oa_strength"] = p.oa_strength;
  j["oa_balanced_strength"] = p.oa_balanced_strength;
  j["weight_hierarchy"] = p.weight_hierarchy;
  if (p.mds_rank) j["mds_rank"] = *p.mds_rank;
  if (p.singleton_defect) j["singleton_defect"] = *p.singleton_defect;
  return j;
}

int cmd_embed(const std::string& image_path, const std::string& code_spec,
              const std::string& message_text, const std::string& mask_spec,
              const std::string& out_path) {
  const Code code = parse_code_spec(code_spec);
  const std::size_t n = code_length(code);
  const GrayImage img = read_pgm(image_path);
  if (n > img.pixel_count())
    throw std::runtime_error("embed: image has fewer pixels than the code "
                             "length " + std::to_string(n));
  const BitVector cover = lsb_extract(img, n);
  const BitVector message =
      parse_message(message_text, syndrome_length(code));
  const WetInstance inst =
      make_instance(cover, message, parse_mask_spec(mask_spec, n));

  const WetResult res = solve_wet(code, inst);
  if (!res.feasible) {
    std::cout << "feasible: no\n";
    return kExitInfeasible;
  }
  write_pgm(lsb_inject(img, res.stego), out_path);
  std::cout << "feasible: yes\n"
            << "changes: " << res.changes << "\n"
            << "solutions: " << res.solution_count << "\n";
  return kExitOk;
}

int cmd_extract(const std::string& image_path, const std::string& code_spec) {
  const Code code = parse_code_spec(code_spec);
  const GrayImage img = read_pgm(image_path);
  const std::size_t n = code_length(code);
  if (n > img.pixel_count())
    throw std::runtime_error("extract: image has fewer pixels than the code "
                             "length " + std::to_string(n));
  std::cout << rec(code, lsb_extract(img, n)).to_string() << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& code_spec, bool json) {
  const CodeProfile p = profile(parse_code_spec(code_spec));
  if (json)
    std::cout << profile_json(p).dump(2) << "\n";
  else
    write_profile(p, std::cout);
  return kExitOk;
}

// Instance file: code spec line, cover line, message line, wet-mask line.
int cmd_wetsolve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("wetsolve: cannot open " + path);
  std::string spec_line, cover_line, message_line, mask_line;
  std::getline(in, spec_line);
  std::getline(in, cover_line);
  std::getline(in, message_line);
  std::getline(in, mask_line);
  const Code code = parse_code_spec(spec_line);
  const std::size_t n = code_length(code);
  if (cover_line.size() != n)
    throw std::runtime_error("wetsolve: cover must have " + std::to_string(n) +
                             " bits");
  const WetInstance inst = make_instance(
      BitVector::from_string(cover_line),
      parse_message(message_line, syndrome_length(code)),
      parse_wet_mask(mask_line, n));
  const WetResult res = solve_wet(code, inst);
  if (!res.feasible) {
    std::cout << "feasible: no\n";
    return kExitInfeasible;
  }
  std::cout << "feasible: yes\n"
            << "stego: " << res.stego.to_string() << "\n"
            << "changes: " << res.changes << "\n"
            << "solutions: " << res.solution_count << "\n";
  return kExitOk;
}

void write_csv_file(const ExperimentReport& report, const std::string& path,
                    const char* index_name) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("simulate: cannot open " + path);
  write_report_csv(report, out, index_name);
}

int cmd_simulate(const std::string& mode, unsigned t, unsigned m, unsigned n,
                 unsigned r, unsigned delta, std::uint64_t trials,
                 std::uint64_t seed, const std::string& csv_path) {
  ExperimentReport report;
  const char* index_name = "s";
  if (mode == "rank") {
    report = monte_carlo_rank(t, m, trials, seed);
  } else if (mode == "overhead") {
    report.theoretical = {average_overhead()};
    report.empirical = {empirical_average_overhead(t, trials, seed)};
    report.trials = trials;
    report.seed = seed;
    report.max_abs_deviation =
        std::abs(report.theoretical[0] - report.empirical[0]);
    index_name = "m";
  } else if (mode == "feasibility") {
    report = monte_carlo_wet_feasibility(n, r, delta, trials, seed);
  } else {
    throw CLI::ValidationError("simulate: mode must be rank, overhead or "
                               "feasibility");
  }
  write_csv_file(report, csv_path, index_name);
  std::cout << "trials: " << report.trials << "\n"
            << "max_abs_deviation: " << report.max_abs_deviation << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wet-paper steganography toolkit"};
  app.require_subcommand(1);

  std::string image_path, code_spec, message_text, mask_spec, out_path;
  std::string instance_path, csv_path, sim_mode;
  bool json = false;
  unsigned t = 20, m = 0, n = 16, r = 5, delta = 8;
  std::uint64_t trials = 10000, seed = 1;

  auto* embed = app.add_subcommand("embed", "embed a message into a PGM image");
  embed->add_option("--image", image_path)->required();
  embed->add_option("--code", code_spec)->required();
  embed->add_option("--message", message_text)->required();
  embed->add_option("--wet", mask_spec);
  embed->add_option("--out", out_path)->required();

  auto* extract = app.add_subcommand("extract", "read a message back");
  extract->add_option("--image", image_path)->required();
  extract->add_option("--code", code_spec)->required();

  auto* analyze = app.add_subcommand("analyze", "print the code profile");
  analyze->add_option("--code", code_spec)->required();
  analyze->add_flag("--json", json);

  auto* wetsolve = app.add_subcommand("wetsolve", "solve a wet instance file");
  wetsolve->add_option("--instance", instance_path)->required();

  auto* simulate = app.add_subcommand("simulate", "run a random experiment");
  simulate->add_option("mode", sim_mode, "rank|overhead|feasibility")
      ->required();
  simulate->add_option("--t", t);
  simulate->add_option("--m", m);
  simulate->add_option("--n", n);
  simulate->add_option("--r", r);
  simulate->add_option("--delta", delta);
  simulate->add_option("--trials", trials);
  simulate->add_option("--seed", seed);
  simulate->add_option("--csv", csv_path);

  try {
    app.parse(argc, argv);
    if (embed->parsed())
      return cmd_embed(image_path, code_spec, message_text, mask_spec,
                       out_path);
    if (extract->parsed()) return cmd_extract(image_path, code_spec);
    if (analyze->parsed()) return cmd_analyze(code_spec, json);
    if (wetsolve->parsed()) return cmd_wetsolve(instance_path);
    return cmd_simulate(sim_mode, t, m, n, r, delta, trials, seed, csv_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
