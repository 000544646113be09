#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wetstego/analysis.hpp"
#include "wetstego/codes.hpp"
#include "wetstego/experiments.hpp"
#include "wetstego/stego.hpp"

namespace py = pybind11;
using namespace wetstego;

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

py::list rationals(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) {
    if (r.denominator() == 1)
      out.append(py::int_(r.numerator()));
    else
      out.append(py::str(rational_str(r)));
  }
  return out;
}

// Opaque code handle; bit vectors cross the boundary as 0/1 strings.
struct PyCode {
  Code code;

  std::size_t n() const { return code_length(code); }
  std::size_t r() const { return syndrome_length(code); }
  bool is_linear() const { return std::holds_alternative<LinearCode>(code); }

  std::vector<std::string> words() const {
    std::vector<std::string> out;
    for (const auto& w : codewords(code)) out.push_back(w.to_string());
    return out;
  }

  std::string repr() const {
    std::ostringstream out;
    out << "<wetstego." << (is_linear() ? "LinearCode" : "SystematicCode")
        << " n=" << n() << " r=" << r() << ">";
    return out.str();
  }
};

BitVector bits(const std::string& s, std::size_t expected, const char* what) {
  if (s.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(expected) + " bits, got " +
                                std::to_string(s.size()));
  return BitVector::from_string(s);
}

py::dict profile_dict(const PyCode& c) {
  const CodeProfile p = profile(c.code);
  py::dict d;
  d["n"] = p.n;
  d["log_size"] = p.log_size;
  d["distance_distribution"] = rationals(p.distance_distribution);
  d["dual_distribution"] = rationals(p.dual_distribution);
  d["dual_distance"] = p.dual_distance;
  d["alpha"] = rationals(p.alpha);
  d["covering_radius"] = p.covering_radius;
  d["average_radius"] = rational_str(p.average_radius);
  d["average_radius_value"] = boost::rational_cast<double>(p.average_radius);
  d["oa_strength"] = p.oa_strength;
  d["oa_balanced_strength"] = p.oa_balanced_strength;
  d["weight_hierarchy"] = p.weight_hierarchy;
  if (p.mds_rank) d["mds_rank"] = *p.mds_rank;
  if (p.singleton_defect) d["singleton_defect"] = *p.singleton_defect;
  return d;
}

py::dict solve_dict(const PyCode& c, const std::string& cover,
                    const std::string& message,
                    std::vector<std::size_t> wet) {
  const WetInstance inst =
      make_instance(bits(cover, c.n(), "cover"),
                    bits(message, c.r(), "message"), std::move(wet));
  const WetResult res = solve_wet(c.code, inst);
  py::dict d;
  d["feasible"] = res.feasible;
  d["solutions"] = res.solution_count;
  if (res.feasible) {
    d["stego"] = res.stego.to_string();
    d["changes"] = res.changes;
  }
  return d;
}

py::dict report_dict(const ExperimentReport& rep) {
  py::dict d;
  d["theoretical"] = rep.theoretical;
  d["empirical"] = rep.empirical;
  d["trials"] = rep.trials;
  d["seed"] = rep.seed;
  d["max_abs_deviation"] = rep.max_abs_deviation;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wetstego, m) {
  m.doc() = "syndrome-based wet-paper steganography toolkit";

  py::class_<PyCode>(m, "Code")
      .def_property_readonly("n", &PyCode::n)
      .def_property_readonly("syndrome_length", &PyCode::r)
      .def_property_readonly("is_linear", &PyCode::is_linear)
      .def("codewords", &PyCode::words)
      .def("__repr__", &PyCode::repr);

  m.def("hamming", [](unsigned s) { return PyCode{Code{hamming_code(s)}}; },
        py::arg("s"), "binary Hamming code with redundancy s");
  m.def("nadler", [] { return PyCode{Code{nadler_code()}}; },
        "the (12, 32, 5) Nadler code, tabulated form");
  m.def("nadler_sigma", [] { return PyCode{Code{nadler_code_from_sigma()}}; },
        "the Nadler code built from its quadratic generator functions");
  m.def("parse_code", [](const std::string& text) {
    std::istringstream in(text);
    return PyCode{parse_code(in)};
  });

  m.def("profile", &profile_dict, py::arg("code"),
        "distance/dual distributions, radii, strengths and hierarchy");
  m.def("wet_threshold",
        [](const PyCode& c) { return wet_threshold(c.code); });

  m.def("emb",
        [](const PyCode& c, const std::string& cover,
           const std::string& message) {
          return emb(c.code, bits(cover, c.n(), "cover"),
                     bits(message, c.r(), "message"))
              .to_string();
        },
        py::arg("code"), py::arg("cover"), py::arg("message"));
  m.def("rec",
        [](const PyCode& c, const std::string& x) {
          return rec(c.code, bits(x, c.n(), "stego")).to_string();
        },
        py::arg("code"), py::arg("stego"));
  m.def("solve_wet", &solve_dict, py::arg("code"), py::arg("cover"),
        py::arg("message"), py::arg("wet"),
        "solve the locked embedding system; wet holds 0-based indices");

  m.def("average_overhead", &average_overhead, py::arg("terms") = 64);
  m.def("q_m", &q_m, py::arg("m"), py::arg("terms") = 64);
  m.def("rank_defect_probability", &rank_defect_probability, py::arg("t"),
        py::arg("m"), py::arg("s"), py::arg("terms") = 64);
  m.def("expected_rank", &expected_rank, py::arg("t"), py::arg("m"),
        py::arg("terms") = 64);
  m.def("monte_carlo_rank",
        [](unsigned t, unsigned mm, std::uint64_t trials, std::uint64_t seed) {
          return report_dict(monte_carlo_rank(t, mm, trials, seed));
        },
        py::arg("t"), py::arg("m"), py::arg("trials"), py::arg("seed"));
  m.def("monte_carlo_wet_feasibility",
        [](unsigned n, unsigned r, unsigned delta, std::uint64_t trials,
           std::uint64_t seed) {
          return report_dict(
              monte_carlo_wet_feasibility(n, r, delta, trials, seed));
        },
        py::arg("n"), py::arg("r"), py::arg("delta"), py::arg("trials"),
        py::arg("seed"));
  m.def("empirical_average_overhead", &empirical_average_overhead,
        py::arg("t"), py::arg("trials"), py::arg("seed"));
}
