#include "phidyn/cli.hpp"
#include "phidyn/coding.hpp"
#include "phidyn/conjugacy.hpp"
#include "phidyn/entropy.hpp"
#include "phidyn/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace phidyn;

namespace {

std::vector<std::string> iterate(const std::string& x, std::size_t n) {
    std::vector<std::string> out;
    Point p = parse_point(x);
    for (std::size_t i = 0; i < n; ++i) {
        p = phi(p);
        out.push_back(to_string(p));
    }
    return out;
}

py::tuple run(std::vector<std::string> args) {
    args.insert(args.begin(), "phidyn");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

py::dict estimate(const EntropyEstimate& e) {
    py::dict d;
    d["method"] = e.method;
    d["value"] = static_cast<double>(e.value);
    d["lambda"] = static_cast<double>(e.lambda);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("phi", [](const std::string& x) { return to_string(phi(parse_point(x))); }, py::arg("x"));
    m.def("iterate", &iterate, py::arg("x"), py::arg("n"));
    m.def(
        "itinerary",
        [](const std::string& x, std::size_t n, bool one_leading) {
            return itinerary(parse_point(x), n, one_leading ? TieRule::one_leading : TieRule::zero_leading).str();
        },
        py::arg("x"), py::arg("n"), py::arg("one_leading") = false);
    m.def("cylinder", [](const std::string& w) { return cylinder(parse_word(w)).str(); }, py::arg("word"));
    m.def("escape_time", [](const std::string& x) { return escape_time(parse_extended_rational(x)); }, py::arg("x"));
    m.def("h", [](const std::string& x) { return h_rational(parse_extended_rational(x)).str(); }, py::arg("x"));
    m.def("h_inverse", [](const std::string& d) { return h_inverse(to_dyadic(parse_rational(d))).str(); },
          py::arg("d"));
    m.def("periodic_point",
          [](const std::string& pre, const std::string& per) {
              return to_string(periodic_point(parse_word(pre), parse_word(per)));
          },
          py::arg("preperiod"), py::arg("period"));
    m.def("count_admissible_words", [](unsigned n) { return count_admissible_words(n).get_str(); }, py::arg("n"));
    m.def("entropy_word_growth", [](unsigned n) { return estimate(entropy_word_growth(n)); }, py::arg("n"));
    m.def("entropy_polynomial_root", [](double tol) { return estimate(entropy_polynomial_root(tol)); },
          py::arg("tol") = 1e-12);
    m.def("entropy_spectral", [](unsigned it) { return estimate(transition_spectral_radius(it)); },
          py::arg("iterations") = 60);
    m.def("entropy_lap_count", [](unsigned n) { return estimate(entropy_lap_count(n)); }, py::arg("n"));
    m.def("run", &run, py::arg("args"), "Run the command line interface; returns (exit_code, stdout, stderr).");
}
