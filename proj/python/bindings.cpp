// Python bindings. Lattices cross the boundary as JSON text (the same
// documents the CLI reads and writes); results come back as JSON text and
// are decoded by the pure-Python wrapper.

#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/eutaxy.hpp"
#include "nolat/invariants.hpp"
#include "nolat/json_io.hpp"
#include "nolat/perturbation.hpp"
#include "nolat/report.hpp"
#include "nolat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nolat;

namespace {

Lattice load(const std::string& text) {
    try {
        return lattice_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

Rational threshold(const std::string& text) {
    return text == "pi/3" ? near_orthogonal_threshold() : Rational::parse(text);
}

std::string text(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_nolat, m) {
    m.doc() = "Exact lattice invariants (JSON-in, JSON-out core)";
    py::register_exception<Error>(m, "NolatError", PyExc_ValueError);

    m.def("family_names", &family_names);
    m.def(
        "construct",
        [](const std::string& family, std::optional<std::size_t> n, std::optional<std::size_t> mm,
           std::optional<std::size_t> r) { return text(lattice_to_json(construct_family(family, n, mm, r))); },
        py::arg("family"), py::arg("n") = py::none(), py::arg("m") = py::none(), py::arg("r") = py::none());
    m.def(
        "analyze",
        [](const std::string& lattice, const std::string& cos_sq, bool search, std::size_t max_subsets,
           unsigned jobs) {
            ReportOptions opts;
            opts.membership.cos_sq_threshold = threshold(cos_sq);
            opts.membership.search_minimal_bases = search;
            opts.membership.max_subsets = max_subsets;
            opts.membership.enumeration.jobs = jobs;
            py::gil_scoped_release release;
            return text(to_json(classification_report(load(lattice), opts)));
        },
        py::arg("lattice"), py::arg("cos_sq") = "1/4", py::arg("search") = true, py::arg("max_subsets") = 200000,
        py::arg("jobs") = 1);
    m.def("minimal_vectors", [](const std::string& lattice) { return text(to_json(minimal_vectors(load(lattice)))); });
    m.def("coherence", [](const std::string& lattice) {
        const auto l = load(lattice);
        const auto mv = minimal_vectors(l);
        const auto c = coherence(l, mv);
        return text(Json{{"coherence", c.value.str()},
                         {"pair", Json::array({c.attaining_pair.first, c.attaining_pair.second})},
                         {"average", average_coherence(l, mv).str()}});
    });
    m.def("theta_orthogonal", [](const std::string& lattice, const std::string& cos_sq) {
        return text(to_json(is_theta_orthogonal(load(lattice), threshold(cos_sq))));
    }, py::arg("lattice"), py::arg("cos_sq") = "1/4");
    m.def("eutaxy", [](const std::string& lattice) { return text(to_json(eutaxy_classify(load(lattice)))); });
    m.def("is_perfect", [](const std::string& lattice) { return is_perfect(load(lattice)); });
    m.def("density", [](const std::string& lattice) {
        const auto d = packing_density(load(lattice));
        return text(Json{{"delta", d.delta}, {"delta_sq_exact", d.delta_sq_over_omega_sq.str()}});
    });
    m.def("cn_value", &cn_value);
    m.def("cn_test", [](const std::string& c, int n) { return cn_test(Rational::parse(c), n); });
    m.def("planar", [](const std::string& epsilon, long long d) {
        return text(to_json(planar_wr(Rational::parse(epsilon), d)));
    }, py::arg("epsilon"), py::arg("d"));
    m.def("perturb_2d", [](const std::string& lattice, const std::string& cos) {
        return text(to_json(perturb_2d(load(lattice), Rational::parse(cos))));
    });
    m.def("perturb_block", [](const std::string& lattice, std::size_t block, const std::string& cos) {
        return text(to_json(perturb_block(load(lattice), block, Rational::parse(cos))));
    });
    m.def(
        "perturb_general",
        [](const std::string& lattice, const std::string& mode, const std::string& target, double tol) {
            if (mode != "mu" && mode != "nu") throw Error(Errc::InvalidArgument, "mode must be 'mu' or 'nu'");
            const auto pm = mode == "mu" ? PerturbMode::Mu : PerturbMode::Nu;
            return text(to_json(perturb_general(load(lattice), pm, Rational::parse(target), tol)));
        },
        py::arg("lattice"), py::arg("mode"), py::arg("target"), py::arg("tol") = 1e-9);
    m.def(
        "verify",
        [](const std::string& suite, std::size_t max_n, unsigned jobs) {
            py::gil_scoped_release release;
            return text(suite_to_json(run_suite(SuiteOptions{suite, max_n, jobs})));
        },
        py::arg("suite") = "all", py::arg("max_n") = 8, py::arg("jobs") = 1);
}
