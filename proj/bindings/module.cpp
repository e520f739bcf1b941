#include "starsym/betti.hpp"
#include "starsym/generators.hpp"
#include "starsym/normalform.hpp"
#include "starsym/oracle.hpp"
#include "starsym/order.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace starsym;

namespace {

py::int_ to_py(const Int& value) {
    PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

StarParams make_params(int s, int c, int m, int delta) {
    StarParams p{s, c, m, delta};
    p.validate();
    return p;
}

// Parameters recovered from a concrete monomial: the ambient size is its
// length and the power is its symbolic degree.
StarParams monomial_params(const FMonomial& M, int c) {
    const int s = static_cast<int>(M.size());
    StarParams probe{s, c, 1, 1};
    probe.validate();
    const long long m = sdeg(M, probe);
    if (m < 1) throw invalid_input("invalid-range: monomial has symbolic degree zero");
    return StarParams{s, c, static_cast<int>(m), 1};
}

std::vector<std::vector<int>> layer_lists(const FMonomial& M) {
    std::vector<std::vector<int>> out;
    for (const FormSubset& layer : normal_form(M)) out.push_back(layer.indices());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symbolic powers of star configurations: counts, generators and "
              "Betti tables.";

    m.def(
        "mu",
        [](int s, int c, int mm) { return to_py(mu(make_params(s, c, mm, 1))); },
        py::arg("s"), py::arg("c"), py::arg("m"),
        "Number of minimal generators of the m-th symbolic power.");
    m.def(
        "sdefect",
        [](int s, int c, int mm) { return to_py(sdefect(make_params(s, c, mm, 1))); },
        py::arg("s"), py::arg("c"), py::arg("m"),
        "Minimal generators beyond those of the m-th ordinary power.");
    m.def(
        "regularity",
        [](int s, int c, int mm, int delta) {
            return regularity(make_params(s, c, mm, delta));
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("delta") = 1,
        "Castelnuovo-Mumford regularity of the m-th symbolic power.");
    m.def(
        "count_in_degree",
        [](int s, int c, int mm, int t) {
            return to_py(count_generators_in_degree(make_params(s, c, mm, 1), t));
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("t"),
        "Minimal generators of F-degree t*(s-c)+m.");
    m.def(
        "count_closed",
        [](int s, int c, int mm, int t) {
            return to_py(count_generators_closed(make_params(s, c, mm, 1), t));
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("t"),
        "Closed form for count_in_degree, valid for 2t >= m.");
    m.def(
        "generators",
        [](int s, int c, int mm, bool module) {
            StarParams p = make_params(s, c, mm, 1);
            return module ? enumerate_module_generators(p) : enumerate_generators(p);
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("module") = false,
        "Exponent tuples of the minimal generators, in descending order.");
    m.def(
        "betti",
        [](int s, int c, int mm, int delta) {
            py::dict out;
            for (const auto& [key, value] : betti_table(make_params(s, c, mm, delta)).entries)
                out[py::make_tuple(key.first, key.second)] = to_py(value);
            return out;
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("delta") = 1,
        "Graded Betti numbers as {(i, j): beta}.");
    m.def(
        "strand_closed",
        [](int s, int c, int mm, int t, int i) {
            return to_py(strand_closed(make_params(s, c, mm, 1), t, i));
        },
        py::arg("s"), py::arg("c"), py::arg("m"), py::arg("t"), py::arg("i"),
        "Closed form for the strand entry beta_i at F-degree t*(s-c)+m.");
    m.def(
        "top_strand_closed",
        [](int s, int c, int mm) {
            std::vector<std::pair<int, py::int_>> out;
            for (const auto& [i, beta] : top_strand_closed(make_params(s, c, mm, 1)))
                out.emplace_back(i, to_py(beta));
            return out;
        },
        py::arg("s"), py::arg("c"), py::arg("m"),
        "The strand of smallest F-degree as (i, beta_i) pairs.");
    m.def(
        "sdeg",
        [](const FMonomial& M, int c) {
            StarParams p{static_cast<int>(M.size()), c, 1, 1};
            p.validate();
            return sdeg(M, p);
        },
        py::arg("monomial"), py::arg("c"),
        "Largest u such that the monomial lies in the u-th symbolic power.");
    m.def("normal_form", &layer_lists, py::arg("monomial"),
          "Nested layers of the monomial as lists of form indices.");
    m.def(
        "partition_of",
        [](const FMonomial& M, int c) { return partition_of(M, monomial_params(M, c)); },
        py::arg("monomial"), py::arg("c"),
        "Layer-size partition of a minimal generator.");
    m.def(
        "set_size",
        [](const FMonomial& M, int c) { return set_size(M, monomial_params(M, c)); },
        py::arg("monomial"), py::arg("c"),
        "Number of forms spanning the colon by the earlier generators.");
    m.def(
        "set_elements",
        [](const FMonomial& M, int c) {
            return set_elements(M, monomial_params(M, c)).indices();
        },
        py::arg("monomial"), py::arg("c"),
        "Indices of the forms spanning the colon by the earlier generators.");
    m.def(
        "oracle_generators",
        [](int s, int c, int mm) {
            return symbolic_power_oracle(make_params(s, c, mm, 1)).gens;
        },
        py::arg("s"), py::arg("c"), py::arg("m"),
        "Minimal generators recomputed by the brute-force intersection oracle.");
    m.def(
        "oracle_sdefect",
        [](int s, int c, int mm) {
            return to_py(sdefect_oracle(make_params(s, c, mm, 1), OracleLimits{}));
        },
        py::arg("s"), py::arg("c"), py::arg("m"),
        "Symbolic defect recomputed by the brute-force oracle.");
}
