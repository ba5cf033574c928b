#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bes/bounds.hpp"
#include "bes/cleaning.hpp"
#include "bes/config_search.hpp"
#include "bes/density.hpp"
#include "bes/io.hpp"
#include "bes/solver.hpp"

namespace py = pybind11;
using namespace bes;

namespace {

py::tuple known_value_tuple(const KnownValue& v) {
    return py::make_tuple(to_string(v.value), to_string(v.status), v.source);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Configuration-free hypergraph toolkit";

    // Raised with args (code, message).
    static PyObject* error_type =
        PyErr_NewException("bes._core.BesError", PyExc_RuntimeError, nullptr);
    m.attr("BesError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error_type,
                            py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
        }
    });

    py::class_<Params>(m, "Params")
        .def(py::init([](int r, int t, int k) {
                 Params p{r, t, k};
                 p.validate();
                 return p;
             }),
             py::arg("r"), py::arg("t"), py::arg("k"))
        .def_readonly("r", &Params::r)
        .def_readonly("t", &Params::t)
        .def_readonly("k", &Params::k)
        .def("s", &Params::s, py::arg("ell"), py::arg("minus") = false);

    py::class_<Configuration>(m, "Configuration")
        .def_readonly("edge_indices", &Configuration::edge_indices)
        .def_readonly("span", &Configuration::span);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init(&Hypergraph::build), py::arg("r"), py::arg("n"), py::arg("edges"))
        .def_property_readonly("r", &Hypergraph::r)
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def("__len__", &Hypergraph::size)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("serialize", [](const Hypergraph& F) { return serialize(F); })
        .def_static("parse", [](const std::string& text) { return parse_hypergraph(text); });

    m.def("span", [](const Hypergraph& F, const std::vector<EdgeIndex>& idx) { return span(F, idx); });
    m.def("t_shadow", [](const Hypergraph& F, int t) { return t_shadow(F, t).members(); });
    m.def("cover_histogram",
          [](const Hypergraph& F, int t) { return cover_profile(F, t, true).histogram; });
    m.def("t_tight_components", &t_tight_components);

    m.def("find_configuration",
          [](const Hypergraph& F, int ell, int s_max) {
              ConfigQuery q;
              q.ell = ell;
              q.s_max = s_max;
              return find_configuration(F, q);
          },
          py::arg("F"), py::arg("ell"), py::arg("s_max"));
    m.def("is_free", &is_free, py::arg("F"), py::arg("params"), py::arg("ell"),
          py::arg("minus") = false);

    m.def("clean", [](const Hypergraph& F, const Params& p) {
        auto res = clean(F, p);
        return py::make_tuple(res.cleaned, res.ledger.total_removed);
    });
    m.def("verify_cleaned", [](const Hypergraph& F, const Params& p) {
        std::vector<std::string> props;
        for (const auto& v : verify_cleaned(F, p).violations) props.push_back(v.property);
        return props;
    });
    m.def("supporting_J", [](const Hypergraph& F, const Params& p) { return supporting_J(F, p).members(); });

    m.def("pi_known", [](int r, int t, int k) -> py::object {
        if (auto v = pi_known(r, t, k)) return known_value_tuple(*v);
        return py::none();
    });
    m.def("r_threshold_even", [](int k, int t) { return static_cast<long long>(r_threshold_even(k, t)); });
    m.def("check_claim_calc", [](int r, int t, int k) { return check_claim_calc(r, t, k).holds; });

    m.def("exact_f",
          [](const Params& p, int n, std::uint64_t node_limit, bool symmetry) {
              SolverOptions o;
              if (node_limit) o.node_limit = node_limit;
              o.symmetry_pruning = symmetry;
              SolverResult res;
              {
                  py::gil_scoped_release release;
                  res = exact_f(p, n, o);
              }
              py::dict d;
              d["optimum"] = res.optimum;
              d["complete"] = res.complete;
              d["nodes"] = res.nodes_explored;
              d["witness"] = res.witness;
              return d;
          },
          py::arg("params"), py::arg("n"), py::arg("node_limit") = 0, py::arg("symmetry") = false);
    m.def("greedy_pack",
          [](const Params& p, int n, std::uint64_t seed) { return greedy_pack(p, n, seed); },
          py::arg("params"), py::arg("n"), py::arg("seed") = 0);
    m.def("verify_witness", &verify_witness);
}
