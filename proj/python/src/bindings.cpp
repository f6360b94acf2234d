#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defext/acceptance.hpp"
#include "defext/commands.hpp"
#include "defext/error.hpp"

namespace py = pybind11;
using namespace defext;

namespace {

py::tuple as_tuple(const CommandResult& r) { return py::make_tuple(r.exit_code, r.text, r.json.dump()); }

Over over_of(const std::string& s)
{
    if (s == "base")
        return Over::Base;
    if (s == "deformed")
        return Over::Deformed;
    throw Error(ErrorKind::Semantic, "over must be 'base' or 'deformed', got '" + s + "'");
}

ProductMethod product_method(const std::string& s)
{
    if (s == "formula")
        return ProductMethod::Formula;
    if (s == "structured")
        return ProductMethod::Structured;
    if (s == "generic")
        return ProductMethod::Generic;
    throw Error(ErrorKind::Semantic, "unknown product method '" + s + "'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Resolutions and Ext algebras of infinitesimal deformations of quiver algebras";

    static py::exception<Error> input_error(m, "InputError");
    static py::exception<Error> math_error(m, "MathError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            if (is_input_error(e.kind()))
                PyErr_SetString(input_error.ptr(), e.what());
            else
                PyErr_SetString(math_error.ptr(), e.what());
        }
    });

    py::class_<Session>(m, "Session")
        .def_static("parse", &Session::parse, py::arg("text"), py::arg("source") = "<session>")
        .def_static("load", &Session::load, py::arg("path"))
        .def_static("fixture", &fixture, py::arg("name"))
        .def_readonly("name", &Session::name)
        .def_readonly("degree", &Session::degree)
        .def_readonly("format", &Session::format)
        .def_property_readonly("dim", [](const Session& s) { return s.algebra->dim(); })
        .def_property_readonly("basis", [](const Session& s) {
            std::vector<std::string> out;
            for (std::size_t i = 0; i < s.algebra->dim(); ++i)
                out.push_back(s.algebra->structured().label(i));
            return out;
        });

    m.def("fixture_names", [] {
        std::vector<std::string> out;
        for (const auto& kv : embedded_fixtures())
            out.push_back(kv.first);
        return out;
    });

    // Each command returns (exit_code, text, json).
    m.def("alg_check", [](const Session& s) { return as_tuple(cmd_alg_check(s)); });
    m.def("cocycle_check", [](const Session& s) { return as_tuple(cmd_cocycle_check(s)); });
    m.def(
        "resolve",
        [](const Session& s, const std::string& simple, const std::string& over, std::size_t degree,
           const std::string& method) {
            if (method != "generic" && method != "theorem")
                throw Error(ErrorKind::Semantic, "method must be 'generic' or 'theorem'");
            return as_tuple(cmd_resolve(s, simple, over_of(over), degree,
                                        method == "theorem" ? ResolveMethod::Theorem : ResolveMethod::Generic));
        },
        py::arg("session"), py::arg("simple"), py::arg("over") = "base", py::arg("degree") = 6,
        py::arg("method") = "generic");
    m.def(
        "star_check",
        [](const Session& s, const std::string& simple, std::size_t degree) {
            return as_tuple(cmd_star_check(s, simple, degree));
        },
        py::arg("session"), py::arg("simple"), py::arg("degree") = 6);
    m.def(
        "ext_dims",
        [](const Session& s, const std::string& over, std::size_t degree, const std::string& simple) {
            return as_tuple(cmd_ext_dims(s, over_of(over), degree, simple));
        },
        py::arg("session"), py::arg("over") = "base", py::arg("degree") = 6, py::arg("simple") = "");
    m.def(
        "ext_basis", [](const Session& s, std::size_t n) { return as_tuple(cmd_ext_basis(s, n)); }, py::arg("session"),
        py::arg("degree"));
    m.def(
        "yoneda",
        [](const Session& s, const std::string& h, const std::string& g, const std::string& method) {
            return as_tuple(cmd_yoneda(s, h, g, product_method(method)));
        },
        py::arg("session"), py::arg("h"), py::arg("g"), py::arg("method") = "formula");
    m.def(
        "corollary_check", [](const Session& s, std::size_t N) { return as_tuple(cmd_corollary_check(s, N)); },
        py::arg("session"), py::arg("degree") = 4);
    m.def("emit_dot", [](const Session& s) { return cmd_emit_dot(s).text; });
    m.def("deform_info", [](const Session& s) { return as_tuple(cmd_deform_info(s)); });

    m.def(
        "run_acceptance",
        [](bool parallel) {
            py::gil_scoped_release release;
            const auto rep = run_acceptance(parallel);
            std::vector<std::tuple<std::string, std::string, bool, std::string, double>> out;
            for (const auto& r : rep.results)
                out.emplace_back(r.id, r.title, r.pass, r.detail, r.seconds);
            return out;
        },
        py::arg("parallel") = true);
}
