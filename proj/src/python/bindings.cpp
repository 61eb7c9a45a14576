#include "sgon/cli.hpp"
#include "sgon/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::string analyze_json(const std::string& command, std::optional<std::string> input, std::optional<std::size_t> k,
                         std::optional<std::string> radius, int terms, std::optional<int> precision,
                         std::uint64_t seed) {
    sgon::Options options;
    options.k = k;
    options.radius = std::move(radius);
    options.terms = terms;
    options.precision = precision ? *precision : sgon::default_precision();
    options.seed = seed;
    options.format = sgon::Format::Json;
    sgon::Report report;
    {
        py::gil_scoped_release release;
        report = sgon::analyze(sgon::AnalysisRequest{command, std::move(input), options});
    }
    return report.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_sgon, m) {
    m.attr("SgonError") = py::reinterpret_steal<py::object>(
        PyErr_NewException("sgon._sgon.SgonError", PyExc_ValueError, nullptr));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const sgon::Error& e) {
            py::object type = py::module_::import("sgon._sgon").attr("SgonError");
            py::object instance = type(e.what());
            instance.attr("kind") = std::string(sgon::to_string(e.kind()));
            instance.attr("exit_code") = sgon::exit_code(e.kind());
            PyErr_SetObject(type.ptr(), instance.ptr());
        }
    });

    m.def("analyze_json", &analyze_json, py::arg("command"), py::arg("input") = py::none(),
          py::arg("k") = py::none(), py::arg("radius") = py::none(), py::arg("terms") = 10,
          py::arg("precision") = py::none(), py::arg("seed") = 1);
    m.def("commands", &sgon::commands);
    m.def("default_precision", &sgon::default_precision);
}
