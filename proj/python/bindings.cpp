#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "xpa/cheeger.hpp"
#include "xpa/cochains.hpp"
#include "xpa/commands.hpp"
#include "xpa/errors.hpp"
#include "xpa/io.hpp"
#include "xpa/obstruction.hpp"
#include "xpa/property_a.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as JSON text and come back as plain dicts.
py::object to_python(const xpa::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

xpa::RunConfig config_from(const std::string& command, const py::kwargs& options) {
    xpa::RunConfig c;
    c.command = command;
    for (const auto& [key, value] : options) {
        const auto k = key.cast<std::string>();
        if (k == "graph") c.graph = value.cast<std::string>();
        else if (k == "family") c.family = value.cast<std::string>();
        else if (k == "control") c.control = value.cast<std::string>();
        else if (k == "kernel") c.kernel = value.cast<std::string>();
        else if (k == "recipe") c.recipe = value.cast<std::string>();
        else if (k == "R") c.R = value.cast<std::size_t>();
        else if (k == "S") c.S = value.cast<std::size_t>();
        else if (k == "S_cut") c.s_cut = value.cast<std::size_t>();
        else if (k == "S_div") c.s_divisor = value.cast<std::size_t>();
        else if (k == "control_S") c.control_S = value.cast<std::size_t>();
        else if (k == "control_S_div") c.control_s_divisor = value.cast<std::size_t>();
        else if (k == "tol") c.tol = value.cast<double>();
        else if (k == "rowsum_dev") c.rowsum_dev = value.cast<double>();
        else if (k == "threshold") c.threshold = value.cast<double>();
        else if (k == "lb_floor") c.lb_floor = value.cast<double>();
        else if (k == "seed") c.seed = value.cast<std::uint64_t>();
        else if (k == "format") c.format = value.cast<std::string>();
        else if (k == "exact_cap") c.exact_cap = value.cast<std::size_t>();
        else if (k == "symmetric") c.symmetric = value.cast<bool>();
        else throw py::type_error("unknown option '" + k + "'");
    }
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Expansion, l1 cohomology and property-A kernel profiles of finite graphs";
    m.attr("__version__") = xpa::kVersion;

    py::register_exception<xpa::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<xpa::InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "run",
        [](const std::string& command, const py::kwargs& options) {
            const auto out = xpa::run_command(config_from(command, options));
            return py::make_tuple(out.exit_code, out.text);
        },
        py::arg("command"),
        "Runs a CLI command in-process; returns (exit_code, report text).");

    m.def(
        "report",
        [](const std::string& command, const py::kwargs& options) {
            const auto c = config_from(command, options);
            c.validate();
            return to_python(xpa::command_result(c));
        },
        py::arg("command"), "Runs a command and returns its report as a dict; raises on failure.");

    m.def(
        "graph", [](const std::string& spec, std::uint64_t seed) {
            return to_python(xpa::graph_to_json(xpa::resolve_graph(spec, seed)));
        },
        py::arg("spec"), py::arg("seed") = 0);

    m.def(
        "cheeger",
        [](const std::string& spec, std::size_t cap) {
            const auto cut = xpa::cheeger_exact(xpa::resolve_graph(spec), cap);
            auto j = xpa::to_json(cut);
            j["gap"] = cut.ratio().value();
            j["h"] = 0.5 * cut.ratio().value();
            return to_python(j);
        },
        py::arg("spec"), py::arg("cap") = xpa::kDefaultExactCap);

    m.def(
        "quotient_norm",
        [](const std::vector<double>& values) {
            const auto q = xpa::quotient_norm(xpa::VertexFunction(values));
            return py::make_tuple(q.value, q.shift);
        },
        py::arg("values"), "Returns (inf_c ||f + c||_1, minimizing c).");

    m.def(
        "coboundary",
        [](const std::string& spec, const std::vector<double>& values) {
            const auto df = xpa::coboundary(xpa::resolve_graph(spec), xpa::VertexFunction(values));
            return std::vector<double>(df.values().begin(), df.values().end());
        },
        py::arg("spec"), py::arg("values"));

    m.def(
        "propa",
        [](const std::string& spec, std::size_t R, std::size_t S, bool symmetric, bool with_kernel) {
            xpa::PropaOptions opt;
            opt.symmetric = symmetric;
            const auto r = xpa::propa_optimum(xpa::resolve_graph(spec), R, S, opt);
            return to_python(xpa::to_json(r, with_kernel));
        },
        py::arg("spec"), py::arg("R") = 1, py::arg("S") = 1, py::arg("symmetric") = false,
        py::arg("with_kernel") = false);

    m.def(
        "variation_lower_bound",
        [](const std::string& spec, std::size_t S, double rowsum_dev) {
            return to_python(xpa::to_json(xpa::variation_lower_bound(xpa::resolve_graph(spec), S, rowsum_dev)));
        },
        py::arg("spec"), py::arg("S"), py::arg("rowsum_dev") = xpa::kDefaultRowsumBudget);

    m.def("fnv1a", &xpa::fnv1a_hex, py::arg("data"));
}
