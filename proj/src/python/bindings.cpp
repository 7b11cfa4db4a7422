#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qint/cauchy.hpp"
#include "qint/corpus.hpp"
#include "qint/dbar.hpp"
#include "qint/experiments.hpp"
#include "qint/geometry.hpp"
#include "qint/integration.hpp"
#include "qint/kernels.hpp"
#include "qint/quaternion.hpp"
#include "qint/report.hpp"

namespace py = pybind11;
using namespace qint;

namespace {

ExperimentConfig make_config(std::uint64_t seed, int nodes, py::object tol) {
    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.nodes = nodes;
    if (!tol.is_none()) {
        cfg.tol = tol.cast<double>();
        if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    }
    return cfg;
}

Report run_report(const std::string& command, std::uint64_t seed, int nodes, py::object tol) {
    const Runner fn = find_runner(command);
    if (fn == nullptr) throw std::invalid_argument("unknown command: " + command);
    return fn(make_config(seed, nodes, tol));
}

py::dict report_to_dict(const Report& r) {
    py::dict out;
    out["command"] = r.command;
    out["seed"] = r.seed;
    out["nodes"] = r.nodes;
    out["tol"] = r.tol;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict row;
        row["assert_id"] = c.assert_id;
        row["value"] = c.value;
        row["tol"] = std::isnan(c.tol) ? py::object(py::none()) : py::object(py::float_(c.tol));
        row["pass"] = c.pass;
        checks.append(row);
    }
    out["checks"] = checks;
    out["pass"] = r.pass();
    return out;
}

const CorpusEntry& corpus_by_name(const std::string& name) {
    static const std::vector<CorpusEntry> all = [] {
        std::vector<CorpusEntry> v = holomorphic_corpus();
        const std::vector<CorpusEntry> c = contrast_corpus();
        v.insert(v.end(), c.begin(), c.end());
        return v;
    }();
    for (const auto& e : all) {
        if (e.name == name) return e;
    }
    throw std::invalid_argument("unknown corpus entry: " + name);
}

}  // namespace

PYBIND11_MODULE(_qint, m) {
    m.doc() = "Quaternionic integral representation kernels and experiments";

    py::class_<Quat>(m, "Quat")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"),
             py::arg("y"), py::arg("z"))
        .def_readwrite("w", &Quat::w)
        .def_readwrite("x", &Quat::x)
        .def_readwrite("y", &Quat::y)
        .def_readwrite("z", &Quat::z)
        .def("__add__", [](const Quat& a, const Quat& b) { return a + b; })
        .def("__sub__", [](const Quat& a, const Quat& b) { return a - b; })
        .def("__neg__", [](const Quat& a) { return -a; })
        .def("__mul__", [](const Quat& a, const Quat& b) { return a * b; })
        .def("__mul__", [](const Quat& a, double s) { return a * s; })
        .def("__rmul__", [](const Quat& a, double s) { return a * s; })
        .def("conj", &Quat::conj)
        .def("norm", &Quat::norm)
        .def("norm2", &Quat::norm2)
        .def("inv", &Quat::inv)
        .def("__repr__",
             [](const Quat& q) {
                 std::ostringstream os;
                 os << "Quat" << q;
                 return os.str();
             })
        .def("__eq__", [](const Quat& a, const Quat& b) { return (a - b).max_abs() == 0.0; });

    m.def("qexp", &qexp, py::arg("q"));
    m.def("qlog", &qlog, py::arg("q"));
    m.def("slice_coord", &slice_coord, py::arg("q"), py::arg("axis"));
    m.def("from_slice", &from_slice, py::arg("c"), py::arg("axis"));

    m.def(
        "theta_period_error",
        [](int nodes, const Quat& z) {
            const SphereGrid grid = SphereGrid::build(nodes, nodes, 2 * nodes);
            const QuatFn one = [](const Quat&) { return QE; };
            return (boundary_integral(one, grid, Quat{}, 1.0, z) - QE).max_abs();
        },
        py::arg("nodes"), py::arg("z"),
        "Deviation of the sphere period of the kernel from the unit");

    m.def(
        "reproduce_residual",
        [](const std::string& name, const Quat& z, int nodes) {
            const CorpusEntry& e = corpus_by_name(name);
            const SphereGrid grid = SphereGrid::build(nodes, nodes, 2 * nodes);
            return (boundary_integral(e.f, grid, Quat{}, 1.0, z) - e.f(z)).max_abs();
        },
        py::arg("name"), py::arg("z"), py::arg("nodes") = 16,
        "Boundary-integral reproduction residual for a named corpus entry");

    m.def(
        "corpus_names",
        [] {
            std::vector<std::string> names;
            for (const auto& e : holomorphic_corpus()) names.push_back(e.name);
            for (const auto& e : contrast_corpus()) names.push_back(e.name);
            return names;
        },
        "Names accepted by reproduce_residual");

    m.def(
        "line_cauchy_residual",
        [](const Quat& center, const Quat& axis, int winding, const Quat& z) {
            const QuatFn fid = [](const Quat& q) { return q; };
            return (line_cauchy(fid, center, 1.0, axis, winding, z) - z).max_abs();
        },
        py::arg("center"), py::arg("axis"), py::arg("winding"), py::arg("z"));

    m.def(
        "cr_residual",
        [](const std::string& name, const Quat& z) {
            return cr_residual(corpus_by_name(name).f, z);
        },
        py::arg("name"), py::arg("z"),
        "Channel-equation residual of a named corpus entry");

    m.def(
        "margin_ball",
        [](const Quat& zeta, const Quat& z) {
            const ScalarFn ball = [](const Quat& q) { return q.norm2() - 1.0; };
            return margin(ball, zeta, z, 2.0);
        },
        py::arg("zeta"), py::arg("z"),
        "Support margin of the unit ball at boundary point zeta against z");

    m.def("commands", [] { return command_names(); }, "Available experiment names");

    m.def(
        "run",
        [](const std::string& command, std::uint64_t seed, int nodes, py::object tol) {
            return report_to_dict(run_report(command, seed, nodes, tol));
        },
        py::arg("command"), py::arg("seed") = 20250815ull, py::arg("nodes") = 32,
        py::arg("tol") = py::none(), "Run an experiment and return its report as a dict");

    m.def(
        "render_json",
        [](const std::string& command, std::uint64_t seed, int nodes, py::object tol) {
            return render_json(run_report(command, seed, nodes, tol));
        },
        py::arg("command"), py::arg("seed") = 20250815ull, py::arg("nodes") = 32,
        py::arg("tol") = py::none());

    m.def(
        "render_csv",
        [](const std::string& command, std::uint64_t seed, int nodes, py::object tol) {
            return render_csv(run_report(command, seed, nodes, tol));
        },
        py::arg("command"), py::arg("seed") = 20250815ull, py::arg("nodes") = 32,
        py::arg("tol") = py::none());
}
