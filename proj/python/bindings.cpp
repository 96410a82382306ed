#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newton_implicit/cli.hpp"
#include "newton_implicit/oracle.hpp"

namespace py = pybind11;
using namespace ni;

namespace {

py::handle error_type;

std::string plot(const std::string& curve) {
    auto c = parse_curve(curve);
    auto p = predict(c);
    std::optional<LatticePolygon> oracle;
    if (!c.supports_only) {
        try {
            oracle = newton_polygon(implicitize_sylvester(c));
        } catch (const Error&) {
        }
    }
    return render_svg(p.polygon, oracle);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
            inst.attr("kind") = error_kind_name(e.kind());
            inst.attr("value") = e.value();
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.def("default_seed", &default_seed);
    m.def(
        "predict", [](const std::string& curve) { return predict_report(parse_curve(curve)).dump(); },
        py::arg("curve"));
    m.def(
        "verify",
        [](const std::string& curve, int trials, int bound, std::uint64_t seed) {
            return verify_report(parse_curve(curve), VerifyOptions{trials, bound, seed}).dump();
        },
        py::arg("curve"), py::arg("trials") = 3, py::arg("bound") = 16, py::arg("seed") = kDefaultSeed);
    m.def(
        "implicitize",
        [](const std::string& curve, std::uint64_t seed, int bound) {
            return implicitize_report(parse_curve(curve), seed, bound).dump();
        },
        py::arg("curve"), py::arg("seed") = kDefaultSeed, py::arg("bound") = 16);
    m.def(
        "enumerate",
        [](const std::string& curve, int selection, long long limit, bool force, std::uint64_t seed) {
            EnumerateOptions opt;
            opt.selection = selection;
            opt.limit = limit;
            opt.force = force;
            opt.seed = seed;
            std::vector<std::string> out;
            enumerate_certificates(parse_curve(curve), opt, [&](const nlohmann::json& j) { out.push_back(j.dump()); });
            return out;
        },
        py::arg("curve"), py::arg("selection") = 1, py::arg("limit") = -1, py::arg("force") = false,
        py::arg("seed") = kDefaultSeed);
    m.def("plot", &plot, py::arg("curve"));
}
