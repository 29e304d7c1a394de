#include "leibxmod/commands.hpp"
#include "leibxmod/homology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace leibxmod;

namespace {

std::vector<std::vector<std::string>> rows(const Matrix& m)
{
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r].push_back(to_string(m(r, c)));
    return out;
}

std::vector<py::dict> violations(const ValidityReport& r)
{
    std::vector<py::dict> out;
    for (const auto& v : r.violations()) {
        std::vector<std::string> residual;
        for (const auto& x : v.residual)
            residual.push_back(to_string(x));
        out.push_back(py::dict(py::arg("condition") = v.condition, py::arg("where") = v.where,
                               py::arg("residual") = residual));
    }
    return out;
}

io::Json load(const std::string& path, const char* kind)
{
    io::Json doc = io::read_document(path);
    if (io::kind_of(doc) != kind)
        throw io::FixtureError(path + " is not a " + kind + " file");
    return doc;
}

io::Workspace workspace_of(const std::string& path)
{
    auto dir = std::filesystem::path(path).parent_path();
    return io::Workspace(dir.empty() ? std::filesystem::path(".") : dir);
}

}  // namespace

PYBIND11_MODULE(_leibxmod, m)
{
    m.doc() = "Leibniz crossed modules over the rationals";

    py::register_exception<io::FixtureError>(m, "FixtureError", PyExc_ValueError);

    py::class_<LeibnizAlgebra>(m, "Algebra")
        .def_property_readonly("name", &LeibnizAlgebra::name)
        .def_property_readonly("dim", &LeibnizAlgebra::dim)
        .def_property_readonly("basis", &LeibnizAlgebra::basis_names)
        .def("bracket",
             [](const LeibnizAlgebra& a, std::size_t i, std::size_t j) {
                 std::vector<std::string> out;
                 for (const auto& x : a.bracket_basis(i, j))
                     out.push_back(to_string(x));
                 return out;
             })
        .def("violations", [](const LeibnizAlgebra& a) { return violations(check_leibniz(a)); })
        .def("is_lie", [](const LeibnizAlgebra& a) { return is_lie(a); })
        .def("hl", [](const LeibnizAlgebra& a, std::size_t n) { return hl(a, n); })
        .def("to_json", [](const LeibnizAlgebra& a) { return io::dump(io::to_json(a)); });

    py::class_<CrossedModule>(m, "CrossedModule")
        .def_readonly("name", &CrossedModule::name)
        .def_readonly("top", &CrossedModule::top)
        .def_readonly("base", &CrossedModule::base)
        .def_property_readonly("delta", [](const CrossedModule& xm) { return rows(xm.delta); })
        .def("violations", [](const CrossedModule& xm) { return violations(check_xmod(xm)); })
        .def("multiplier",
             [](const CrossedModule& xm) {
                 auto mu = schur_multiplier(xm);
                 return py::make_tuple(mu.xmod().top.dim(), mu.xmod().base.dim(), rank(mu.xmod().delta));
             })
        .def("exterior",
             [](const CrossedModule& xm) {
                 CrossedModule out = exterior_square_data(xm).xmod;
                 out.name = "ext(" + xm.name + ")";
                 return out;
             })
        .def("liezation", [](const CrossedModule& xm) { return liezation(xm).xmod; })
        .def("is_perfect", [](const CrossedModule& xm) { return predicates(xm).perfect; })
        .def("to_json", [](const CrossedModule& xm) { return io::dump(io::to_json(xm)); });

    py::class_<Extension>(m, "Extension")
        .def_readonly("total", &Extension::total)
        .def_readonly("quotient", &Extension::quotient)
        .def_property_readonly("kernel_dims",
                               [](const Extension& e) {
                                   return py::make_tuple(e.kernel.top.dim(), e.kernel.base.dim());
                               })
        .def("classify",
             [](const Extension& e) {
                 auto c = classify(e);
                 return py::dict(py::arg("central") = c.central, py::arg("stem_extension") = c.stem_extension,
                                 py::arg("stem_cover") = c.stem_cover);
             })
        .def(
            "theta_star",
            [](const Extension& e, bool perturbed) {
                auto t = theta_star(e, perturbed ? SectionPolicy::perturbed : SectionPolicy::canonical);
                return py::make_tuple(rows(t.hom.top_map), rows(t.hom.base_map));
            },
            py::arg("perturbed") = false)
        .def("crosscheck",
             [](const Extension& e) {
                 auto p = stem_criteria(e);
                 return py::dict(py::arg("kernel_in_derived") = p.kernel_in_derived,
                                 py::arg("theta_surjective") = p.theta_surjective,
                                 py::arg("kernel_dies_in_abelianization") = p.kernel_dies_in_abelianization,
                                 py::arg("abelianizations_isomorphic") = p.abelianizations_isomorphic,
                                 py::arg("theta_bijective") = p.theta_bijective,
                                 py::arg("multiplier_map_zero") = p.multiplier_map_zero,
                                 py::arg("cover") = p.cover);
             })
        .def("six_term", [](const Extension& e) {
            auto r = six_term_report(e);
            std::vector<py::tuple> nodes;
            for (const auto& n : r.nodes)
                nodes.push_back(py::make_tuple(n.name, n.top, n.base));
            std::vector<bool> exact;
            for (const auto& c : r.checks)
                exact.push_back(c.exact);
            return py::dict(py::arg("nodes") = nodes, py::arg("exact") = exact,
                            py::arg("surjective_at_end") = r.surjective_at_end);
        });

    m.def("load_algebra", [](const std::string& path) {
        auto ws = workspace_of(path);
        return ws.algebra(load(path, "algebra"));
    });
    m.def("load_xmod", [](const std::string& path) {
        auto ws = workspace_of(path);
        return ws.xmod(load(path, "xmod"));
    });
    m.def("load_extension", [](const std::string& path) {
        auto ws = workspace_of(path);
        auto f = ws.extension(load(path, "extension"));
        return make_extension(f.total, f.quotient, f.top_map, f.base_map);
    });
    m.def("identity_xmod", &identity_xmod);
    m.def("zero_top_xmod", &zero_top_xmod);
    m.def("stem_cover_of_perfect", &stem_cover_of_perfect);
    m.def(
        "run",
        [](const std::string& command, const std::string& path, std::size_t degree) {
            auto r = io::run_command(command, path, degree);
            return py::make_tuple(static_cast<int>(r.status), r.text, io::dump(r.json));
        },
        py::arg("command"), py::arg("path"), py::arg("degree") = 2);
}
