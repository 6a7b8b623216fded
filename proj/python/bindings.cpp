#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twwcol/cli.hpp"
#include "twwcol/errors.hpp"
#include "twwcol/generate.hpp"
#include "twwcol/io.hpp"
#include "twwcol/mincol.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/threecol.hpp"

namespace py = pybind11;
using namespace twwcol;

namespace {

using PyEdge = std::pair<VertexId, VertexId>;
using PyClause = std::array<int, 3>;  // DIMACS-style signed literals

std::vector<Edge> to_edges(const std::vector<PyEdge> &list) {
    std::vector<Edge> out;
    out.reserve(list.size());
    for (auto [u, v] : list)
        out.emplace_back(u, v);
    return out;
}

std::vector<PyEdge> from_edges(const std::vector<Edge> &edges) {
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (const Edge &e : edges)
        out.emplace_back(e.u, e.v);
    return out;
}

CnfFormula formula_from(int n, const std::vector<PyClause> &clauses, bool nae) {
    std::vector<Clause> cs;
    for (const auto &c : clauses) {
        Clause out;
        for (std::size_t t = 0; t < 3; ++t)
            out[t] = Literal{c[t] < 0 ? -c[t] : c[t], c[t] > 0};
        cs.push_back(out);
    }
    return CnfFormula::make(n, std::move(cs), nae ? Dialect::NaeThreeSat : Dialect::ThreeSat);
}

std::vector<PyClause> clauses_of(const CnfFormula &f) {
    std::vector<PyClause> out;
    for (const Clause &c : f.clauses())
        out.push_back({c[0].positive ? c[0].var : -c[0].var, c[1].positive ? c[1].var : -c[1].var,
                       c[2].positive ? c[2].var : -c[2].var});
    return out;
}

PartitionSequence sequence_from(std::size_t n, const std::vector<PyEdge> &merges) {
    return sequence_from_vertex_merges(n, merges);
}

std::vector<PyEdge> steps_of(const PartitionSequence &seq) {
    std::vector<PyEdge> out;
    for (const MergeStep &s : seq.steps())
        out.emplace_back(s.a, s.b);
    return out;
}

py::dict profile_dict(const WidthProfile &p) {
    py::dict d;
    d["initial_width"] = p.initial_width;
    d["per_step_width"] = p.per_step_width;
    d["overall_width"] = p.overall_width;
    d["peak_step"] = p.peak_step();
    return d;
}

std::optional<std::vector<bool>> values_of(const std::optional<Assignment> &a) {
    if (!a)
        return std::nullopt;
    return a->values();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Twin-width contraction sequences and coloring reductions";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    py::class_<Trigraph>(m, "Trigraph")
        .def(py::init([](std::size_t n, const std::vector<PyEdge> &black, const std::vector<PyEdge> &red) {
                 return make_trigraph(n, to_edges(black), to_edges(red));
             }),
             py::arg("n"), py::arg("black") = std::vector<PyEdge>{}, py::arg("red") = std::vector<PyEdge>{})
        .def_property_readonly("n", &Trigraph::size)
        .def_property_readonly("black_edges", [](const Trigraph &g) { return from_edges(g.black_edges()); })
        .def_property_readonly("red_edges", [](const Trigraph &g) { return from_edges(g.red_edges()); })
        .def_property_readonly("roles", [](const Trigraph &g) {
            std::vector<std::string> out;
            for (const auto &r : g.roles())
                out.push_back(r.to_string());
            return out;
        })
        .def("to_text", [](const Trigraph &g) { return io::to_text(g); })
        .def_static("from_text",
                    [](const std::string &text) {
                        std::istringstream is(text);
                        return io::read_trigraph(is);
                    })
        .def("__len__", &Trigraph::size)
        .def("__eq__", [](const Trigraph &a, const Trigraph &b) { return a == b; })
        .def("__repr__", [](const Trigraph &g) {
            return "<Trigraph n=" + std::to_string(g.size()) + " black=" + std::to_string(g.black_edges().size()) +
                   " red=" + std::to_string(g.red_edges().size()) + ">";
        });

    m.def("red_degree", &red_degree, py::arg("g"), py::arg("v"));
    m.def("max_red_degree", &max_red_degree, py::arg("g"));
    m.def(
        "quotient",
        [](const Trigraph &g, std::vector<std::vector<VertexId>> parts) {
            return quotient(g, Partition::make(g.size(), std::move(parts)));
        },
        py::arg("g"), py::arg("parts"));
    m.def("redify", &redify, py::arg("g"));

    m.def(
        "replay",
        [](const Trigraph &g, const std::vector<PyEdge> &merges) {
            return profile_dict(replay(g, sequence_from(g.size(), merges)));
        },
        py::arg("g"), py::arg("merges"));
    m.def(
        "verify_d_sequence",
        [](const Trigraph &g, const std::vector<PyEdge> &merges, std::size_t d) {
            auto v = verify_d_sequence(g, sequence_from(g.size(), merges), d);
            return py::make_tuple(v.within_bound, profile_dict(v.profile));
        },
        py::arg("g"), py::arg("merges"), py::arg("d"));

    py::class_<CnfFormula>(m, "Formula")
        .def(py::init(&formula_from), py::arg("n"), py::arg("clauses"), py::arg("nae") = false)
        .def_property_readonly("n", &CnfFormula::var_count)
        .def_property_readonly("m", &CnfFormula::clause_count)
        .def_property_readonly("nae", [](const CnfFormula &f) { return f.dialect() == Dialect::NaeThreeSat; })
        .def_property_readonly("clauses", &clauses_of)
        .def("to_dimacs", [](const CnfFormula &f) { return io::to_dimacs(f); })
        .def_static(
            "from_dimacs",
            [](const std::string &text, bool nae) {
                return io::parse_dimacs_cnf(text, nae ? Dialect::NaeThreeSat : Dialect::ThreeSat);
            },
            py::arg("text"), py::arg("nae") = false)
        .def_static(
            "random",
            [](int n, int m, bool nae, std::uint64_t seed) {
                return random_formula(n, m, nae ? Dialect::NaeThreeSat : Dialect::ThreeSat, seed);
            },
            py::arg("n"), py::arg("m"), py::arg("nae") = false, py::arg("seed") = 0)
        .def("__repr__", &CnfFormula::to_string);

    m.def(
        "solve_sat", [](const CnfFormula &f) { return values_of(solve_sat(f)); }, py::arg("f"));
    m.def(
        "solve_nae", [](const CnfFormula &f) { return values_of(solve_nae(f)); }, py::arg("f"));
    m.def(
        "is_proper",
        [](const Trigraph &g, const std::vector<int> &colors, int k) { return is_proper(g, Coloring{colors, k}); },
        py::arg("g"), py::arg("colors"), py::arg("k"));
    m.def(
        "is_k_colorable",
        [](const Trigraph &g, int k, std::size_t budget) {
            auto r = is_k_colorable(g, k, budget);
            std::optional<std::vector<int>> w;
            if (r.witness)
                w = r.witness->colors;
            return py::make_tuple(r.colorable, w);
        },
        py::arg("g"), py::arg("k"), py::arg("budget") = kDefaultBudget);
    m.def(
        "chromatic_number",
        [](const Trigraph &g, std::size_t budget) {
            auto r = chromatic_number(g, budget);
            return py::make_tuple(r.chromatic_number, r.witness.colors);
        },
        py::arg("g"), py::arg("budget") = kDefaultBudget);
    m.def(
        "exact_twinwidth",
        [](const Trigraph &g, std::size_t budget) {
            auto r = exact_twinwidth(g, budget);
            return py::make_tuple(r.width, steps_of(r.witness));
        },
        py::arg("g"), py::arg("budget") = kDefaultBudget);

    py::class_<MinColInstance>(m, "MinColInstance")
        .def_readonly("formula", &MinColInstance::formula)
        .def_readonly("n", &MinColInstance::n)
        .def_readonly("m", &MinColInstance::m)
        .def_readonly("p", &MinColInstance::p)
        .def_readonly("graph", &MinColInstance::graph)
        .def_readonly("color_budget", &MinColInstance::color_budget)
        .def("a", &MinColInstance::a, py::arg("i"), py::arg("j"))
        .def("b", &MinColInstance::b, py::arg("i"), py::arg("j"))
        .def("v", &MinColInstance::v, py::arg("i"))
        .def("sequence", [](const MinColInstance &inst) { return steps_of(build_mincol_3sequence(inst)); })
        .def(
            "coloring_from_assignment",
            [](const MinColInstance &inst, const std::vector<bool> &a) {
                return mincol_coloring_from_assignment(inst, Assignment(a)).colors;
            },
            py::arg("assignment"))
        .def(
            "assignment_from_coloring",
            [](const MinColInstance &inst, const std::vector<int> &colors) {
                int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
                return mincol_assignment_from_coloring(inst, Coloring{colors, k}).values();
            },
            py::arg("colors"));
    m.def("build_mincol", &build_mincol, py::arg("f"));

    py::class_<ThreeColInstance>(m, "ThreeColInstance")
        .def_readonly("formula", &ThreeColInstance::formula)
        .def_readonly("n", &ThreeColInstance::n)
        .def_readonly("m", &ThreeColInstance::m)
        .def_readonly("graph", &ThreeColInstance::graph)
        .def_readonly("subdivisions", &ThreeColInstance::subdivisions)
        .def("triangle", &ThreeColInstance::triangle, py::arg("j"), py::arg("slot"))
        .def("x", &ThreeColInstance::x, py::arg("i"), py::arg("j"))
        .def("x_prime", &ThreeColInstance::x_prime, py::arg("i"), py::arg("j"))
        .def("z", &ThreeColInstance::z)
        .def("path", &ThreeColInstance::path, py::arg("i"))
        .def("sequence", [](const ThreeColInstance &inst) { return steps_of(build_3col_4sequence(inst)); })
        .def(
            "coloring_from_assignment",
            [](const ThreeColInstance &inst, const std::vector<bool> &a) {
                return threecol_coloring_from_assignment(inst, Assignment(a)).colors;
            },
            py::arg("assignment"))
        .def(
            "assignment_from_coloring",
            [](const ThreeColInstance &inst, const std::vector<int> &colors) {
                int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
                return threecol_assignment_from_coloring(inst, Coloring{colors, k}).values();
            },
            py::arg("colors"))
        .def("lift", &lift_to_k, py::arg("k"))
        .def(
            "lift_sequence", [](const ThreeColInstance &inst, int k) { return steps_of(lift_4sequence(inst, k)); },
            py::arg("k"));
    m.def("build_3col", &build_3col, py::arg("f"));
    m.def("subdivision_positions", &subdivision_positions, py::arg("f"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            auto r = cli::dispatch(args);
            return py::make_tuple(r.exit_code, r.help.empty() ? r.report.dump() : r.help);
        },
        py::arg("args"));
}
