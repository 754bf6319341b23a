#include "qtoric/charmap.hpp"
#include "qtoric/charsearch.hpp"
#include "qtoric/cli.hpp"
#include "qtoric/cyclic.hpp"
#include "qtoric/document.hpp"
#include "qtoric/fanchk.hpp"
#include "qtoric/gf2.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qtoric;

namespace {

BigInt to_big(const py::handle& value) { return BigInt(py::str(value).cast<std::string>()); }

py::object to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(py::str(value.str()));
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

nlohmann::json py_to_json(const py::handle& obj) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::vector<IntVector> to_vectors(const py::sequence& rows) {
    std::vector<IntVector> out;
    for (const auto& row : rows) {
        IntVector v;
        for (const auto& x : row.cast<py::sequence>()) v.push_back(to_big(x));
        out.push_back(std::move(v));
    }
    return out;
}

SimplePolytope polytope_from(std::size_t dimension, std::size_t num_facets, std::vector<IndexSet> vertices) {
    SimplePolytope p = make_simple_polytope(dimension, num_facets, std::move(vertices));
    p.validate();
    return p;
}

py::dict gf2(std::size_t num_vars, const std::vector<std::pair<std::vector<std::size_t>, bool>>& equations) {
    Gf2System sys{num_vars, {}};
    for (const auto& [support, rhs] : equations) sys.equations.push_back({support, rhs});
    const Gf2Result res = gf2_solve(sys);
    py::dict out;
    if (const auto* sol = std::get_if<Gf2Solution>(&res)) {
        out["feasible"] = true;
        out["assignment"] = sol->assignment;
        out["dimension"] = sol->dimension;
    } else {
        out["feasible"] = false;
        out["certificate"] = std::get<Gf2Infeasible>(res).equations;
    }
    return out;
}

py::dict orientation(std::size_t num_vertices, std::vector<IndexSet> facets) {
    const SimplicialComplex k{num_vertices, std::move(facets)};
    k.validate();
    const auto res = coherent_orientation(k);
    py::dict out;
    if (const auto* o = std::get_if<OrientationData>(&res)) {
        out["orientable"] = true;
        out["tuples"] = o->tuples;
    } else {
        const auto& c = std::get<NonOrientableCertificate>(res);
        out["orientable"] = false;
        out["ridge"] = c.ridge;
        out["cycle"] = c.cycle;
    }
    return out;
}

PolarPolytope polar_of(const std::vector<int>& eighth_turns) {
    return build_polar(caratheodory_realization(AngleSpec::from_eighth_turns(eighth_turns)));
}

py::dict polar(const std::vector<int>& eighth_turns) {
    const PolarPolytope p = polar_of(eighth_turns);
    py::dict out;
    out["num_facets"] = p.combinatorics.num_facets;
    out["vertices"] = p.combinatorics.vertices;
    out["tuples"] = vertex_orientation_tuples(p).tuples;
    return out;
}

std::vector<int> signs(std::size_t dimension, std::size_t num_facets, std::vector<IndexSet> vertices,
                       const py::sequence& vectors, std::vector<IndexSet> tuples) {
    const SimplePolytope p = polytope_from(dimension, num_facets, std::move(vertices));
    return sign_pattern(p, CharacteristicMap(dimension, to_vectors(vectors)), {std::move(tuples), false});
}

py::list search_maps(std::size_t dimension, std::size_t num_facets, std::vector<IndexSet> vertices,
                     std::vector<IndexSet> tuples, IndexSet base, int bound, const std::string& goal,
                     unsigned jobs) {
    const SimplePolytope p = polytope_from(dimension, num_facets, std::move(vertices));
    SearchConfig c;
    c.base_vertex = std::move(base);
    c.bound = bound;
    c.goal = parse_search_goal(goal);
    c.jobs = jobs;
    SearchResult res;
    {
        py::gil_scoped_release release;
        res = search(p, {std::move(tuples), false}, c);
    }
    py::list out;
    for (const auto& m : res.solutions) {
        py::list rows;
        for (const auto& v : m.vectors()) {
            py::list row;
            for (const auto& x : v) row.append(to_py(x));
            rows.append(row);
        }
        out.append(rows);
    }
    return out;
}

py::tuple run(const std::string& name, const std::vector<std::string>& sources, const py::dict& options) {
    CliOptions o;
    for (const auto& [key, value] : options) {
        const auto k = key.cast<std::string>();
        if (k == "bound") o.bound = value.cast<int>();
        else if (k == "goal") o.goal = value.cast<std::string>();
        else if (k == "base_vertex") o.base_vertex = value.cast<std::string>();
        else if (k == "jobs") o.jobs = value.cast<unsigned>();
        else if (k == "node_budget") o.node_budget = value.cast<std::uint64_t>();
        else if (k == "solution_cap") o.solution_cap = value.cast<std::size_t>();
        else if (k == "n") o.n = value.cast<std::size_t>();
        else if (k == "d") o.d = value.cast<std::size_t>();
        else throw py::key_error("unknown option '" + k + "'");
    }
    Report r;
    try {
        r = run_subcommand(name, load_inputs(sources), o);
    } catch (const std::exception& e) {
        r.check = name;
        r.verdict = "error";
        r.details["message"] = e.what();
        r.provenance = "user-supplied documents";
        r.exit_code = exit_input_error;
    }
    return py::make_tuple(json_to_py(r.to_json()), r.exit_code);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact characteristic-map, cyclic-polytope and fan checks";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("determinant", [](const py::sequence& rows) {
        const auto v = to_vectors(rows);
        IntMatrix a(v.size(), v.empty() ? 0 : v[0].size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].size() != a.cols()) throw DimensionError("ragged matrix");
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = v[i][j];
        }
        return to_py(det_int(a));
    }, py::arg("rows"), "Exact integer determinant.");

    m.def("gf2_solve", &gf2, py::arg("num_vars"), py::arg("equations"),
          "Equations are (support, rhs) pairs. Returns an assignment or the indices of a contradiction.");

    m.def("f_vector", [](std::size_t num_vertices, std::vector<IndexSet> facets) {
        const SimplicialComplex k{num_vertices, std::move(facets)};
        k.validate();
        return f_vector(k);
    }, py::arg("num_vertices"), py::arg("facets"));
    m.def("h_vector", &h_vector, py::arg("f"), py::arg("d"));
    m.def("euler_characteristic", &euler_characteristic, py::arg("f"));
    m.def("coherent_orientation", &orientation, py::arg("num_vertices"), py::arg("facets"));

    m.def("gale_facets", &gale_facets, py::arg("n"), py::arg("d"));
    m.def("origin_interior", [](const std::vector<int>& eighth_turns) {
        return contains_origin_interior(caratheodory_realization(AngleSpec::from_eighth_turns(eighth_turns)).config).interior;
    }, py::arg("eighth_turns"), "Is 0 interior to the curve points at k*pi/4?");
    m.def("cyclic_polar", &polar, py::arg("eighth_turns"),
          "Dual of the cyclic polytope on the given k*pi/4 angles, with positively ordered vertex tuples.");

    m.def("sign_pattern", &signs, py::arg("dimension"), py::arg("num_facets"), py::arg("vertices"),
          py::arg("vectors"), py::arg("tuples"));
    m.def("search", &search_maps, py::arg("dimension"), py::arg("num_facets"), py::arg("vertices"),
          py::arg("tuples"), py::arg("base"), py::arg("bound") = 1, py::arg("goal") = "unimodular",
          py::arg("jobs") = 1u);

    m.def("fixture_names", &fixture_names);
    m.def("fixture_documents", [](const std::string& name) {
        nlohmann::json docs = nlohmann::json::array();
        for (const auto& d : fixture(name).documents) docs.push_back(serialize(d));
        return json_to_py(docs);
    }, py::arg("name"), "Fixture documents in their text form (1-based indices).");
    m.def("parse_documents", [](const py::object& obj) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& d : parse_documents(py_to_json(obj).dump())) out.push_back(serialize(d));
        return json_to_py(out);
    }, py::arg("documents"), "Validates and canonicalizes documents.");

    m.def("run", &run, py::arg("subcommand"), py::arg("sources"), py::arg("options") = py::dict(),
          "Runs a CLI subcommand; returns (report, exit_code).");
    m.def("subcommand_names", &subcommand_names);
}
