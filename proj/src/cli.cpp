#include "qtoric/cli.hpp"

#include "qtoric/charmap.hpp"
#include "qtoric/charsearch.hpp"
#include "qtoric/cyclic.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/fanchk.hpp"
#include "qtoric/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qtoric {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedSolutions = 1000;
constexpr std::size_t kMaxExhaustiveFacets = 16;

Report make_report(std::string check, std::string verdict) {
    Report r;
    r.check = std::move(check);
    r.verdict = std::move(verdict);
    return r;
}

json labels(const std::vector<IndexSet>& tuples) {
    json out = json::array();
    for (const auto& t : tuples) out.push_back(tuple_label(t));
    return out;
}

json map_json(const CharacteristicMap& m) { return serialize(Document{m})["vectors"]; }

/// Polytope plus orientation, however the inputs describe them.
struct Resolved {
    std::string mode;  // "polytope", "polar" or "sphere"
    SimplePolytope polytope;
    std::optional<PolarPolytope> polar;
    std::optional<OrientationData> orientation;
    std::optional<NonOrientableCertificate> non_orientable;
};

class Session {
public:
    Session(const Inputs& inputs, const CliOptions& options) : in_(inputs), opt_(options) {}

    template <typename T>
    const T& require(const char* what) const {
        const T* p = find_payload<T>(in_.documents);
        if (!p) throw SchemaError(std::string("this subcommand needs a ") + what + " document");
        return *p;
    }
    template <typename T>
    const T* optional() const {
        return find_payload<T>(in_.documents);
    }

    const Resolved& resolved() {
        if (resolved_) return *resolved_;
        Resolved r;
        if (const auto* p = optional<SimplePolytope>()) {
            r.mode = "polytope";
            r.polytope = *p;
        } else if (optional<AngleSpec>() || optional<PointConfiguration>()) {
            r.mode = "polar";
            if (const auto* a = optional<AngleSpec>()) {
                r.polar = build_polar(caratheodory_realization(*a));
            } else {
                r.polar = build_polar(*optional<PointConfiguration>());
            }
            r.polytope = r.polar->combinatorics;
            r.orientation = vertex_orientation_tuples(*r.polar);
        } else if (const auto* k = optional<SimplicialComplex>()) {
            r.mode = "sphere";
            r.polytope = dualize(*k);
            auto o = coherent_orientation(*k);
            if (auto* data = std::get_if<OrientationData>(&o)) {
                r.orientation = std::move(*data);
            } else {
                r.non_orientable = std::get<NonOrientableCertificate>(o);
            }
        } else {
            throw SchemaError(
                "this subcommand needs a simple_polytope, angles, points or simplicial_complex document");
        }
        if (const auto* o = optional<OrientationData>()) r.orientation = *o;
        resolved_ = std::move(r);
        return *resolved_;
    }

    const SimplePolytope& polytope() { return resolved().polytope; }

    const OrientationData& orientation() {
        const Resolved& r = resolved();
        if (!r.orientation) {
            if (r.non_orientable) {
                throw ValidationError("the complex is not orientable; no sign can be defined");
            }
            throw SchemaError("this subcommand needs an orientation document");
        }
        require_compatible(r.polytope, *r.orientation);
        return *r.orientation;
    }

    std::string vertex_label(std::size_t v) { return tuple_label(polytope().vertices[v]); }

    std::string ordered_label(std::size_t v) { return tuple_label(orientation().tuples[v]); }

    const Inputs& inputs() const { return in_; }
    const CliOptions& options() const { return opt_; }

private:
    const Inputs& in_;
    const CliOptions& opt_;
    std::optional<Resolved> resolved_;
};

Report fvector_cmd(Session& s) {
    const auto& k = s.require<SimplicialComplex>("simplicial_complex");
    const FVector f = f_vector(k);
    Report r = make_report("fvector", "computed");
    r.details = {{"f_vector", f}, {"euler_characteristic", euler_characteristic(f)}};
    return r;
}

Report hvector_cmd(Session& s) {
    const auto& k = s.require<SimplicialComplex>("simplicial_complex");
    const FVector f = f_vector(k);
    const auto h = h_vector(f, f.size());
    bool symmetric = true;
    for (std::size_t i = 0; i < h.size(); ++i) symmetric = symmetric && h[i] == h[h.size() - 1 - i];
    std::int64_t sum = 0;
    for (auto x : h) sum += x;
    Report r = make_report("hvector", "computed");
    r.details = {{"f_vector", f},
                 {"h_vector", h},
                 {"dehn_sommerville_symmetric", symmetric},
                 {"h_sum_equals_facet_count", sum == static_cast<std::int64_t>(f.back())}};
    return r;
}

Report orient_cmd(Session& s) {
    const auto& k = s.require<SimplicialComplex>("simplicial_complex");
    Report r = make_report("orient", "pass");
    const auto pm = pseudomanifold_check(k);
    r.details["pseudomanifold"] = pm.passed;
    json ridges = json::array();
    for (const auto& d : pm.offending) ridges.push_back({{"ridge", tuple_label(d.ridge)}, {"facets", d.count}});
    r.details["offending_ridges"] = ridges;
    if (!pm.passed) {
        r.verdict = "fail";
        r.exit_code = exit_fail;
        return r;
    }
    auto result = coherent_orientation(k);
    if (auto* cert = std::get_if<NonOrientableCertificate>(&result)) {
        r.verdict = "fail";
        r.exit_code = exit_fail;
        r.details["orientable"] = false;
        std::vector<IndexSet> cycle;
        for (std::size_t f : cert->cycle) cycle.push_back(k.facets[f]);
        r.details["certificate"] = {{"ridge", tuple_label(cert->ridge)},
                                    {"conflict", {tuple_label(k.facets[cert->facet_a]),
                                                  tuple_label(k.facets[cert->facet_b])}},
                                    {"propagation_cycle", labels(cycle)}};
        return r;
    }
    const auto& o = std::get<OrientationData>(result);
    json parity = json::array();
    for (std::size_t f = 0; f < k.facets.size(); ++f) parity.push_back(permutation_sign(k.facets[f], o.tuples[f]));
    r.details["orientable"] = true;
    r.details["coherent"] = is_coherent(k, o);
    r.details["seed_class"] = labels(o.tuples);
    r.details["reversed_class"] = labels(o.reversed_copy().tuples);
    // +1 where the facet as listed already belongs to the seed class.
    r.details["listed_order_parity"] = parity;
    r.details["facet_count"] = k.facets.size();
    return r;
}

Report dualize_cmd(Session& s) {
    const auto& k = s.require<SimplicialComplex>("simplicial_complex");
    const SimplePolytope p = dualize(k);
    Report r = make_report("dualize", "computed");
    r.details = {{"document", serialize(Document{p})},
                 {"num_facets", p.num_facets},
                 {"num_vertices", p.vertices.size()},
                 {"num_edges", p.edges.size()}};
    return r;
}

Report cyclic_gen_cmd(Session& s) {
    const auto& a = s.require<AngleSpec>("angles");
    const auto real = caratheodory_realization(a);
    Report r = make_report("cyclic gen", "computed");
    r.details = {{"angles", serialize(Document{a})["multiples_of_pi"]},
                 {"document", serialize(Document{real.config})}};
    return r;
}

Report gale_cmd(Session& s) {
    const auto* a = s.optional<AngleSpec>();
    const std::size_t d = s.options().d.value_or(4);
    const std::size_t n = s.options().n.value_or(a ? a->size() : 7);
    const auto facets = gale_facets(n, d);
    Report r = make_report("gale", "computed");
    r.details = {{"n", n}, {"d", d}, {"facets", labels(facets)}, {"count", facets.size()}};
    if (a) {
        if (a->size() != n || d != 4) {
            throw ValidationError("the angles document has " + std::to_string(a->size()) +
                                  " points; geometric cross-check needs n = that and d = 4");
        }
        const auto real = caratheodory_realization(*a);
        const auto geometric = geometric_facets(real.config);
        std::vector<IndexSet> only_gale, only_geometric;
        std::set_difference(facets.begin(), facets.end(), geometric.begin(), geometric.end(),
                            std::back_inserter(only_gale));
        std::set_difference(geometric.begin(), geometric.end(), facets.begin(), facets.end(),
                            std::back_inserter(only_geometric));
        std::size_t subsets = 1;
        for (std::size_t i = 0; i < d; ++i) subsets = subsets * (n - i) / (i + 1);
        const bool agree = only_gale.empty() && only_geometric.empty();
        r.details["geometric_check"] = {{"subsets_checked", subsets},
                                        {"agree", agree},
                                        {"only_gale", labels(only_gale)},
                                        {"only_geometric", labels(only_geometric)}};
        r.verdict = agree ? "pass" : "fail";
        r.exit_code = agree ? exit_pass : exit_fail;
    }
    return r;
}

Report polar_cmd(Session& s) {
    PointConfiguration config;
    if (const auto* a = s.optional<AngleSpec>()) {
        config = caratheodory_realization(*a).config;
    } else {
        config = s.require<PointConfiguration>("angles or points");
    }
    Report r = make_report("polar", "pass");
    const auto origin = contains_origin_interior(config);
    r.details["origin_interior"] = origin.interior;
    if (!origin.interior) {
        r.verdict = "fail";
        r.exit_code = exit_fail;
        return r;
    }
    json weights = json::array();
    for (const auto& w : origin.weights) weights.push_back(serialize_sqrt2(w));
    r.details["origin_weights"] = weights;
    const auto* angles = s.optional<AngleSpec>();
    const PolarPolytope polar = build_polar(config, angles ? std::optional<AngleSpec>(*angles) : std::nullopt);
    json vertices = json::array();
    for (std::size_t v = 0; v < polar.vertex_coords.size(); ++v) {
        json coords = json::array();
        for (const auto& x : polar.vertex_coords[v]) coords.push_back(serialize_sqrt2(x));
        vertices.push_back({{"facets", tuple_label(polar.combinatorics.vertices[v])}, {"coords", coords}});
    }
    r.details["vertices"] = vertices;
    r.details["num_facets"] = polar.combinatorics.num_facets;
    r.details["num_vertices"] = polar.combinatorics.vertices.size();
    r.details["document"] = serialize(Document{polar.combinatorics});
    return r;
}

Report orient_tuples_cmd(Session& s) {
    std::optional<PolarPolytope> built;
    if (const auto* a = s.optional<AngleSpec>()) {
        built = build_polar(caratheodory_realization(*a));
    } else if (const auto* p = s.optional<PointConfiguration>()) {
        built = build_polar(*p);
    } else {
        throw SchemaError("orient-tuples needs an angles or points document");
    }
    const PolarPolytope& polar = *built;
    const OrientationData computed = vertex_orientation_tuples(polar);
    Report r = make_report("orient-tuples", "computed");
    json dets = json::array();
    for (const auto& t : computed.tuples) dets.push_back(serialize_sqrt2(edge_determinant(polar, t)));
    r.details["tuples"] = labels(computed.tuples);
    r.details["edge_determinants"] = dets;

    std::optional<OrientationData> reference;
    if (const auto* o = s.optional<OrientationData>()) reference = *o;
    else if (s.inputs().fixture && s.inputs().fixture->reference_orientation)
        reference = s.inputs().fixture->reference_orientation;
    if (!reference) return r;

    const auto cmp = compare_orientations(computed, *reference);
    json per_tuple = json::array();
    for (std::size_t i = 0; i < reference->tuples.size(); ++i) {
        const IndexSet& t = reference->tuples[i];
        per_tuple.push_back({{"reference", tuple_label(t)}, {"parity", cmp.parities[i] > 0 ? "even" : "odd"}});
    }
    // Is the reference list itself a coherent orientation of the dual boundary complex?
    SimplicialComplex boundary{polar.combinatorics.num_facets, {}};
    for (const auto& t : reference->tuples) {
        IndexSet sorted_t = t;
        std::sort(sorted_t.begin(), sorted_t.end());
        boundary.facets.push_back(sorted_t);
    }
    r.details["reference_comparison"] = {{"case", to_string(cmp.relation)},
                                         {"even", cmp.even},
                                         {"odd", cmp.odd},
                                         {"per_tuple", per_tuple},
                                         {"reference_is_coherent", is_coherent(boundary, *reference)}};
    const bool ok = cmp.relation != OrientationComparison::Case::inconsistent;
    r.verdict = ok ? "pass" : "fail";
    r.exit_code = ok ? exit_pass : exit_fail;
    return r;
}

Report check_unimodular_cmd(Session& s) {
    const auto& map = s.require<CharacteristicMap>("charmap");
    const auto rep = unimodularity_check(s.polytope(), map);
    Report r = make_report("check-unimodular", rep.passed ? "pass" : "fail");
    r.exit_code = rep.passed ? exit_pass : exit_fail;
    json dets = json::object();
    for (std::size_t v = 0; v < rep.determinants.size(); ++v) dets[s.vertex_label(v)] = serialize_int(rep.determinants[v]);
    json bad = json::array();
    for (const auto& o : rep.offending) bad.push_back({{"vertex", s.vertex_label(o.vertex)}, {"det", serialize_int(o.det)}});
    r.details = {{"vertices_checked", rep.determinants.size()}, {"determinants", dets}, {"offending", bad}};
    return r;
}

json signs_json(Session& s, const SignPattern& signs) {
    json out = json::object();
    for (std::size_t v = 0; v < signs.size(); ++v) out[s.ordered_label(v)] = signs[v];
    return out;
}

Report signs_cmd(Session& s) {
    const auto& map = s.require<CharacteristicMap>("charmap");
    const auto signs = sign_pattern(s.polytope(), map, s.orientation());
    const bool positive = std::all_of(signs.begin(), signs.end(), [](int x) { return x == 1; });
    Report r = make_report("signs", positive ? "pass" : "fail");
    r.exit_code = positive ? exit_pass : exit_fail;
    r.details = {{"signs", signs_json(s, signs)},
                 {"negative_count", std::count(signs.begin(), signs.end(), -1)},
                 {"orientation_mode", s.resolved().mode}};
    return r;
}

Report almost_complex_cmd(Session& s) {
    const auto& map = s.require<CharacteristicMap>("charmap");
    const auto rep = almost_complex_check(s.polytope(), map, s.orientation());
    bool verdict = rep.almost_complex;
    Report r = make_report("almost-complex", "");
    json offending = json::array();
    for (std::size_t v : rep.offending) offending.push_back(s.ordered_label(v));
    r.details = {{"almost_complex", rep.almost_complex},
                 {"signs", signs_json(s, rep.signs)},
                 {"offending", offending},
                 {"orientation_mode", s.resolved().mode}};
    if (s.resolved().mode == "sphere") {
        // A sphere carries two orientation classes and the input does not
        // single one out; reversal negates every sign.
        const bool reversed_ok = std::all_of(rep.signs.begin(), rep.signs.end(), [](int x) { return x == -1; });
        r.details["orientation_classes"] = {{"seed", rep.almost_complex}, {"reversed", reversed_ok}};
        verdict = rep.almost_complex || reversed_ok;
    }
    r.verdict = verdict ? "pass" : "fail";
    r.exit_code = verdict ? exit_pass : exit_fail;
    return r;
}

Report flip_solve_cmd(Session& s) {
    const auto& map = s.require<CharacteristicMap>("charmap");
    const SimplePolytope& p = s.polytope();
    const OrientationData& o = s.orientation();
    const Gf2System system = flip_system(p, map, o);
    const Gf2Result result = gf2_solve(system);
    Report r = make_report("flip-solve", "");
    r.details["equations"] = system.equations.size();
    r.details["variables"] = system.num_vars;
    bool feasible = false;
    if (const auto* sol = std::get_if<Gf2Solution>(&result)) {
        feasible = true;
        const FlipVector flip = flip_from_bits(sol->assignment);
        r.details["flip"] = flip;
        r.details["solution_space_dimension"] = sol->dimension;
        r.details["flipped_map"] = map_json(apply_flip(map, flip));
    } else {
        const auto& cert = std::get<Gf2Infeasible>(result);
        json vertices = json::array();
        for (std::size_t e : cert.equations) vertices.push_back(s.ordered_label(e));
        r.details["certificate"] = {{"contradictory_vertices", vertices},
                                    {"note", "the listed vertex equations sum to 0 = 1 over GF(2)"}};
    }
    r.details["feasible"] = feasible;
    if (p.num_facets <= kMaxExhaustiveFacets) {
        // Independent route: recompute every sign for all 2^m flips.
        std::size_t positive_flips = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.num_facets); ++mask) {
            FlipVector flip(p.num_facets);
            for (std::size_t i = 0; i < p.num_facets; ++i) flip[i] = (mask >> i & 1) ? -1 : 1;
            const auto signs = sign_pattern(p, apply_flip(map, flip), o);
            if (std::all_of(signs.begin(), signs.end(), [](int x) { return x == 1; })) ++positive_flips;
        }
        r.details["exhaustive_check"] = {{"flips_enumerated", std::uint64_t{1} << p.num_facets},
                                         {"all_positive_flips", positive_flips},
                                         {"agrees", (positive_flips > 0) == feasible}};
    }
    r.verdict = feasible ? "pass" : "fail";
    r.exit_code = feasible ? exit_pass : exit_fail;
    return r;
}

Report fan_check_cmd(Session& s) {
    const auto& map = s.require<CharacteristicMap>("charmap");
    const auto cones = cones_from(s.polytope(), map);
    const auto rep = fan_properness(cones, s.options().jobs);
    Report r = make_report("fan-check", rep.proper ? "pass" : "fail");
    r.exit_code = rep.proper ? exit_pass : exit_fail;
    json bad = json::array();
    for (const auto& d : rep.offending) {
        json item{{"cones", {s.vertex_label(d.first), s.vertex_label(d.second)}}};
        if (d.ridge_mismatch) {
            item["defect"] = "shared ridge with different generators";
        } else {
            json w = json::array();
            for (const auto& x : d.witness) w.push_back(serialize_int(x));
            item["defect"] = "interior overlap";
            item["witness_ray"] = w;
        }
        bad.push_back(item);
    }
    const auto sample = sample_coverage(cones, 200);
    r.details = {{"cones", cones.size()},
                 {"pairs_tested", rep.pairs_tested},
                 {"improper_pairs", bad},
                 {"improper_pair_count", rep.offending.size()},
                 {"coverage_sample_heuristic",
                  {{"directions", sample.samples},
                   {"uncovered", sample.uncovered},
                   {"covered_once", sample.covered_once},
                   {"covered_more_than_once", sample.covered_multiply},
                   {"note", "sampled integer directions; diagnostic only, completeness is not decided"}}}};
    return r;
}

Report search_cmd(Session& s) {
    const SimplePolytope& p = s.polytope();
    const OrientationData& o = s.orientation();
    SearchConfig config;
    if (const auto* c = s.optional<SearchConfig>()) config = *c;
    const CliOptions& opt = s.options();
    if (opt.bound) config.bound = *opt.bound;
    if (opt.goal) config.goal = parse_search_goal(*opt.goal);
    if (opt.base_vertex) config.base_vertex = parse_tuple_label(*opt.base_vertex);
    if (opt.node_budget) config.node_budget = *opt.node_budget;
    if (opt.solution_cap) config.solution_cap = *opt.solution_cap;
    if (opt.jobs > 1) config.jobs = opt.jobs;
    if (config.base_vertex.empty()) config.base_vertex = o.tuples.front();

    const SearchResult res = search(p, o, config);
    bool verified = true;
    for (const auto& m : res.solutions) {
        verified = verified && unimodularity_check(p, m).passed;
        if (config.goal == SearchGoal::all_positive) verified = verified && almost_complex_check(p, m, o).almost_complex;
    }
    json solutions = json::array();
    for (std::size_t i = 0; i < res.solutions.size() && i < kMaxListedSolutions; ++i) {
        solutions.push_back(map_json(res.solutions[i]));
    }
    Report r = make_report("search", res.budget_exhausted ? "fail" : "computed");
    r.exit_code = res.budget_exhausted ? exit_fail : exit_pass;
    r.details = {{"goal", to_string(config.goal)},
                 {"bound", config.bound},
                 {"base_vertex", tuple_label(config.base_vertex)},
                 {"base_vertex_positively_ordered", res.base_parity > 0},
                 {"assignment_order", tuple_label(res.assignment_order)},
                 {"candidates_per_facet", res.candidates_per_facet},
                 {"nodes", res.nodes},
                 {"exhaustive", res.exhaustive},
                 {"node_budget_exhausted", res.budget_exhausted},
                 {"solution_cap_reached", res.cap_reached},
                 {"solution_count", res.solutions.size()},
                 {"solutions", solutions},
                 {"solutions_truncated", res.solutions.size() > kMaxListedSolutions},
                 {"solutions_verified", verified},
                 {"note", "bounded search over entries in [-B, B]: evidence, not a proof"}};
    if (res.budget_exhausted) r.details["warning"] = "NODE BUDGET EXHAUSTED: the search is not exhaustive";
    return r;
}

Report fixtures_cmd(Session& s) {
    Report r = make_report("fixtures", "computed");
    if (!s.inputs().fixture) {
        r.details["available"] = fixture_names();
        return r;
    }
    const Fixture& f = *s.inputs().fixture;
    json docs = json::array();
    for (const auto& d : f.documents) docs.push_back(serialize(d));
    r.details = {{"name", f.name}, {"documents", docs}};
    if (f.reference_orientation) r.details["reference_orientation"] = serialize(Document{*f.reference_orientation});
    return r;
}

const std::map<std::string, std::function<Report(Session&)>>& handlers() {
    static const std::map<std::string, std::function<Report(Session&)>> table{
        {"fvector", fvector_cmd},
        {"hvector", hvector_cmd},
        {"orient", orient_cmd},
        {"dualize", dualize_cmd},
        {"cyclic gen", cyclic_gen_cmd},
        {"gale", gale_cmd},
        {"polar", polar_cmd},
        {"orient-tuples", orient_tuples_cmd},
        {"check-unimodular", check_unimodular_cmd},
        {"signs", signs_cmd},
        {"almost-complex", almost_complex_cmd},
        {"flip-solve", flip_solve_cmd},
        {"fan-check", fan_check_cmd},
        {"search", search_cmd},
        {"fixtures", fixtures_cmd},
    };
    return table;
}

}  // namespace

json Report::to_json() const {
    return json{{"check", check}, {"verdict", verdict}, {"details", details}, {"provenance", provenance}};
}

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

IndexSet parse_tuple_label(const std::string& text) {
    IndexSet out;
    const bool has_comma = text.find(',') != std::string::npos;
    std::stringstream ss(text);
    std::string token;
    auto push = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ValidationError("bad vertex list '" + text + "' (use 2137 or 2,1,3,7)");
        }
        const std::size_t value = std::stoul(tok);
        if (value == 0) throw ValidationError("vertex lists are 1-based");
        out.push_back(value - 1);
    };
    if (has_comma) {
        while (std::getline(ss, token, ',')) push(token);
    } else {
        for (char c : text) push(std::string(1, c));
    }
    return out;
}

Inputs load_inputs(const std::vector<std::string>& sources) {
    Inputs in;
    for (const auto& src : sources) {
        static const std::string prefix = "fixtures:";
        if (src.rfind(prefix, 0) == 0) {
            Fixture f = fixture(src.substr(prefix.size()));
            in.documents.insert(in.documents.end(), f.documents.begin(), f.documents.end());
            in.fixture = std::move(f);
            continue;
        }
        std::ifstream file(src);
        if (!file) throw ValidationError("cannot open input file '" + src + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        auto docs = parse_documents(buffer.str());
        in.documents.insert(in.documents.end(), docs.begin(), docs.end());
    }
    return in;
}

Report run_subcommand(const std::string& name, const Inputs& inputs, const CliOptions& options) {
    const auto& table = handlers();
    const auto it = table.find(name);
    std::string provenance = inputs.fixture ? "fixture " + inputs.fixture->name + ": " + inputs.fixture->provenance
                                            : "user-supplied documents";
    if (it == table.end()) {
        Report r = make_report(name, "error");
        r.details["message"] = "unknown subcommand '" + name + "'";
        r.exit_code = exit_input_error;
        r.provenance = provenance;
        return r;
    }
    Report r;
    try {
        Session session(inputs, options);
        r = it->second(session);
    } catch (const std::exception& e) {
        r = make_report(name, "error");
        r.details["message"] = e.what();
        r.exit_code = exit_input_error;
    }
    r.provenance = provenance;
    return r;
}

}  // namespace qtoric
