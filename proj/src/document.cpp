#include "qtoric/document.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>
#include <set>

namespace qtoric {

using nlohmann::json;

namespace {

template <typename... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_fields(const json& node, const std::string& kind,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
    std::set<std::string> allowed{"kind"};
    for (const char* f : required) {
        allowed.insert(f);
        if (!node.contains(f)) throw SchemaError(kind + ": missing field '" + f + "'");
    }
    for (const char* f : optional) allowed.insert(f);
    for (const auto& [key, value] : node.items()) {
        if (!allowed.count(key)) throw SchemaError(kind + ": unknown field '" + key + "'");
    }
}

BigInt parse_int(const json& node, const std::string& field) {
    if (node.is_number_integer()) {
        return node.is_number_unsigned() ? BigInt(node.get<std::uint64_t>()) : BigInt(node.get<std::int64_t>());
    }
    if (node.is_string()) {
        const auto& s = node.get_ref<const std::string&>();
        const bool ok = !s.empty() &&
                        std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                    [](char c) { return c >= '0' && c <= '9'; }) &&
                        s != "-";
        if (ok) return BigInt(s);
    }
    throw SchemaError(field + ": expected an integer");
}

std::size_t parse_count(const json& node, const std::string& field) {
    if (!node.is_number_integer() || node.get<std::int64_t>() < 0) {
        throw SchemaError(field + ": expected a non-negative integer");
    }
    return node.get<std::size_t>();
}

/// 1-based index list to 0-based.
IndexSet parse_indices(const json& node, const std::string& field) {
    if (!node.is_array()) throw SchemaError(field + ": expected an array of indices");
    IndexSet out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const json& x = node[i];
        if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) {
            throw SchemaError(field + "[" + std::to_string(i + 1) + "]: expected a 1-based index");
        }
        out.push_back(x.get<std::size_t>() - 1);
    }
    return out;
}

std::vector<IndexSet> parse_index_lists(const json& node, const std::string& field) {
    if (!node.is_array() || node.empty()) throw SchemaError(field + ": expected a non-empty array");
    std::vector<IndexSet> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(parse_indices(node[i], field + "[" + std::to_string(i + 1) + "]"));
    }
    return out;
}

json indices_json(std::span<const std::size_t> s) {
    json out = json::array();
    for (std::size_t i : s) out.push_back(i + 1);
    return out;
}

BigRational parse_rational_node(const json& node, const std::string& field) {
    if (node.is_number_integer()) return BigRational(parse_int(node, field));
    if (node.is_string()) {
        try {
            return parse_rational(node.get<std::string>());
        } catch (const ParseError&) {
        }
    }
    throw SchemaError(field + ": expected an exact rational (integer or \"p/q\" string)");
}

}  // namespace

std::string Document::kind() const {
    return std::visit(overloaded{
                          [](const SimplicialComplex&) { return "simplicial_complex"; },
                          [](const SimplePolytope&) { return "simple_polytope"; },
                          [](const CharacteristicMap&) { return "charmap"; },
                          [](const OrientationData&) { return "orientation"; },
                          [](const AngleSpec&) { return "angles"; },
                          [](const SearchConfig&) { return "search_config"; },
                          [](const PointConfiguration&) { return "points"; },
                      },
                      payload);
}

json serialize_int(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

json serialize_sqrt2(const Sqrt2Number& value) {
    return json{{"rat", to_string(value.rational_part())}, {"sqrt2", to_string(value.sqrt2_part())}};
}

Sqrt2Number parse_sqrt2(const json& node, const std::string& field) {
    if (node.is_object()) {
        for (const auto& [key, v] : node.items()) {
            if (key != "rat" && key != "sqrt2") throw SchemaError(field + ": unknown field '" + key + "'");
        }
        if (!node.contains("rat") || !node.contains("sqrt2")) {
            throw SchemaError(field + ": Q(sqrt2) numbers need both 'rat' and 'sqrt2'");
        }
        return {parse_rational_node(node["rat"], field + ".rat"),
                parse_rational_node(node["sqrt2"], field + ".sqrt2")};
    }
    return {parse_rational_node(node, field), 0};
}

Document parse_document(const json& node) {
    if (!node.is_object()) throw SchemaError("document: expected an object");
    if (!node.contains("kind") || !node["kind"].is_string()) {
        throw SchemaError("document: missing string field 'kind'");
    }
    const std::string kind = node["kind"].get<std::string>();

    if (kind == "simplicial_complex") {
        require_fields(node, kind, {"num_vertices", "facets"});
        SimplicialComplex k{parse_count(node["num_vertices"], "num_vertices"),
                            parse_index_lists(node["facets"], "facets")};
        try {
            k.validate(false);
        } catch (const ValidationError& e) {
            throw SchemaError(std::string("facets: ") + e.what());
        }
        return {k};
    }
    if (kind == "simple_polytope") {
        require_fields(node, kind, {"dimension", "num_facets", "vertices"});
        try {
            return {make_simple_polytope(parse_count(node["dimension"], "dimension"),
                                         parse_count(node["num_facets"], "num_facets"),
                                         parse_index_lists(node["vertices"], "vertices"))};
        } catch (const ValidationError& e) {
            throw SchemaError(std::string("vertices: ") + e.what());
        }
    }
    if (kind == "charmap") {
        require_fields(node, kind, {"rank", "vectors"});
        const std::size_t rank = parse_count(node["rank"], "rank");
        const json& vectors = node["vectors"];
        if (!vectors.is_array() || vectors.empty()) throw SchemaError("vectors: expected a non-empty array");
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const std::string field = "vectors[" + std::to_string(i + 1) + "]";
            if (!vectors[i].is_array()) throw SchemaError(field + ": expected an array");
            if (vectors[i].size() != rank) {
                throw SchemaError(field + ": facet " + std::to_string(i + 1) + " has a " +
                                  std::to_string(vectors[i].size()) + "-vector, rank is " +
                                  std::to_string(rank));
            }
            IntVector v;
            for (const auto& x : vectors[i]) v.push_back(parse_int(x, field));
            out.push_back(std::move(v));
        }
        try {
            return {CharacteristicMap(rank, std::move(out))};
        } catch (const CoverageError& e) {
            throw SchemaError(std::string("vectors: ") + e.what());
        }
    }
    if (kind == "orientation") {
        require_fields(node, kind, {"tuples"}, {"reversed"});
        OrientationData o{parse_index_lists(node["tuples"], "tuples"), false};
        if (node.contains("reversed")) {
            if (!node["reversed"].is_boolean()) throw SchemaError("reversed: expected a boolean");
            o.reversed = node["reversed"].get<bool>();
        }
        return {o};
    }
    if (kind == "angles") {
        require_fields(node, kind, {"multiples_of_pi"});
        const json& list = node["multiples_of_pi"];
        if (!list.is_array() || list.empty()) throw SchemaError("multiples_of_pi: expected a non-empty array");
        std::vector<BigRational> angles;
        for (std::size_t i = 0; i < list.size(); ++i) {
            angles.push_back(parse_rational_node(list[i], "multiples_of_pi[" + std::to_string(i + 1) + "]"));
        }
        try {
            return {AngleSpec::from_multiples_of_pi(angles)};
        } catch (const ValidationError& e) {
            throw SchemaError(std::string("multiples_of_pi: ") + e.what());
        }
    }
    if (kind == "search_config") {
        require_fields(node, kind, {"bound", "goal", "base_vertex"},
                       {"facet_order", "solution_cap", "node_budget", "jobs"});
        SearchConfig c;
        const std::size_t bound = parse_count(node["bound"], "bound");
        if (bound < 1 || bound > 1000) throw SchemaError("bound: expected 1..1000");
        c.bound = static_cast<int>(bound);
        if (!node["goal"].is_string()) throw SchemaError("goal: expected a string");
        try {
            c.goal = parse_search_goal(node["goal"].get<std::string>());
        } catch (const ValidationError& e) {
            throw SchemaError(std::string("goal: ") + e.what());
        }
        c.base_vertex = parse_indices(node["base_vertex"], "base_vertex");
        if (node.contains("facet_order")) c.facet_order = parse_indices(node["facet_order"], "facet_order");
        if (node.contains("solution_cap")) c.solution_cap = parse_count(node["solution_cap"], "solution_cap");
        if (node.contains("node_budget")) c.node_budget = parse_count(node["node_budget"], "node_budget");
        if (node.contains("jobs")) c.jobs = static_cast<unsigned>(parse_count(node["jobs"], "jobs"));
        return {c};
    }
    if (kind == "points") {
        require_fields(node, kind, {"dimension", "points"});
        PointConfiguration p;
        p.dimension = parse_count(node["dimension"], "dimension");
        const json& pts = node["points"];
        if (!pts.is_array() || pts.empty()) throw SchemaError("points: expected a non-empty array");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string field = "points[" + std::to_string(i + 1) + "]";
            if (!pts[i].is_array() || pts[i].size() != p.dimension) {
                throw SchemaError(field + ": expected " + std::to_string(p.dimension) + " coordinates");
            }
            Sqrt2Vector v;
            for (const auto& x : pts[i]) v.push_back(parse_sqrt2(x, field));
            p.points.push_back(std::move(v));
        }
        return {p};
    }
    throw SchemaError("kind: unknown document kind '" + kind + "'");
}

std::vector<Document> parse_documents(const std::string& text) {
    json node;
    try {
        node = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed document at line " + std::to_string(line) + ", column " +
                         std::to_string(column));
    }
    std::vector<Document> docs;
    if (node.is_array()) {
        for (const auto& item : node) docs.push_back(parse_document(item));
    } else {
        docs.push_back(parse_document(node));
    }
    return docs;
}

json serialize(const Document& doc) {
    json out = std::visit(
        overloaded{
            [](const SimplicialComplex& k) {
                json facets = json::array();
                for (const auto& f : k.facets) facets.push_back(indices_json(f));
                return json{{"num_vertices", k.num_vertices}, {"facets", facets}};
            },
            [](const SimplePolytope& p) {
                json vertices = json::array();
                for (const auto& v : p.vertices) vertices.push_back(indices_json(v));
                return json{{"dimension", p.dimension}, {"num_facets", p.num_facets}, {"vertices", vertices}};
            },
            [](const CharacteristicMap& m) {
                json vectors = json::array();
                for (const auto& v : m.vectors()) {
                    json row = json::array();
                    for (const auto& x : v) row.push_back(serialize_int(x));
                    vectors.push_back(row);
                }
                return json{{"rank", m.rank()}, {"vectors", vectors}};
            },
            [](const OrientationData& o) {
                json tuples = json::array();
                for (const auto& t : o.tuples) tuples.push_back(indices_json(t));
                return json{{"tuples", tuples}, {"reversed", o.reversed}};
            },
            [](const AngleSpec& a) {
                json list = json::array();
                for (const auto& x : a.multiples_of_pi()) list.push_back(to_string(x));
                return json{{"multiples_of_pi", list}};
            },
            [](const SearchConfig& c) {
                json out{{"bound", c.bound},
                         {"goal", to_string(c.goal)},
                         {"base_vertex", indices_json(c.base_vertex)},
                         {"solution_cap", c.solution_cap},
                         {"node_budget", c.node_budget},
                         {"jobs", c.jobs}};
                if (c.facet_order) out["facet_order"] = indices_json(*c.facet_order);
                return out;
            },
            [](const PointConfiguration& p) {
                json pts = json::array();
                for (const auto& v : p.points) {
                    json row = json::array();
                    for (const auto& x : v) row.push_back(serialize_sqrt2(x));
                    pts.push_back(row);
                }
                return json{{"dimension", p.dimension}, {"points", pts}};
            },
        },
        doc.payload);
    out["kind"] = doc.kind();
    return out;
}

std::string to_text(const json& node) { return node.dump(2) + "\n"; }

}  // namespace qtoric
