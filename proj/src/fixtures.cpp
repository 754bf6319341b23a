#include "qtoric/fixtures.hpp"

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

std::vector<IndexSet> zero_based(std::initializer_list<std::initializer_list<std::size_t>> lists) {
    std::vector<IndexSet> out;
    for (const auto& l : lists) {
        IndexSet s;
        for (std::size_t i : l) s.push_back(i - 1);
        out.push_back(std::move(s));
    }
    return out;
}

CharacteristicMap int_map(std::size_t rank, std::initializer_list<std::initializer_list<int>> vectors) {
    std::vector<IntVector> out;
    for (const auto& v : vectors) {
        IntVector w;
        for (int x : v) w.emplace_back(x);
        out.push_back(std::move(w));
    }
    return CharacteristicMap(rank, std::move(out));
}

/// Polygon with facets F_1..F_m in counterclockwise order and v_i = F_i ∩ F_{i+1}.
std::pair<SimplePolytope, OrientationData> polygon(std::size_t m) {
    std::vector<IndexSet> vertices;
    OrientationData orientation;
    for (std::size_t i = 0; i < m; ++i) {
        vertices.push_back({i, (i + 1) % m});
        orientation.tuples.push_back({i, (i + 1) % m});
    }
    return {make_simple_polytope(2, m, vertices), orientation};
}

PointConfiguration rational_points(std::size_t dimension,
                                   std::initializer_list<std::initializer_list<int>> points) {
    PointConfiguration p{dimension, {}};
    for (const auto& pt : points) {
        Sqrt2Vector v;
        for (int x : pt) v.emplace_back(x);
        p.points.push_back(std::move(v));
    }
    return p;
}

Fixture make_pentagon() {
    // CP2 # CP2 # \bar{CP2} over the pentagon, facets counterclockwise.
    // lambda_1=(0,-1), lambda_2=(1,1), lambda_3=(1,2), lambda_4=(-2,-3), lambda_5=(-1,-2).
    auto [polytope, orientation] = polygon(5);
    return {"pentagon",
            "pentagon for CP2 # CP2 # -CP2; facets F1..F5 counterclockwise with v_i = F_i ∩ F_{i+1} "
            "(assumed adjacency)",
            {{polytope}, {int_map(2, {{0, -1}, {1, 1}, {1, 2}, {-2, -3}, {-1, -2}})}, {orientation}},
            std::nullopt};
}

Fixture make_triangle() {
    auto [polytope, orientation] = polygon(3);
    return {"triangle",
            "triangle with the standard CP2 vectors e1, e2, -e1-e2 (complete fan of the projective plane)",
            {{polytope}, {int_map(2, {{1, 0}, {0, 1}, {-1, -1}})}, {orientation}},
            std::nullopt};
}

Fixture make_square() {
    auto [polytope, orientation] = polygon(4);
    return {"square",
            "square as the polar of (1,0),(0,1),(-1,0),(0,-1); lambda = e1, e2, -e1, -e2",
            {{polytope},
             {int_map(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}})},
             {orientation},
             {rational_points(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}})}},
            std::nullopt};
}

Fixture make_d47() {
    // v_1..v_7 = p(0), p(pi/4), ..., p(3pi/2) on the Caratheodory curve.
    const AngleSpec angles = AngleSpec::from_eighth_turns({0, 1, 2, 3, 4, 5, 6});
    // Stably complex dicharacteristic map on D4(7).
    const CharacteristicMap lambda = int_map(4, {{0, 1, 0, 0},
                                                 {1, 0, 0, 0},
                                                 {0, 0, 1, 0},
                                                 {-1, 0, -1, -1},
                                                 {1, -1, 0, -1},
                                                 {1, -1, -1, 0},
                                                 {0, 0, 0, 1}});
    // "1234 2137 2145 1256 1267 3147 4157 1567 2345 2356 2367 3456 3467 4567",
    // listed in the order the computed vertices come out (lexicographic facet sets).
    OrientationData published{zero_based({{1, 2, 3, 4},
                                          {2, 1, 3, 7},
                                          {2, 1, 4, 5},
                                          {1, 2, 5, 6},
                                          {1, 2, 6, 7},
                                          {3, 1, 4, 7},
                                          {4, 1, 5, 7},
                                          {1, 5, 6, 7},
                                          {2, 3, 4, 5},
                                          {2, 3, 5, 6},
                                          {2, 3, 6, 7},
                                          {3, 4, 5, 6},
                                          {3, 4, 6, 7},
                                          {4, 5, 6, 7}}),
                              false};
    return {"d47",
            "D4(7) polar to C4(7) on angles 0, pi/4, ..., 3pi/2; stably complex lambda",
            {{angles}, {lambda}},
            published};
}

Fixture make_barnette() {
    // The Barnette sphere, [x1,x3,x5,x7] listed last as "the base".
    SimplicialComplex sphere{8, zero_based({{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}, {1, 2, 4, 7},
                                            {1, 3, 4, 7}, {3, 4, 6, 7}, {3, 5, 6, 7}, {1, 2, 5, 7},
                                            {2, 5, 6, 7}, {2, 4, 6, 7}, {1, 2, 3, 8}, {2, 3, 4, 8},
                                            {3, 4, 5, 8}, {4, 5, 6, 8}, {1, 2, 6, 8}, {1, 5, 6, 8},
                                            {1, 3, 5, 8}, {2, 4, 6, 8}, {1, 3, 5, 7}})};
    const CharacteristicMap lambda = int_map(4, {{1, 0, 0, 0},
                                                 {0, 1, -1, 2},
                                                 {0, 1, 0, 0},
                                                 {0, 0, 1, -1},
                                                 {0, 0, 1, 0},
                                                 {1, -1, 0, -1},
                                                 {0, 0, 0, 1},
                                                 {1, 0, 0, -1}});
    return {"barnette",
            "Barnette sphere (19 tetrahedra on 8 vertices) with its characteristic map",
            {{sphere}, {lambda}},
            std::nullopt};
}

Fixture make_rp2() {
    SimplicialComplex rp2{6, zero_based({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}})};
    return {"rp2_6", "six-vertex triangulation of the real projective plane (non-orientable)",
            {{rp2}}, std::nullopt};
}

Fixture make_cross4() {
    // Vertex 2i-1 is +e_i and vertex 2i is -e_i.
    PointConfiguration points{4, {}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (int s : {1, -1}) {
            Sqrt2Vector v(4, Sqrt2Number(0));
            v[i] = s;
            points.points.push_back(std::move(v));
        }
    }
    return {"cross4", "boundary of the 4-dimensional cross-polytope (polar: the 4-cube)",
            {{cross_polytope_boundary(4)}, {points}}, std::nullopt};
}

Fixture make_simplex4() {
    return {"simplex4", "boundary of the 4-simplex", {{simplex_boundary(4)}}, std::nullopt};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"pentagon", "triangle", "square", "d47",
                                                "barnette", "rp2_6",    "cross4", "simplex4"};
    return names;
}

Fixture fixture(const std::string& name) {
    if (name == "pentagon") return make_pentagon();
    if (name == "triangle") return make_triangle();
    if (name == "square") return make_square();
    if (name == "d47") return make_d47();
    if (name == "barnette") return make_barnette();
    if (name == "rp2_6") return make_rp2();
    if (name == "cross4") return make_cross4();
    if (name == "simplex4") return make_simplex4();
    throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace qtoric
