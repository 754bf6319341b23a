#include <doctest.h>

#include "oracles.hpp"
#include "qtoric/cyclic.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/fixtures.hpp"

using namespace qtoric;

namespace {

const Sqrt2Number half_root2{BigRational(0), BigRational(1, 2)};

Sqrt2Number dot(const Sqrt2Vector& a, const Sqrt2Vector& b) {
    Sqrt2Number s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Points on (cos u, sin u, cos 2u, sin 2u) with t = tan(u/2) rational, so every
/// coordinate is rational: cos u = (1-t^2)/(1+t^2), sin u = 2t/(1+t^2).
PointConfiguration rational_trig_curve(const std::vector<BigRational>& ts) {
    PointConfiguration p{4, {}};
    for (const auto& t : ts) {
        const BigRational c = (1 - t * t) / (1 + t * t);
        const BigRational s = 2 * t / (1 + t * t);
        p.points.push_back({Sqrt2Number(c), Sqrt2Number(s), Sqrt2Number(c * c - s * s), Sqrt2Number(2 * s * c)});
    }
    return p;
}

PointConfiguration d47_points() { return caratheodory_realization(AngleSpec::from_eighth_turns({0, 1, 2, 3, 4, 5, 6})).config; }

IndexSet one_based(std::initializer_list<std::size_t> xs) {
    IndexSet out;
    for (auto x : xs) out.push_back(x - 1);
    return out;
}

}  // namespace

TEST_CASE("Caratheodory curve points") {
    CHECK(caratheodory_point(0) == Sqrt2Vector{1, 0, 1, 0});
    CHECK(caratheodory_point(4) == Sqrt2Vector{-1, 0, 1, 0});
    CHECK(caratheodory_point(1) == Sqrt2Vector{half_root2, half_root2, 0, 1});
    CHECK(caratheodory_point(BigRational(1, 4)) == caratheodory_point(1));
    CHECK_THROWS_AS(caratheodory_point(BigRational(1, 3)), FieldCoverageError);
    for (int k = 0; k < 8; ++k) {
        const auto p = caratheodory_point(k);
        CHECK(p[0] * p[0] + p[1] * p[1] == Sqrt2Number(1));
        CHECK(p[2] * p[2] + p[3] * p[3] == Sqrt2Number(1));
    }
}

TEST_CASE("angle specs") {
    CHECK_THROWS_AS(AngleSpec::from_multiples_of_pi({BigRational(0), BigRational(1, 3)}), FieldCoverageError);
    CHECK_THROWS_AS(AngleSpec::from_multiples_of_pi({BigRational(1, 2), BigRational(1, 4)}), ValidationError);
    CHECK_THROWS_AS(AngleSpec::from_multiples_of_pi({BigRational(0), BigRational(2)}), ValidationError);
    const auto a = AngleSpec::from_multiples_of_pi({BigRational(0), BigRational(1, 4), BigRational(3, 2)});
    CHECK(a.eighth_turns() == std::vector<int>{0, 1, 6});
    CHECK(a.multiples_of_pi() == std::vector<BigRational>{0, BigRational(1, 4), BigRational(3, 2)});
}

TEST_CASE("Gale evenness") {
    CHECK(gale_facets(5, 4) == oracle::subsets(5, 4));
    const auto seven = gale_facets(7, 4);
    std::vector<IndexSet> expected;
    for (const char* s : {"1234", "1237", "1245", "1256", "1267", "1347", "1457", "1567", "2345", "2356",
                          "2367", "3456", "3467", "4567"}) {
        IndexSet t;
        for (const char* c = s; *c; ++c) t.push_back(static_cast<std::size_t>(*c - '1'));
        expected.push_back(t);
    }
    CHECK(seven == expected);
    CHECK(gale_facets(6, 4).size() == 9);
    CHECK_THROWS_AS(gale_facets(4, 4), DegeneracyError);
    CHECK(satisfies_gale_evenness(one_based({1, 2, 3, 4}), 7));
    CHECK_FALSE(satisfies_gale_evenness(one_based({1, 3, 5, 7}), 7));
    for (const auto& s : oracle::subsets(5, 4)) CHECK(satisfies_gale_evenness(s, 5));
}

TEST_CASE("Gale evenness matches the counting oracle") {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = d + 1; n <= 11; ++n) {
            std::vector<IndexSet> brute;
            for (const auto& s : oracle::subsets(n, d))
                if (oracle::gale_even(s, n)) brute.push_back(s);
            CHECK(gale_facets(n, d) == brute);
        }
    }
}

TEST_CASE("geometric facets on the exact curve") {
    const auto p = d47_points();
    CHECK(verify_facets_geometric(p, one_based({1, 2, 3, 4})));
    CHECK_FALSE(verify_facets_geometric(p, one_based({1, 3, 5, 7})));
    CHECK(geometric_facets(p) == gale_facets(7, 4));
}

TEST_CASE("Gale and geometric facets agree for n = 5..12 on rational curve points") {
    for (std::size_t n = 5; n <= 12; ++n) {
        std::vector<BigRational> ts;
        // Increasing t sweeps u through (-pi, pi) in order.
        for (std::size_t i = 0; i < n; ++i) ts.emplace_back(static_cast<int>(2 * i) - static_cast<int>(n), 3);
        const auto facets = geometric_facets(rational_trig_curve(ts));
        CHECK(facets.size() == n * (n - 3) / 2);
        CHECK(facets == gale_facets(n, 4));
    }
}

TEST_CASE("Gale and geometric facets agree on every seven-angle subset of the eighth turns") {
    // Every realizable AngleSpec with k pi/4 angles and at least 5 points.
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<int> eighths;
        for (int k = 0; k < 8; ++k)
            if (mask >> k & 1u) eighths.push_back(k);
        if (eighths.size() < 5) continue;
        const auto real = caratheodory_realization(AngleSpec::from_eighth_turns(eighths));
        CHECK(geometric_facets(real.config) == gale_facets(eighths.size(), 4));
    }
}

TEST_CASE("hyperplanes") {
    PointConfiguration two{2, {{1, 0}, {0, 1}}};
    const auto h = hyperplane_through(two, IndexSet{0, 1});
    CHECK(h.normal == Sqrt2Vector{1, 1});
    CHECK(h.offset == Sqrt2Number(1));

    const auto p = d47_points();
    const auto facet = one_based({4, 5, 6, 7});
    const auto hp = hyperplane_through(p, facet);
    for (auto i : facet) CHECK(dot(hp.normal, p.points[i]) == hp.offset);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sign(dot(hp.normal, p.points[i]) - hp.offset) != 0);
    PointConfiguration flat{2, {{1, 1}, {1, 1}}};
    CHECK_THROWS_AS(hyperplane_through(flat, IndexSet{0, 1}), DegeneracyError);
}

TEST_CASE("origin interiority") {
    const auto r = contains_origin_interior(d47_points());
    CHECK(r.interior);
    // The weights really are a positive convex combination giving 0.
    Sqrt2Vector sum(4);
    Sqrt2Number total;
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(sign(r.weights[i]) > 0);
        total += r.weights[i];
        for (std::size_t c = 0; c < 4; ++c) sum[c] += r.weights[i] * d47_points().points[i][c];
    }
    CHECK(total == Sqrt2Number(1));
    CHECK(sum == Sqrt2Vector(4));

    const auto cross = *find_payload<PointConfiguration>(fixture("cross4").documents);
    CHECK(contains_origin_interior(cross).interior);
    PointConfiguration shifted{4, {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {1, -1, -1, -1}}};
    CHECK_FALSE(contains_origin_interior(shifted).interior);
    PointConfiguration flat{4, {{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}}};
    CHECK_THROWS_AS(contains_origin_interior(flat), DegeneracyError);
}

TEST_CASE("polar polytopes") {
    PointConfiguration diamond{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    const auto sq = build_polar(diamond);
    CHECK(sq.combinatorics.vertices.size() == 4);
    std::vector<Sqrt2Vector> coords = sq.vertex_coords;
    std::sort(coords.begin(), coords.end());
    CHECK(coords == std::vector<Sqrt2Vector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});

    const auto d47 = build_polar(caratheodory_realization(AngleSpec::from_eighth_turns({0, 1, 2, 3, 4, 5, 6})));
    CHECK(d47.combinatorics.num_facets == 7);
    CHECK(d47.combinatorics.vertices.size() == 14);

    const auto cube = build_polar(*find_payload<PointConfiguration>(fixture("cross4").documents));
    CHECK(cube.combinatorics.num_facets == 8);
    CHECK(cube.combinatorics.vertices.size() == 16);
    CHECK(cube.combinatorics.edges.size() == 32);

    PointConfiguration shifted{2, {{1, 0}, {2, 1}, {2, -1}}};
    CHECK_THROWS_AS(build_polar(shifted), PolarityError);
}

TEST_CASE("polar vertices meet exactly their facets") {
    for (const auto& polar : {build_polar(d47_points()), build_polar(*find_payload<PointConfiguration>(fixture("cross4").documents))}) {
        for (std::size_t v = 0; v < polar.vertex_coords.size(); ++v) {
            const auto& s = polar.combinatorics.vertices[v];
            for (std::size_t i = 0; i < polar.facet_functionals.size(); ++i) {
                const bool in = std::find(s.begin(), s.end(), i) != s.end();
                const Sqrt2Number value = dot(polar.vertex_coords[v], polar.facet_functionals[i]);
                CHECK((value == Sqrt2Number(1)) == in);
                if (!in) CHECK(value < Sqrt2Number(1));
            }
        }
    }
}

TEST_CASE("vertex orientation tuples") {
    PointConfiguration diamond{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    const auto sq = build_polar(diamond);
    const auto o = vertex_orientation_tuples(sq);
    // Facets 1, 2, 3, 4 are met counterclockwise, so each tuple is (earlier, later) in that order.
    for (std::size_t v = 0; v < 4; ++v) {
        const auto& t = o.tuples[v];
        CHECK((t[0] + 1) % 4 == t[1]);
    }

    for (const auto& polar : {build_polar(d47_points()), build_polar(*find_payload<PointConfiguration>(fixture("cross4").documents)), sq}) {
        const auto pos = vertex_orientation_tuples(polar);
        const auto neg = vertex_orientation_tuples(polar, true);
        for (std::size_t v = 0; v < pos.tuples.size(); ++v) {
            CHECK(sign(edge_determinant(polar, pos.tuples[v])) > 0);
            CHECK(sign(edge_determinant(polar, neg.tuples[v])) < 0);
            CHECK(permutation_sign(neg.tuples[v], pos.tuples[v]) == -1);
        }
    }
}

TEST_CASE("D4(7) tuples against the published list") {
    const auto f = fixture("d47");
    const auto computed = vertex_orientation_tuples(build_polar(d47_points()));
    const auto cmp = compare_orientations(computed, *f.reference_orientation);
    // Two published tuples (2145 and 1567) are odd permutations of the exact
    // result; the published list is not coherent on the boundary complex.
    CHECK(cmp.even == 12);
    CHECK(cmp.odd == 2);
    CHECK(cmp.relation == OrientationComparison::Case::inconsistent);
    SimplicialComplex boundary{7, gale_facets(7, 4)};
    OrientationData published;
    for (const auto& facet : boundary.facets) {
        for (const auto& t : f.reference_orientation->tuples) {
            IndexSet s = t;
            std::sort(s.begin(), s.end());
            if (s == facet) published.tuples.push_back(t);
        }
    }
    CHECK_FALSE(is_coherent(boundary, published));
    // The computed orientation is coherent on the same complex.
    OrientationData ours;
    for (const auto& facet : boundary.facets) ours.tuples.push_back(computed.tuples[build_polar(d47_points()).combinatorics.find_vertex(facet)]);
    CHECK(is_coherent(boundary, ours));
}
