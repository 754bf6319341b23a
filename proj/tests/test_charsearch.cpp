#include <doctest.h>

#include "fixture_views.hpp"
#include "oracles.hpp"
#include "qtoric/charsearch.hpp"
#include "qtoric/errors.hpp"

#include <array>
#include <set>

using namespace qtoric;
using testing_support::view;

namespace {

using Rows = std::vector<std::vector<BigInt>>;

/// Every map with base columns fixed as the search fixes them and all other
/// vectors drawn from the primitive box, filtered by the goal. No pruning.
std::set<Rows> brute_force(const testing_support::View& v, const IndexSet& base, int bound, SearchGoal goal) {
    const std::size_t n = v.polytope.dimension;
    const std::size_t m = v.polytope.num_facets;
    const std::size_t base_vertex = v.polytope.find_vertex([&] {
        IndexSet s = base;
        std::sort(s.begin(), s.end());
        return s;
    }());
    const int parity = permutation_sign(base, v.orientation.tuples[base_vertex]);
    Rows lambda(m);
    std::vector<bool> fixed(m, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<BigInt> e(n, 0);
        e[k] = (k == 0 && goal == SearchGoal::all_positive && parity < 0) ? -1 : 1;
        lambda[base[k]] = e;
        fixed[base[k]] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t f = 0; f < m; ++f)
        if (!fixed[f]) free.push_back(f);
    const auto box = oracle::primitive_box(n, bound);
    std::set<Rows> out;
    std::vector<std::size_t> choice(free.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) lambda[free[i]] = box[choice[i]];
        bool ok = true;
        for (const auto& t : v.orientation.tuples) {
            const BigInt det = oracle::column_det(lambda, t);
            ok = goal == SearchGoal::unimodular ? (det == 1 || det == -1) : det == 1;
            if (!ok) break;
        }
        if (ok) out.insert(lambda);
        std::size_t k = 0;
        while (k < choice.size() && choice[k] + 1 == box.size()) choice[k++] = 0;
        if (k == choice.size()) break;
        ++choice[k];
    }
    return out;
}

std::set<Rows> as_set(const SearchResult& r) {
    std::set<Rows> out;
    for (const auto& m : r.solutions) out.insert(Rows(m.vectors().begin(), m.vectors().end()));
    return out;
}

SearchConfig config(IndexSet base, int bound, SearchGoal goal) {
    SearchConfig c;
    c.base_vertex = std::move(base);
    c.bound = bound;
    c.goal = goal;
    return c;
}

}  // namespace

TEST_CASE("goal names") {
    CHECK(parse_search_goal("all-positive") == SearchGoal::all_positive);
    CHECK(parse_search_goal("unimodular") == SearchGoal::unimodular);
    CHECK(to_string(SearchGoal::all_positive) == "all-positive");
    CHECK_THROWS_AS(parse_search_goal("positive"), ValidationError);
}

TEST_CASE("primitive candidates") {
    const auto c = bounded_primitive_vectors(2, 1);
    CHECK(c.size() == 8);
    CHECK(c == oracle::primitive_box(2, 1));
    CHECK(bounded_primitive_vectors(4, 2) == oracle::primitive_box(4, 2));
}

TEST_CASE("normalization") {
    const auto d47 = view("d47");
    CHECK(normalize_map(d47.polytope, *d47.map, IndexSet{1, 0, 2, 6}, d47.orientation) == *d47.map);

    const auto pent = view("pentagon");
    const auto norm = normalize_map(pent.polytope, *pent.map, IndexSet{0, 1}, pent.orientation);
    CHECK(norm[0] == IntVector{1, 0});
    CHECK(norm[1] == IntVector{0, 1});
    // Independent 2x2 inverse of [[0,1],[-1,1]] (columns lambda_1, lambda_2) is [[1,-1],[1,0]].
    const IntMatrix inv{{1, -1}, {1, 0}};
    for (std::size_t i = 0; i < 5; ++i) CHECK(norm[i] == inv * (*pent.map)[i]);
    CHECK(sign_pattern(pent.polytope, norm, pent.orientation) == sign_pattern(pent.polytope, *pent.map, pent.orientation));

    const auto sq = view("square");
    CHECK_THROWS_AS(normalize_map(sq.polytope, *sq.map, IndexSet{0, 2}, sq.orientation), NormalizationError);
}

TEST_CASE("triangle search at B=1") {
    const auto tri = view("triangle");
    const auto res = search(tri.polytope, tri.orientation, config({0, 1}, 1, SearchGoal::all_positive));
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0][2] == IntVector{-1, -1});
    CHECK(res.exhaustive);
    CHECK(res.candidates_per_facet == 8);
}

TEST_CASE("search equals brute force on the triangle and square") {
    for (const auto& name : {"triangle", "square"}) {
        const auto v = view(name);
        for (auto goal : {SearchGoal::unimodular, SearchGoal::all_positive}) {
            for (const IndexSet& base : {IndexSet{0, 1}, IndexSet{1, 0}}) {
                const auto res = search(v.polytope, v.orientation, config(base, 1, goal));
                CHECK(res.exhaustive);
                CHECK(as_set(res) == brute_force(v, base, 1, goal));
            }
        }
    }
}

TEST_CASE("search equals brute force on the pentagon at B=1") {
    const auto v = view("pentagon");
    for (auto goal : {SearchGoal::unimodular, SearchGoal::all_positive}) {
        const auto res = search(v.polytope, v.orientation, config({0, 1}, 1, goal));
        CHECK(as_set(res) == brute_force(v, {0, 1}, 1, goal));
    }
}

TEST_CASE("solutions pass post-hoc verification") {
    for (const auto& name : {"triangle", "square", "pentagon"}) {
        const auto v = view(name);
        for (auto goal : {SearchGoal::unimodular, SearchGoal::all_positive}) {
            const auto res = search(v.polytope, v.orientation, config({0, 1}, 2, goal));
            for (const auto& m : res.solutions) {
                CHECK(unimodularity_check(v.polytope, m).passed);
                if (goal == SearchGoal::all_positive) CHECK(almost_complex_check(v.polytope, m, v.orientation).almost_complex);
            }
        }
    }
}

TEST_CASE("order, threads and bound monotonicity") {
    const auto v = view("pentagon");
    auto c = config({0, 1}, 2, SearchGoal::unimodular);
    const auto base = search(v.polytope, v.orientation, c);
    auto reordered = c;
    reordered.facet_order = IndexSet{4, 3, 2};
    CHECK(as_set(search(v.polytope, v.orientation, reordered)) == as_set(base));
    auto threaded = c;
    threaded.jobs = 4;
    const auto par = search(v.polytope, v.orientation, threaded);
    CHECK(par.solutions == base.solutions);
    CHECK(par.nodes == base.nodes);

    std::uint64_t previous = 0;
    for (int b = 1; b <= 3; ++b) {
        const auto r = search(v.polytope, v.orientation, config({0, 1}, b, SearchGoal::unimodular));
        CHECK(r.nodes >= previous);
        previous = r.nodes;
    }
}

TEST_CASE("D4(7) searches") {
    const auto d47 = view("d47");
    const IndexSet base{1, 0, 2, 6};
    auto uni = search(d47.polytope, d47.orientation, config(base, 1, SearchGoal::unimodular));
    CHECK(uni.exhaustive);
    CHECK(std::find(uni.solutions.begin(), uni.solutions.end(), *d47.map) != uni.solutions.end());
    for (int b : {1, 2}) {
        const auto pos = search(d47.polytope, d47.orientation, config(base, b, SearchGoal::all_positive));
        CHECK(pos.exhaustive);
        CHECK_FALSE(pos.budget_exhausted);
        CHECK(pos.solutions.empty());
        CHECK(pos.nodes > 0);
    }
}

TEST_CASE("budget and cap") {
    const auto d47 = view("d47");
    auto c = config({1, 0, 2, 6}, 1, SearchGoal::unimodular);
    c.node_budget = 100;
    const auto cut = search(d47.polytope, d47.orientation, c);
    CHECK(cut.budget_exhausted);
    CHECK_FALSE(cut.exhaustive);
    CHECK(cut.nodes <= 100);

    auto capped = config({1, 0, 2, 6}, 1, SearchGoal::unimodular);
    capped.solution_cap = 5;
    const auto five = search(d47.polytope, d47.orientation, capped);
    CHECK(five.cap_reached);
    CHECK(five.solutions.size() == 5);
    capped.jobs = 3;
    CHECK(search(d47.polytope, d47.orientation, capped).solutions == five.solutions);
}

TEST_CASE("bad configurations") {
    const auto tri = view("triangle");
    CHECK_THROWS_AS(search(tri.polytope, tri.orientation, config({0, 2, 1}, 1, SearchGoal::unimodular)), ValidationError);
    auto bad_order = config({0, 1}, 1, SearchGoal::unimodular);
    bad_order.facet_order = IndexSet{};
    CHECK_THROWS_AS(search(tri.polytope, tri.orientation, bad_order), ValidationError);
}

TEST_CASE("D4(7) at B=1 equals unpruned enumeration") {
    // Base facets 2,1,3,7 fixed to e1..e4; all 80^3 choices for facets 4,5,6
    // checked at all 14 vertices with a machine-integer Leibniz determinant.
    const auto d47 = view("d47");
    const IndexSet base{1, 0, 2, 6};
    const auto box = oracle::primitive_box(4, 1);
    std::vector<std::array<long, 4>> small;
    for (const auto& v : box) small.push_back({long(v[0]), long(v[1]), long(v[2]), long(v[3])});
    std::vector<std::array<long, 4>> lambda(7);
    for (std::size_t k = 0; k < 4; ++k) {
        lambda[base[k]] = {0, 0, 0, 0};
        lambda[base[k]][k] = 1;
    }
    std::vector<std::array<std::size_t, 4>> perms;
    std::array<std::size_t, 4> p{0, 1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto det = [&](const IndexSet& t) {
        long total = 0;
        for (const auto& q : perms) {
            long term = oracle::inversion_sign({q.begin(), q.end()});
            for (std::size_t i = 0; i < 4; ++i) term *= lambda[t[q[i]]][i];
            total += term;
        }
        return total;
    };
    std::set<Rows> unimodular, positive;
    for (const auto& a : small) {
        lambda[3] = a;
        for (const auto& b : small) {
            lambda[4] = b;
            for (const auto& c : small) {
                lambda[5] = c;
                bool uni = true, pos = true;
                for (const auto& t : d47.orientation.tuples) {
                    const long d = det(t);
                    uni = uni && (d == 1 || d == -1);
                    pos = pos && d == 1;
                    if (!uni) break;
                }
                if (!uni) continue;
                Rows rows;
                for (const auto& v : lambda) rows.push_back({v[0], v[1], v[2], v[3]});
                unimodular.insert(rows);
                if (pos) positive.insert(rows);
            }
        }
    }
    CHECK(positive.empty());
    const auto res = search(d47.polytope, d47.orientation, config(base, 1, SearchGoal::unimodular));
    CHECK(as_set(res) == unimodular);
    CHECK(res.solutions.size() == 640);
}
