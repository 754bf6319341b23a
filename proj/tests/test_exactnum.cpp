#include <doctest.h>

#include "oracles.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/gf2.hpp"
#include "qtoric/lp.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/number.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace qtoric;

TEST_CASE("rationals stay in lowest terms") {
    CHECK(parse_rational("6/4") == BigRational(3, 2));
    CHECK(parse_rational("-3") == BigRational(-3));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("sqrt2 arithmetic") {
    const Sqrt2Number r2 = Sqrt2Number::root2();
    CHECK(r2 * r2 == Sqrt2Number(2));
    const Sqrt2Number x(BigRational(3), BigRational(-2));
    CHECK(x.norm() == BigRational(1));
    CHECK(x * x.inverse() == Sqrt2Number(1));
    CHECK((x / x) == Sqrt2Number(1));
    CHECK_THROWS_AS(Sqrt2Number(0).inverse(), std::domain_error);
    CHECK(sign_sqrt2(Sqrt2Number(BigRational(-1), BigRational(1))) == 1);
    CHECK(sign_sqrt2(Sqrt2Number(BigRational(3), BigRational(-2))) == 1);
    CHECK(sign_sqrt2(Sqrt2Number(BigRational(-3), BigRational(2))) == -1);
    CHECK(Sqrt2Number(BigRational(7, 5)) < r2);
    CHECK(Sqrt2Number(BigRational(3, 2)) > r2);
}

TEST_CASE("sqrt2 sign agrees with floating point away from zero") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        const int a = d(rng), b = d(rng);
        const double approx = a + b * std::sqrt(2.0);
        // |a + b sqrt2| >= 1 / (|a| + |b| sqrt2 + 1) > 3e-4 for nonzero values here.
        const int expected = (a == 0 && b == 0) ? 0 : (approx > 0 ? 1 : -1);
        CHECK(sign_sqrt2(Sqrt2Number(BigRational(a), BigRational(b))) == expected);
    }
}

TEST_CASE("field axioms on random sqrt2 numbers") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    auto draw = [&] { return Sqrt2Number(BigRational(d(rng), 1 + std::abs(d(rng))), BigRational(d(rng), 3)); };
    for (int i = 0; i < 200; ++i) {
        const auto a = draw(), b = draw(), c = draw();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * a.conjugate()).is_rational());
    }
}

TEST_CASE("integer determinants") {
    const IntMatrix m{{2, 1, 0}, {1, 1, 0}, {3, -4, 1}};
    CHECK(det_int(m) == 1);
    CHECK(det_cofactor(m) == 1);
    CHECK_THROWS_AS(det_int(IntMatrix(2, 3)), DimensionError);
    CHECK(det_int(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("Bareiss and cofactor match Leibniz on random matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix m(n, n);
            std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j) = d(rng);
            const BigInt expected = oracle::leibniz_det(rows);
            CHECK(det_int(m) == expected);
            CHECK(det_cofactor(m) == expected);
            CHECK(det_field(to_rational(m)) == BigRational(expected));
        }
    }
}

TEST_CASE("solve_linear and singular systems") {
    const RationalMatrix a{{2, 1}, {1, 3}};
    const auto x = solve_linear(a, {BigRational(3), BigRational(5)});
    CHECK(x == std::vector<BigRational>{BigRational(4, 5), BigRational(7, 5)});
    const RationalMatrix s{{1, 2}, {2, 4}};
    try {
        solve_linear(s, {BigRational(1), BigRational(1)});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank() == 1);
    }
    CHECK(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}) == 2);
}

TEST_CASE("unimodular inverse") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto rows = oracle::random_special_linear(4, rng);
        IntMatrix g(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) g(r, c) = rows[r][c];
        const IntMatrix inv = inverse_unimodular(g);
        IntMatrix id(4, 4);
        for (std::size_t k = 0; k < 4; ++k) id(k, k) = 1;
        CHECK(g * inv == id);
    }
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), UnimodularityError);
}

TEST_CASE("GF(2) solver on small systems") {
    Gf2System sys{3, {{{0, 1}, true}, {{1, 2}, false}, {{0, 2}, true}}};
    auto res = gf2_solve(sys);
    REQUIRE(std::holds_alternative<Gf2Solution>(res));
    CHECK(gf2_satisfies(sys, std::get<Gf2Solution>(res).assignment));
    CHECK(std::get<Gf2Solution>(res).dimension == 1);

    Gf2System bad{2, {{{0, 1}, true}, {{0}, false}, {{1}, false}}};
    res = gf2_solve(bad);
    REQUIRE(std::holds_alternative<Gf2Infeasible>(res));
    CHECK(std::get<Gf2Infeasible>(res).equations == std::vector<std::size_t>{0, 1, 2});

    // Repeated indices cancel.
    Gf2System cancel{1, {{{0, 0}, true}}};
    CHECK(std::holds_alternative<Gf2Infeasible>(gf2_solve(cancel)));
}

TEST_CASE("GF(2) solver agrees with exhaustive enumeration") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + rng() % 16;
        const std::size_t rows = 1 + rng() % 20;
        Gf2System sys{m, {}};
        for (std::size_t r = 0; r < rows; ++r) {
            Gf2Equation eq;
            for (std::size_t v = 0; v < m; ++v)
                if (rng() % 3 == 0) eq.support.push_back(v);
            eq.rhs = rng() % 2;
            sys.equations.push_back(eq);
        }
        const auto brute = oracle::gf2_all_solutions(sys);
        const auto res = gf2_solve(sys);
        if (brute.empty()) {
            REQUIRE(std::holds_alternative<Gf2Infeasible>(res));
            // The certificate's equations really do sum to 0 = 1.
            std::vector<int> parity(m, 0);
            bool rhs = false;
            for (std::size_t e : std::get<Gf2Infeasible>(res).equations) {
                for (std::size_t v : sys.equations[e].support) parity[v] ^= 1;
                rhs ^= sys.equations[e].rhs;
            }
            CHECK(std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; }));
            CHECK(rhs);
        } else {
            REQUIRE(std::holds_alternative<Gf2Solution>(res));
            const auto& sol = std::get<Gf2Solution>(res);
            CHECK(gf2_satisfies(sys, sol.assignment));
            CHECK((std::size_t{1} << sol.dimension) == brute.size());
        }
    }
}

namespace {

LinearEquality eq(std::vector<int> coeffs, int rhs) {
    LinearEquality e;
    for (int c : coeffs) e.coeffs.emplace_back(c);
    e.rhs = rhs;
    return e;
}

bool witness_ok(const std::vector<LinearEquality>& rows, const std::vector<BigRational>& w,
                const std::vector<std::size_t>& strict) {
    for (const auto& r : rows) {
        BigRational acc = 0;
        for (std::size_t j = 0; j < w.size(); ++j) acc += r.coeffs[j] * w[j];
        if (acc != r.rhs) return false;
    }
    for (auto s : strict)
        if (w[s] <= 0) return false;
    return true;
}

}  // namespace

TEST_CASE("strict feasibility basics") {
    const std::vector<std::size_t> both{0, 1};
    auto r = strict_feasibility(std::vector{eq({1, 1}, 1)}, 2, both);
    CHECK(r.feasible);
    CHECK(witness_ok({eq({1, 1}, 1)}, r.witness, both));
    // x + y = 0 with x, y > 0 is impossible even though x = y = 0 is feasible.
    CHECK_FALSE(strict_feasibility(std::vector{eq({1, 1}, 0)}, 2, both).feasible);
    // A free variable absorbs the sign.
    const std::vector<std::size_t> first{0};
    CHECK(strict_feasibility(std::vector{eq({1, 1}, 0)}, 2, first).feasible);
    CHECK_THROWS_AS(strict_feasibility(std::vector{eq({1}, 0)}, 2, both), DimensionError);
}

TEST_CASE("strict feasibility against constructed witnesses and Farkas certificates") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const std::size_t m = 1 + rng() % 3;
        std::vector<std::size_t> strict;
        for (std::size_t j = 0; j < n; ++j) strict.push_back(j);
        std::vector<LinearEquality> rows;
        if (trial % 2 == 0) {
            // Hidden positive point: always feasible.
            std::vector<int> x(n);
            for (auto& v : x) v = 1 + rng() % 5;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<int> c(n);
                int rhs = 0;
                for (std::size_t j = 0; j < n; ++j) rhs += (c[j] = d(rng)) * x[j];
                rows.push_back(eq(c, rhs));
            }
            const auto r = strict_feasibility(rows, n, strict);
            CHECK(r.feasible);
            CHECK(witness_ok(rows, r.witness, strict));
        } else {
            // Build row 0 so that y^T A = t >= 0 (t_0 > 0) and y^T b <= 0, with y_0 = 1.
            // Then y^T A x > 0 >= y^T b for every positive x: infeasible by Farkas.
            std::vector<int> y(m);
            for (auto& v : y) v = d(rng);
            y[0] = 1;
            std::vector<std::vector<int>> a(m, std::vector<int>(n));
            std::vector<int> b(m);
            for (std::size_t i = 1; i < m; ++i) {
                for (auto& v : a[i]) v = d(rng);
                b[i] = d(rng);
            }
            for (std::size_t j = 0; j < n; ++j) {
                a[0][j] = static_cast<int>(rng() % 3) + (j == 0 ? 1 : 0);
                for (std::size_t i = 1; i < m; ++i) a[0][j] -= y[i] * a[i][j];
            }
            b[0] = -static_cast<int>(rng() % 3);
            for (std::size_t i = 1; i < m; ++i) b[0] -= y[i] * b[i];
            for (std::size_t i = 0; i < m; ++i) rows.push_back(eq(a[i], b[i]));
            CHECK_FALSE(strict_feasibility(rows, n, strict).feasible);
        }
    }
}

TEST_CASE("strict feasibility over Q(sqrt2)") {
    using E = BasicLinearEquality<Sqrt2Number>;
    const Sqrt2Number r2 = Sqrt2Number::root2();
    // sqrt2 x - y = 0, x + y = 1 + sqrt2 has x = 1, y = sqrt2.
    std::vector<E> rows{{{r2, Sqrt2Number(-1)}, Sqrt2Number(0)}, {{Sqrt2Number(1), Sqrt2Number(1)}, Sqrt2Number(1) + r2}};
    const std::vector<std::size_t> both{0, 1};
    const auto r = strict_feasibility(rows, 2, both);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] == Sqrt2Number(1));
    CHECK(r.witness[1] == r2);
    // x - sqrt2 y = 0 and x - (3/2) y = 0 force x = y = 0.
    std::vector<E> none{{{Sqrt2Number(1), -r2}, Sqrt2Number(0)},
                        {{Sqrt2Number(1), Sqrt2Number(BigRational(-3, 2))}, Sqrt2Number(0)}};
    CHECK_FALSE(strict_feasibility(none, 2, both).feasible);
}

TEST_CASE("negating a column negates the determinant") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = d(rng);
        IntMatrix neg = m;
        const std::size_t c = rng() % 4;
        for (std::size_t i = 0; i < 4; ++i) neg(i, c) = -neg(i, c);
        CHECK(det_int(neg) == -det_int(m));
    }
}

TEST_CASE("sign is multiplicative in Q(sqrt2)") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int i = 0; i < 500; ++i) {
        const Sqrt2Number x(BigRational(d(rng)), BigRational(d(rng)));
        const Sqrt2Number y(BigRational(d(rng), 7), BigRational(d(rng)));
        CHECK(sign_sqrt2(x) * sign_sqrt2(y) == sign_sqrt2(x * y));
    }
}

TEST_CASE("solve_linear solutions substitute back exactly") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-6, 6);
    int solved = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        RationalMatrix a(n, n);
        std::vector<BigRational> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = d(rng);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = BigRational(d(rng), 1 + rng() % 3);
        }
        if (det_field(a) == 0) {
            CHECK_THROWS_AS(solve_linear(a, b), SingularMatrixError);
            continue;
        }
        CHECK(a * solve_linear(a, b) == b);
        ++solved;
    }
    CHECK(solved > 50);
}

TEST_CASE("identity and triangular systems") {
    const RationalMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::vector<BigRational> b{BigRational(3), BigRational(-1, 2), BigRational(7)};
    CHECK(solve_linear(id, b) == b);
    Gf2System tri{2, {{{0, 1}, true}, {{1}, true}}};
    const auto sol = std::get<Gf2Solution>(gf2_solve(tri));
    CHECK(sol.assignment == std::vector<bool>{false, true});
    CHECK(sol.dimension == 0);
}

TEST_CASE("strict feasibility agrees with a grid oracle in two and three variables") {
    // Grid points (i/2) for i = 1..8 in every coordinate; coefficients are small
    // integers, so feasible systems generated from a grid point are always hit.
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> d(-3, 3);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 2;
        const std::size_t m = 1 + rng() % (n - 1);
        std::vector<LinearEquality> rows;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<int> c(n);
            for (auto& x : c) x = d(rng);
            rows.push_back(eq(c, d(rng)));
        }
        if (trial % 2 == 0) {
            // Shift the right-hand sides so that a random grid point satisfies the system.
            std::vector<BigRational> p(n);
            for (auto& x : p) x = BigRational(1 + static_cast<int>(rng() % 8), 2);
            for (auto& r : rows) {
                r.rhs = 0;
                for (std::size_t j = 0; j < n; ++j) r.rhs += r.coeffs[j] * p[j];
            }
        }
        std::vector<std::size_t> strict(n);
        std::iota(strict.begin(), strict.end(), 0);
        bool grid_hit = false;
        std::vector<int> idx(n, 1);
        for (;;) {
            bool ok = true;
            for (const auto& r : rows) {
                BigRational acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += r.coeffs[j] * BigRational(idx[j], 2);
                ok = ok && acc == r.rhs;
            }
            if (ok) {
                grid_hit = true;
                break;
            }
            std::size_t k = 0;
            while (k < n && idx[k] == 8) idx[k++] = 1;
            if (k == n) break;
            ++idx[k];
        }
        const auto res = strict_feasibility(rows, n, strict);
        if (grid_hit) CHECK(res.feasible);
        if (res.feasible) {
            CHECK(witness_ok(rows, res.witness, strict));
            ++feasible_seen;
        } else {
            CHECK_FALSE(grid_hit);
            ++infeasible_seen;
        }
    }
    CHECK(feasible_seen > 100);
    CHECK(infeasible_seen > 10);
}
