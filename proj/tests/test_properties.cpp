#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include <chisholm/chisholm.hpp>
#include <chisholm/generators.hpp>
#include <chisholm/workflows.hpp>

using namespace chisholm;

namespace {

Polynomial<Rational> one() { return {{0, 0, Rational(1)}}; }

bool symmetric(const Grid<Rational>& g) {
    for (int p = 0; p <= g.order(); ++p)
        for (int q = 0; q <= g.order(); ++q)
            if (g(p, q) != g(q, p)) return false;
    return true;
}

DoubleSeries<Rational> f1(int degree) {
    return appell_f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7), degree);
}

} // namespace

TEST_CASE("symmetric series give symmetric grids") {
    for (int M = 1; M <= 5; ++M) {
        const int D = 2 * M + 1;
        for (const auto& s : {exp_half_sum(D), add_polynomial(sin_half_sum(D), one()),
                              appell_f1(Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 7), D)}) {
            const auto ca = fit_diagonal(s, M).first;
            CHECK(symmetric(ca.num));
            CHECK(symmetric(ca.den));
        }
    }
}

TEST_CASE("swapping x and y transposes the grids") {
    for (int M = 1; M <= 4; ++M) {
        const auto s = f1(2 * M + 1);
        const auto a = fit_diagonal(s, M).first, b = fit_diagonal(swap_xy(s), M).first;
        for (int p = 0; p <= M; ++p)
            for (int q = 0; q <= M; ++q) {
                CHECK(a.num(p, q) == b.num(q, p));
                CHECK(a.den(p, q) == b.den(q, p));
            }
    }
}

TEST_CASE("exact fits leave zero Taylor residuals") {
    for (int M = 1; M <= 5; ++M) {
        const auto s = f1(2 * M + 1);
        const auto r = taylor_residuals(fit_diagonal(s, M).first, s);
        CHECK(r.all_zero());
        CHECK(static_cast<int>(r.symmetrized.size()) == M);
    }
}

TEST_CASE("the solution does not depend on row order") {
    std::mt19937 rng(7);
    for (int M = 1; M <= 4; ++M) {
        const auto dsys = assemble_denominator_system(f1(2 * M + 1), M);
        const auto base = solve(dsys.system);
        std::vector<std::size_t> perm(dsys.system.size());
        for (int trial = 0; trial < 4; ++trial) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(solve(dsys.system.permuted(perm)) == base);
        }
    }
}

TEST_CASE("fit of the reciprocal series is the reciprocal fit") {
    for (int M = 1; M <= 3; ++M) {
        const int D = 2 * M + 1;
        for (const auto& s : {exp_half_sum(D), f1(D)})
            CHECK(fit_diagonal(truncated_reciprocal(s, D), M).first == reciprocal(fit_diagonal(s, M).first));
    }
}

TEST_CASE("invariance under x = A u/(1 - B u), y = A v/(1 - B v)") {
    const std::pair<Rational, Rational> maps[] = {{2, 1}, {1, -1}};
    for (const auto& [A, B] : maps)
        for (int M = 1; M <= 2; ++M) {
            const int D = 2 * M + 1;
            const auto base = f1(D);
            const auto moved = compose_separable(base, SeparableMap<Rational>::homographic(A, B, D), D);
            const auto fu = fit_diagonal(moved, M).first;
            const auto fx = fit_diagonal(base, M).first;
            for (const auto& [u, v] : {std::pair{Rational(1, 3), Rational(1, 5)}, std::pair{Rational(-1, 2), Rational(2, 7)}}) {
                const Rational x = A * u / (1 - B * u), y = A * v / (1 - B * v);
                CHECK(evaluate<Rational>(fu, u, v) == evaluate<Rational>(fx, x, y));
            }
        }
}

TEST_CASE("equation counts") {
    for (int M = 1; M <= 6; ++M) {
        const auto s = exp_half_sum(2 * M + 1);
        const auto dsys = assemble_denominator_system(s, M);
        CHECK(static_cast<int>(dsys.system.size()) == (M + 1) * (M + 1) - 1);
        CHECK(static_cast<int>(dsys.unknowns.size()) == (M + 1) * (M + 1) - 1);
        const auto sym = std::count_if(dsys.rows.begin(), dsys.rows.end(),
                                       [](const EquationLabel& r) { return r.kind == EquationLabel::Kind::symmetrized; });
        CHECK(sym == M);
        const auto report = fit_diagonal(s, M).second;
        CHECK(report.equations_total == 2 * M * M + 4 * M);
        CHECK(report.equations_symmetrized == M);
    }
}

TEST_CASE("fit_scaled: scaling the series scales only the numerator") {
    for (int M = 1; M <= 3; ++M) {
        const auto s = f1(2 * M + 1);
        auto t = s;
        for (int p = 0; p <= s.degree(); ++p)
            for (int q = 0; p + q <= s.degree(); ++q) t.set(p, q, 5 * s.at(p, q));
        const auto a = fit_diagonal(s, M).first, b = fit_scaled(t, M).first;
        CHECK_THROWS_AS(fit_diagonal(t, M), not_normalized);
        CHECK(a.den == b.den);
        for (int p = 0; p <= M; ++p)
            for (int q = 0; q <= M; ++q) CHECK(b.num(p, q) == 5 * a.num(p, q));
    }
}

TEST_CASE("round trips") {
    const auto s = f1(7);
    CHECK(unrotate_pm(rotate_pm(s)) == s);
    CHECK(swap_xy(swap_xy(s)) == s);
    CHECK(truncated_reciprocal(truncated_reciprocal(s, 7), 7) == s);
    const auto ca = fit_diagonal(s, 3).first;
    CHECK(reciprocal(reciprocal(ca)) == ca);
    CHECK(compose_separable(s, SeparableMap<Rational>::identity(7), 7) == s);
}
