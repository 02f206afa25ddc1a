#include <catch_amalgamated.hpp>

#include <chisholm/generators.hpp>
#include <chisholm/pade.hpp>
#include <chisholm/series.hpp>

using namespace chisholm;

namespace {

UniSeries<Rational> exp_uni(int degree) {
    UniSeries<Rational> s(degree);
    for (int k = 0; k <= degree; ++k) s[k] = 1 / pochhammer(Rational(1), k);
    return s;
}

UniSeries<Rational> geometric_uni(int degree) {
    UniSeries<Rational> s(degree);
    for (int k = 0; k <= degree; ++k) s[k] = 1;
    return s;
}

// Taylor coefficients of P/Q through `degree`.
std::vector<Rational> expand(const PadeApproximant<Rational>& pa, int degree) {
    std::vector<Rational> out(static_cast<std::size_t>(degree) + 1);
    auto at = [](const std::vector<Rational>& v, int k) { return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : Rational(0); };
    for (int k = 0; k <= degree; ++k) {
        Rational acc = at(pa.p, k);
        for (int j = 1; j <= k; ++j) acc -= at(pa.q, j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

} // namespace

TEST_CASE("[1/1] of exp is (1 + x/2)/(1 - x/2)") {
    const auto pa = fit_diagonal(exp_uni(2), 1);
    CHECK(pa.p == std::vector<Rational>{1, Rational(1, 2)});
    CHECK(pa.q == std::vector<Rational>{1, Rational(-1, 2)});
    CHECK(evaluate<Rational>(pa, Rational(0)) == 1);
    CHECK(evaluate<Rational>(pa, Rational(1)) == 3);
    CHECK_THROWS_AS(evaluate<Rational>(pa, Rational(2)), pole_hit);
    CHECK_THROWS_AS(evaluate<double>(pa, 2.0), pole_hit);
}

TEST_CASE("constant and geometric series") {
    UniSeries<Rational> one(8);
    one[0] = 1;
    for (int M = 0; M <= 4; ++M) {
        const auto pa = fit_diagonal(one, M);
        for (int k = 0; k <= M; ++k) {
            CHECK(pa.p[static_cast<std::size_t>(k)] == (k == 0 ? 1 : 0));
            CHECK(pa.q[static_cast<std::size_t>(k)] == (k == 0 ? 1 : 0));
        }
    }
    const auto g = fit_diagonal(geometric_uni(2), 1);
    CHECK(g.p == std::vector<Rational>{1, 0});
    CHECK(g.q == std::vector<Rational>{1, -1});
}

TEST_CASE("Taylor expansion of the fit matches through order 2M") {
    const auto f = gauss_2f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), 20);
    for (int M = 1; M <= 10; ++M) {
        const auto pa = fit_diagonal(f, M);
        CHECK(pa.q[0] == 1);
        const auto e = expand(pa, 2 * M);
        for (int k = 0; k <= 2 * M; ++k) CHECK(e[static_cast<std::size_t>(k)] == f[k]);
    }
}

TEST_CASE("a_0 is restored on the numerator") {
    UniSeries<Rational> s(4);
    for (int k = 0; k <= 4; ++k) s[k] = 3 / pochhammer(Rational(1), k);
    const auto pa = fit_diagonal(s, 2);
    CHECK(pa.p[0] == 3);
    CHECK(pa.q == fit_diagonal(exp_uni(4), 2).q);
}

TEST_CASE("reciprocal series swaps p and q") {
    const auto s = exp_uni(8);
    UniSeries<Rational> inv(8);
    for (int k = 0; k <= 8; ++k) inv[k] = (k % 2 ? -1 : 1) * s[k];
    for (int M = 1; M <= 4; ++M) {
        const auto a = fit_diagonal(s, M), b = fit_diagonal(inv, M);
        CHECK(a.p == b.q);
        CHECK(a.q == b.p);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(fit_diagonal(exp_uni(3), 2), insufficient_terms);
    try {
        fit_diagonal(exp_uni(3), 2);
    } catch (const insufficient_terms& e) {
        CHECK(e.missing().size() == 1);
    }
    UniSeries<Rational> zero(4);
    zero[1] = 1;
    CHECK_THROWS_AS(fit_diagonal(zero, 1), not_normalized);
    // 1 + x^2: the [1/1] system 0 = a_2 + a_1 q_1 has no solution.
    UniSeries<Rational> even(2);
    even[0] = 1;
    even[2] = 1;
    CHECK_THROWS_AS(fit_diagonal(even, 1), singular_system);
}

TEST_CASE("2F1 at (1 - i sqrt 3)/2") {
    const auto pa = fit_diagonal(gauss_2f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), 20), 10);
    const Complex50 z(Float50(0.5), -sqrt(Float50(3)) / 2);
    const Complex v = scalar_cast<Complex>(evaluate<Complex50>(pa, z));
    CHECK(v.real() == Catch::Approx(0.7062090573).epsilon(1e-9));
    CHECK(v.imag() == Catch::Approx(-0.8072538749).epsilon(1e-9));

    // Same from the float backend.
    const auto pf = fit_diagonal(series_cast<double>(gauss_2f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), 20)), 10);
    const Complex w = evaluate<Complex>(pf, Complex(0.5, -std::sqrt(3.0) / 2));
    CHECK(std::abs(w - v) < 1e-6);
}

TEST_CASE("centered evaluation uses z - a") {
    auto s = exp_uni(6);
    const UniSeries<Rational> shifted(s.coeffs(), Rational(2));
    const auto pa = fit_diagonal(shifted, 2);
    CHECK(pa.center == 2);
    CHECK(evaluate<Rational>(pa, Rational(2)) == 1);
    CHECK(evaluate<Rational>(pa, Rational(3)) == evaluate<Rational>(fit_diagonal(s, 2), Rational(1)));
}

TEST_CASE("approximant_cast") {
    const auto pa = fit_diagonal(exp_uni(4), 2);
    const auto pd = approximant_cast<double>(pa);
    CHECK(evaluate<double>(pd, 0.5) == Catch::Approx(evaluate<Rational>(pa, Rational(1, 2)).convert_to<double>()));
}
