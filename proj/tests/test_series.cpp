#include <catch_amalgamated.hpp>

#include <chisholm/generators.hpp>
#include <chisholm/series.hpp>
#include <chisholm/workflows.hpp>

using namespace chisholm;

namespace {

DoubleSeries<Rational> geometric(int degree) {
    DoubleSeries<Rational> s(degree);
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) s.set(m, n, Rational(1));
    return s;
}

DoubleSeries<Rational> exp_sum(int degree) {
    DoubleSeries<Rational> s(degree);
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) s.set(m, n, 1 / (pochhammer(Rational(1), m) * pochhammer(Rational(1), n)));
    return s;
}

// Series holding exactly the given terms, everything else up to `degree` zero.
DoubleSeries<Rational> terms(int degree, std::initializer_list<std::tuple<int, int, Rational>> ts) {
    DoubleSeries<Rational> s(degree);
    for (const auto& [m, n, c] : ts) s.set(m, n, c);
    return s;
}

} // namespace

TEST_CASE("coefficient lookup distinguishes unknown from zero") {
    CHECK(*exp_sum(3).coefficient(1, 1) == 1);
    CHECK(*geometric(3).coefficient(2, 1) == 1);
    CHECK_FALSE(geometric(3).coefficient(4, 0).has_value());
    auto s = geometric(3);
    s.forget(1, 1);
    CHECK_FALSE(s.coefficient(1, 1).has_value());
    CHECK(*terms(3, {}).coefficient(1, 1) == 0);
    CHECK_THROWS_AS(s.set(3, 1, Rational(1)), error);
}

TEST_CASE("support rule for an [M/M] fit") {
    CHECK(has_chisholm_support(exp_sum(3), 1).ok);

    for (int M = 1; M <= 4; ++M) {
        const auto check = has_chisholm_support(exp_sum(2 * M), M);
        CHECK_FALSE(check.ok);
        // The degree-(2M+1) mixed indices, and nothing else.
        REQUIRE(static_cast<int>(check.missing.size()) == 2 * M);
        for (const auto& [m, n] : check.missing) {
            CHECK(m + n == 2 * M + 1);
            CHECK(m > 0);
            CHECK(n > 0);
        }
    }

    // Extra terms are harmless; the pure top powers are not needed.
    CHECK(has_chisholm_support(exp_sum(9), 2).ok);
    auto s = exp_sum(5);
    s.forget(5, 0);
    s.forget(0, 5);
    CHECK(has_chisholm_support(s, 2).ok);
    s.forget(4, 1);
    CHECK_FALSE(has_chisholm_support(s, 2).ok);

    // Monotone in M for downward-closed supports.
    const auto t = exp_sum(7);
    for (int M = 3; M >= 1; --M) CHECK(has_chisholm_support(t, M).ok);
}

TEST_CASE("scale_to_unit_constant") {
    const auto e = exp_sum(4);
    const auto [same, one] = scale_to_unit_constant(e);
    CHECK(same == e);
    CHECK(one == 1);

    DoubleSeries<Rational> twice(4);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) twice.set(m, n, 2 * e.at(m, n));
    const auto [scaled, two] = scale_to_unit_constant(twice);
    CHECK(scaled == e);
    CHECK(two == 2);

    CHECK_THROWS_AS(scale_to_unit_constant(li22(5)), not_normalized);
    CHECK_THROWS_AS(scale_to_unit_constant(DoubleSeries<Rational>::unknown(3)), not_normalized);
}

TEST_CASE("add_polynomial") {
    const auto s = add_polynomial(li22(7), parse_offset("1+x+y"));
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(1, 0) == 1);
    CHECK(s.at(0, 1) == 1);
    CHECK(s.at(2, 1) == Rational(1, 4));

    // Rotated Legendre sum minus its constant, plus x+y, is the ising fit input.
    auto base = rotate_pm(ising_susceptibility(7));
    base.set(0, 0, Rational(0));
    const auto fit_input = add_polynomial(base, parse_offset("1+x+y"));
    CHECK(fit_input == add_polynomial(rotate_pm(ising_susceptibility(7)), parse_offset("x+y")));

    CHECK(add_polynomial(exp_sum(3), Polynomial<Rational>{}) == exp_sum(3));
    CHECK(add_polynomial(exp_sum(3), parse_offset("0")) == exp_sum(3));

    // Unknown indices become known.
    auto u = DoubleSeries<Rational>::unknown(2);
    CHECK(add_polynomial(u, parse_offset("1")).is_known(0, 0));
    CHECK_FALSE(add_polynomial(u, parse_offset("1")).is_known(1, 0));
}

TEST_CASE("parse_offset") {
    const auto p = parse_offset("2x - y/3 + x*y^2 + 1/2");
    REQUIRE(p.size() == 4);
    CHECK(evaluate_polynomial<Rational, Rational>(p, Rational(3), Rational(2)) == 6 - Rational(2, 3) + 12 + Rational(1, 2));
    CHECK_THROWS_AS(parse_offset("1+z"), parse_error);
    CHECK_THROWS_AS(parse_offset("1++x"), parse_error);
}

TEST_CASE("rotate_pm") {
    CHECK(rotate_pm(terms(3, {{1, 0, 1}})) == terms(3, {{1, 0, 1}, {0, 1, -1}}));
    CHECK(rotate_pm(terms(3, {{1, 1, 1}})) == terms(3, {{2, 0, 1}, {0, 2, -1}}));
    CHECK(rotate_pm(terms(3, {{2, 0, 1}, {0, 2, 1}})) == terms(3, {{2, 0, 2}, {0, 2, 2}}));

    for (const auto& s : {exp_sum(8), ising_susceptibility(8), cm2_function(8)}) {
        CHECK(unrotate_pm(rotate_pm(s)) == s);
        // Via composition over linear maps: x -> (z1+z2)/2, y -> (z2-z1)/2 is the same substitution.
        CHECK(rotate_pm(unrotate_pm(s)) == s);
    }
}

TEST_CASE("compose_separable") {
    const auto s = exp_sum(6);
    CHECK(compose_separable(s, SeparableMap<Rational>::identity(6), 6) == s);

    const Rational A(3, 2), B(-2, 5);
    const auto x = compose_separable(terms(3, {{1, 0, 1}}), SeparableMap<Rational>::homographic(A, B, 3), 3);
    CHECK(x == terms(3, {{1, 0, A}, {2, 0, A * B}, {3, 0, A * B * B}}));

    const auto xy = compose_separable(terms(3, {{1, 1, 1}}), SeparableMap<Rational>::homographic(1, 1, 3), 3);
    CHECK(xy == terms(3, {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}}));

    CHECK_THROWS_AS(SeparableMap<Rational>(UniSeries<Rational>(std::vector<Rational>{1, 1}), UniSeries<Rational>(std::vector<Rational>{0, 1})), error);
}

TEST_CASE("truncated_reciprocal") {
    CHECK(truncated_reciprocal(terms(4, {{0, 0, 1}}), 4) == terms(4, {{0, 0, 1}}));
    CHECK(truncated_reciprocal(terms(5, {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}), 5) == geometric(5));

    // 1/e^t = e^-t
    const auto inv = truncated_reciprocal(exp_sum(6), 6);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n) CHECK(inv.at(m, n) == ((m + n) % 2 ? -1 : 1) * exp_sum(6).at(m, n));

    CHECK(truncated_reciprocal(truncated_reciprocal(cm2_denominator(8), 8), 8) == cm2_denominator(8));
    CHECK_THROWS_AS(truncated_reciprocal(add_polynomial(exp_sum(3), parse_offset("1")), 3), not_normalized);
}

TEST_CASE("multiply") {
    const auto p = multiply(exp_sum(6), truncated_reciprocal(exp_sum(6), 6), 6);
    CHECK(p == terms(6, {{0, 0, 1}}));
}

TEST_CASE("slice_y0 and swap_xy") {
    const auto e = slice_y0(exp_sum(5));
    for (int k = 0; k <= 5; ++k) CHECK(e[k] == 1 / pochhammer(Rational(1), k));

    const auto z = slice_y0(li22(7));
    for (const auto& c : z.coeffs()) CHECK(c == 0);

    const auto sym = exp_half_sum(6);
    CHECK(slice_y0(sym) == slice_y0(swap_xy(sym)));
    CHECK(swap_xy(li22(5)) != li22(5));
    CHECK(swap_xy(swap_xy(li22(5))) == li22(5));
}

TEST_CASE("series_cast and evaluate_truncation") {
    const auto d = series_cast<double>(exp_half_sum(10));
    CHECK(d.at(1, 1) == 0.25);
    CHECK(series_cast<Rational>(d).at(2, 1) == Rational(1, 16));  // exactly representable
    CHECK(evaluate_truncation<double>(exp_half_sum(20), 0.1, 0.2) == Catch::Approx(std::exp(0.15)).epsilon(1e-14));
}
