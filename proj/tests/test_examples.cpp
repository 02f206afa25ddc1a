#include <catch_amalgamated.hpp>

#include <cmath>

#include <chisholm/generators.hpp>
#include <chisholm/workflows.hpp>

using namespace chisholm;

namespace {

// a agrees with b to n significant digits.
bool digits(double a, double b, int n) {
    const double scale = std::pow(10.0, std::floor(std::log10(std::fabs(b))) - n + 1);
    return std::fabs(a - b) <= 0.5 * scale;
}

template <class Fit>
double at(const Fit& f, double x, double y) {
    return f(Float50(x), Float50(y)).template convert_to<double>();
}

struct Row {
    double x, y, value;
};

} // namespace

TEST_CASE("[10/10] of sin((x+y)/2) + 1 about the origin") {
    const auto f = fit_prepared(sin_half_sum(21), 10, Preprocess{parse_offset("1"), false});
    for (const Row& r : {Row{0.1, 0.1, 0.09983341665}, Row{0.1, 4.6, 0.7114733528}, Row{1.6, 4.6, 0.04158066227},
                         Row{3.1, 3.1, 0.04158066201}, Row{3.1, 4.6, -0.6506251887}, Row{4.6, 4.6, -0.9936946941}}) {
        INFO("(" << r.x << "," << r.y << ")");
        CHECK(digits(at(f, r.x, r.y), r.value, 10));
    }
}

TEST_CASE("[10/10] of Appell F2 about the origin") {
    const auto P = default_params("f2");
    const auto f = fit_prepared(appell_f2(P.at("a"), P.at("b1"), P.at("b2"), P.at("c1"), P.at("c2"), 21), 10);
    for (const Row& r : {Row{-0.2, -0.2, 0.8549285608}, Row{0.2, 0.2, 1.298900246}, Row{-0.6, -0.2, 0.7373422441},
                         Row{0.6, 0.2, -2.473368787}}) {
        INFO("(" << r.x << "," << r.y << ")");
        CHECK(digits(at(f, r.x, r.y), r.value, 10));
    }
    // Outside |x|+|y| < 1 the fit and the series part ways, with opposite signs.
    CHECK(at(f, 0.6, 0.2) < 0);
    CHECK(appell_f2_sum(0.3, 0.4, 3.0 / 17, 0.2, 1.0 / 7, 0.6, 0.2, 150).real() > 0);
}

TEST_CASE("susceptibility series after rotation") {
    const auto f = fit_prepared(ising_susceptibility(21), 10, Preprocess{parse_offset("x+y"), true});
    for (const Row& r : {Row{0.01, 0.01, 1.000050004}, Row{0.21, 0.21, 1.022807183}, Row{0.41, 0.61, 1.070943751},
                         Row{0.81, 0.81, 1.705228240}}) {
        INFO("(" << r.x << "," << r.y << ")");
        CHECK(digits(at(f, r.x, r.y), r.value, 10));
    }
}

TEST_CASE("1/(exp(z1 z2) - z2) after rotation") {
    const auto f = fit_prepared(cm2_function(21), 10, Preprocess{{}, true});
    for (const Row& r : {Row{0.1, 0.1, 1.098840521}, Row{0.1, 1.1, 61.43234252}, Row{0.4, 1.1, 2.208933189},
                         Row{1.0, 1.1, 0.5251642849}}) {
        INFO("(" << r.x << "," << r.y << ")");
        CHECK(digits(at(f, r.x, r.y), r.value, 10));
    }
}

TEST_CASE("Li22(1,1) acceleration, low orders") {
    const Preprocess pre{parse_offset("1+x+y"), true};
    const Row rows[] = {{5, 0.726068215009552, 0.690568727620971}, {6, 0.743812703465901, 0.706590246937065}};
    for (const auto& r : rows) {
        const int o = static_cast<int>(r.x);
        const auto f = fit_prepared(li22(2 * o + 1), o, pre);
        CHECK(digits(at(f, 1.0, 1.0), r.y, 15));
        CHECK(digits(li22_partial_sum(2 * o + 1).convert_to<double>(), r.value, 15));
    }
    CHECK(digits(li22_at_one().convert_to<double>(), 0.811742425283354, 15));
}

TEST_CASE("2F1 Pade at a complex point") {
    const auto P = default_params("2f1");
    const auto pa = fit_diagonal(gauss_2f1(P.at("a"), P.at("b"), P.at("c"), 20), 10);
    const Complex v = scalar_cast<Complex>(evaluate<Complex50>(pa, Complex50(Float50(0.5), -sqrt(Float50(3)) / 2)));
    CHECK(digits(v.real(), 0.7062090573, 10));
    CHECK(digits(v.imag(), -0.8072538749, 10));
}
