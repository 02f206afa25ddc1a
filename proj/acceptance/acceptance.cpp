// One PASS/FAIL line per acceptance criterion. Tolerances are fixed here and
// quoted in each line. Exit status is nonzero when a criterion fails that is
// not listed in `known_deviations` (each of those is explained in README.md).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <chisholm/chisholm.hpp>
#include <chisholm/generators.hpp>
#include <chisholm/linalg.hpp>
#include <chisholm/pade.hpp>
#include <chisholm/series.hpp>
#include <chisholm/workflows.hpp>

using namespace chisholm;

namespace {

// The [10/10] origin table of exp((x+y)/2) is reproduced by [8/8], not [10/10].
const std::set<int> known_deviations = {4};

int unexpected_failures = 0;
int failures = 0;

void verdict(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!detail.empty()) std::printf("    %s\n", detail.c_str());
    if (!pass) {
        ++failures;
        if (!known_deviations.count(id)) ++unexpected_failures;
    }
    std::fflush(stdout);
}

// a and b agree to n significant digits: |a - b| <= half a unit in the n-th
// significant digit of b.
bool digits_match(double a, double b, int n) {
    if (b == 0) return a == 0;
    const double unit = std::pow(10.0, std::floor(std::log10(std::fabs(b))) - n + 1);
    return std::fabs(a - b) <= 0.5 * unit;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string num(double v) { return fmt("%.12g", v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double percent_error(const Float50& ca, const Float50& ref) { return Float50(100 * abs(ca - ref) / abs(ref)).convert_to<double>(); }

Polynomial<Rational> poly(const std::string& text) { return parse_offset(text); }

// exp(x+y): c_mn = 1/(m! n!).
DoubleSeries<Rational> exp_sum(int degree) {
    DoubleSeries<Rational> s(degree);
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) s.set(m, n, 1 / (pochhammer(Rational(1), m) * pochhammer(Rational(1), n)));
    return s;
}

Grid<Rational> grid(const std::vector<std::vector<Rational>>& rows) {
    Grid<Rational> g(static_cast<int>(rows.size()) - 1);
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = 0; q < rows.size(); ++q) g(static_cast<int>(p), static_cast<int>(q)) = rows[p][q];
    return g;
}

void criteria_1_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [ca, report] = fit_diagonal(exp_sum(3), 1);
    const double t = seconds_since(t0);
    const Rational h(1, 2), f(1, 4);
    const bool num_ok = ca.num == grid({{1, h}, {h, f}});
    const bool den_ok = ca.den == grid({{1, -h}, {-h, f}});
    verdict(1, num_ok && den_ok && t < 1.0, "exact [1/1] of exp(x+y): (1 + x/2 + y/2 + xy/4)/(1 - x/2 - y/2 + xy/4)",
            std::string("numerator ") + (num_ok ? "exact" : "WRONG") + ", denominator " + (den_ok ? "exact" : "WRONG") +
                ", " + fmt("%.3f s (limit 1 s)", t));

    const auto pa = reduce_to_pade(ca);
    const bool pade_ok = pa.p == std::vector<Rational>{1, h} && pa.q == std::vector<Rational>{1, -h};
    verdict(2, pade_ok, "y = 0 reduction is the [1/1] Pade (1 + x/2)/(1 - x/2), exactly",
            "p = (" + to_string(pa.p[0]) + ", " + to_string(pa.p[1]) + "), q = (" + to_string(pa.q[0]) + ", " +
                to_string(pa.q[1]) + ")");
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = gauss_2f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), 20);
    const auto pa = fit_diagonal(s, 10);
    const Complex50 z(Float50(0.5), -sqrt(Float50(3)) / 2);
    const Complex v = scalar_cast<Complex>(evaluate<Complex50>(pa, z));
    const double t = seconds_since(t0);
    const bool ok = digits_match(v.real(), 0.7062090573, 9) && digits_match(v.imag(), -0.8072538749, 9) && t < 10.0;
    verdict(3, ok, "[10/10] Pade of 2F1(1/2,1/3;1/5;z) at z = (1 - i sqrt 3)/2, 9 significant digits per component",
            "got " + num(v.real()) + (v.imag() < 0 ? " - " : " + ") + num(std::fabs(v.imag())) +
                "i, want 0.7062090573 - 0.8072538749i, " + fmt("%.2f s (limit 10 s)", t));
}

void criterion_4() {
    const Float50 x9(9), truth = exp(x9);
    const auto f = fit_prepared(exp_half_sum(21), 10);
    const Float50 v = f(x9, x9);
    const double err = percent_error(v, truth);
    const bool value_ok = digits_match(v.convert_to<double>(), 8103.083320, 8);
    const bool err_ok = err >= 7.5e-6 / 2 && err <= 7.5e-6 * 2;

    // Binary64 generator coefficients, converted exactly and fitted exactly.
    const auto shifted = fit_prepared(series_cast<Rational>(exp_half_sum(3.0, 6.0, 21)), 10);
    const double shifted_err = percent_error(shifted(x9, x9), truth);
    const bool shifted_ok = shifted_err <= 1e-9;

    const auto eight = fit_prepared(exp_half_sum(17), 8);
    const Float50 v8 = eight(x9, x9);
    verdict(4, value_ok && err_ok && shifted_ok,
            "exp((x+y)/2): [10/10] about (0,0) at (9,9) = 8103.083320 (8 digits), %err 7.5e-6 within x2; "
            "[10/10] about (3,6) at (9,9) %err <= 1e-9",
            "about (0,0): got " + num(v.convert_to<double>()) + ", %err " + fmt("%.2g", err) + " [" +
                (value_ok && err_ok ? "ok" : "mismatch") + "]; about (3,6): %err " + fmt("%.2g", shifted_err) + " [" +
                (shifted_ok ? "ok" : "mismatch") + "]; diagnostic: [8/8] about (0,0) gives " +
                num(v8.convert_to<double>()) + ", %err " + fmt("%.2g", percent_error(v8, truth)));
}

void criterion_5() {
    const auto one = Preprocess{poly("1"), false};
    const Float50 a(4.6), b(3.1);
    const auto fs = fit_prepared(sin_half_sum(21), 10, one);
    const auto fh = fit_prepared(sinh_half_sum(21), 10, one);
    const auto fl = fit_prepared(log_one_plus_sum(21), 10, one);
    const Float50 vs = fs(a, a), vh = fh(a, a), vl = fl(b, b);
    const double es = percent_error(vs, sin(a)), eh = percent_error(vh, sinh(a));
    const bool sin_ok = digits_match(vs.convert_to<double>(), -0.9936946941, 10) && es >= 3.7e-4 / 2 && es <= 3.7e-4 * 2;
    const bool sinh_ok = digits_match(vh.convert_to<double>(), 49.73713860, 10) && eh >= 1.3e-5 / 2 && eh <= 1.3e-5 * 2;
    const bool log_ok = digits_match(vl.convert_to<double>(), 1.974099414, 8);
    // Outside |x + y| < 1 the Taylor series itself diverges.
    const double taylor = evaluate_truncation<double>(log_one_plus_sum(21), 3.1, 3.1);
    verdict(5, sin_ok && sinh_ok && log_ok,
            "[10/10] about (0,0): sin at (4.6,4.6), sinh at (4.6,4.6), log(1+x+y) at (3.1,3.1)",
            "sin " + num(vs.convert_to<double>()) + " %err " + fmt("%.2g", es) + "; sinh " + num(vh.convert_to<double>()) +
                " %err " + fmt("%.2g", eh) + "; log " + num(vl.convert_to<double>()) +
                " (degree-21 Taylor polynomial there: " + fmt("%.3g", taylor) + ")");
}

void criterion_6() {
    const int orders[] = {5, 10, 15, 20};
    const double want_ca[] = {0.726068215009552, 0.785440863070842, 0.799406544586245, 0.804066077181726};
    const double want_ps[] = {0.690568727620971, 0.742779189825413, 0.763411133663296, 0.774502665799193};
    const Float50 exact = li22_at_one();
    bool ok = true;
    std::string detail;
    double t20 = 0;
    for (int k = 0; k < 4; ++k) {
        const int o = orders[k];
        const auto t0 = std::chrono::steady_clock::now();
        const auto fit = fit_prepared(li22(2 * o + 1), o, Preprocess{poly("1+x+y"), true});
        const double ca = fit(Float50(1), Float50(1)).convert_to<double>();
        const double t = seconds_since(t0);
        if (o == 20) t20 = t;
        const Float50 ps = li22_partial_sum(2 * o + 1);
        const bool row = digits_match(ca, want_ca[k], 10) && digits_match(ps.convert_to<double>(), want_ps[k], 12) &&
                         abs(Float50(ca) - exact) < abs(ps - exact);
        ok = ok && row;
        detail += (detail.empty() ? "" : "; ") + std::to_string(o) + ": " + fmt("%.15f", ca) + " vs sum " +
                  fmt("%.15f", ps.convert_to<double>()) + (row ? "" : " [mismatch]");
    }
    ok = ok && t20 <= 180.0;
    verdict(6, ok,
            "Li22(1,1) via 1+x+y+Li22(x-y,x+y), orders 5/10/15/20: CA to 10 digits, partial sums to 12, CA closer to "
            "pi^4/120; order 20 within 180 s",
            detail + "; order 20 took " + fmt("%.1f s", t20));
}

void criterion_7() {
    const auto ising = fit_prepared(ising_susceptibility(21), 10, Preprocess{poly("x+y"), true});
    const auto cm2 = fit_prepared(cm2_function(21), 10, Preprocess{{}, true});
    auto at = [](const auto& f, double a, double b) { return f(Float50(a), Float50(b)).template convert_to<double>(); };
    const double i1 = at(ising, 0.21, 0.21), i2 = at(ising, 0.81, 0.81);
    const double c1 = at(cm2, 0.1, 0.1), c2 = at(cm2, 1.9, 2.1);
    const bool ok = digits_match(i1, 1.022807183, 8) && digits_match(i2, 1.705228240, 8) &&
                    digits_match(c1, 1.098840521, 7) && digits_match(c2, 0.01957320339, 7);
    verdict(7, ok, "rotation workflows: Legendre sum at (0.21,0.21), (0.81,0.81) to 8 digits; 1/(e^(z1 z2) - z2) at "
                   "(0.1,0.1), (1.9,2.1) to 7 digits",
            num(i1) + ", " + num(i2) + "; " + num(c1) + ", " + num(c2));
}

void criterion_8() {
    const auto P1 = default_params("f1");
    const auto d = [&](const char* k) { return P1.at(k).convert_to<double>(); };
    const auto f1 = fit_prepared(appell_f1(P1.at("a"), P1.at("b1"), P1.at("b2"), P1.at("c"), 21), 10);
    const double v1 = f1(Float50(0.34), Float50(0.34)).convert_to<double>();
    const double oracle = appell_f1_sum(d("a"), d("b1"), d("b2"), d("c"), 0.34, 0.34, 100).real();
    const bool f1_ok = digits_match(v1, 1.961119271, 8) && digits_match(v1, oracle, 8);

    const auto P2 = default_params("f2");
    const auto f2 = fit_prepared(appell_f2(P2.at("a"), P2.at("b1"), P2.at("b2"), P2.at("c1"), P2.at("c2"), 21), 10);
    const double v2 = f2(Float50(0.2), Float50(0.2)).convert_to<double>();
    const bool f2_ok = digits_match(v2, 1.298900246, 7);

    const auto P3 = default_params("f2ac1");
    const auto parts = appell_f2_ac_components(P3.at("a"), P3.at("b1"), P3.at("b2"), P3.at("c1"), P3.at("c2"), 21);
    const Complex x(5, -0.0), y(15, -0.0);
    Complex total = 0;
    for (const auto& part : parts) {
        const auto [X, Y] = map_point(part.map, x, y);
        total += part.prefactor(x, y) * evaluate_mapped<Complex>(fit_diagonal(part.series, 10).first, X, Y);
    }
    const Complex want(-0.04109494941, 0.03474758527);
    const double rel = std::abs(total - want) / std::abs(want);
    const bool ac_ok = rel <= 1e-5;
    verdict(8, f1_ok && f2_ok && ac_ok,
            "F1 at (0.34,0.34) to 8 digits (and vs depth-100 sum); F2 at (0.2,0.2) to 7 digits; F2 continuation at "
            "(5,15) within 1e-5 relative",
            "F1 " + num(v1) + " (sum " + num(oracle) + "); F2 " + num(v2) + "; continuation " + num(total.real()) +
                (total.imag() < 0 ? " - " : " + ") + num(std::fabs(total.imag())) + "i, rel err " + fmt("%.2g", rel));
}

// --- criterion 9 ---------------------------------------------------------------

bool symmetric(const ChisholmApproximant<Rational>& ca) {
    for (int p = 0; p <= ca.order; ++p)
        for (int q = 0; q <= ca.order; ++q)
            if (ca.num(p, q) != ca.num(q, p) || ca.den(p, q) != ca.den(q, p)) return false;
    return true;
}

void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> broken;
    const auto one = poly("1");

    // Symmetric inputs give symmetric grids; every exact fit has zero residuals.
    std::vector<std::pair<std::string, std::function<DoubleSeries<Rational>(int)>>> symmetric_inputs = {
        {"exp", [](int d) { return exp_half_sum(d); }},
        {"sin+1", [&](int d) { return add_polynomial(sin_half_sum(d), one); }},
        {"log+1", [&](int d) { return add_polynomial(log_one_plus_sum(d), one); }},
        {"F1(b1=b2)", [](int d) { return appell_f1(Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 7), d); }},
    };
    for (const auto& [name, make] : symmetric_inputs)
        for (int M = 1; M <= 5; ++M) {
            const auto s = make(2 * M + 1);
            const auto ca = fit_diagonal(s, M).first;
            if (!symmetric(ca)) broken.push_back("symmetry " + name + " M=" + std::to_string(M));
            if (!taylor_residuals(ca, s).all_zero()) broken.push_back("residuals " + name + " M=" + std::to_string(M));
        }
    for (int M = 1; M <= 4; ++M) {
        const auto s = add_polynomial(rotate_pm(ising_susceptibility(2 * M + 1)), poly("x+y"));
        if (!taylor_residuals(fit_diagonal(s, M).first, s).all_zero())
            broken.push_back("residuals ising M=" + std::to_string(M));
    }

    // Row permutations of the assembled system give the same solution.
    std::mt19937 rng(20240501);
    for (int M = 1; M <= 4; ++M) {
        const auto s = appell_f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7), 2 * M + 1);
        const auto dsys = assemble_denominator_system(s, M);
        const auto base = solve(dsys.system);
        std::vector<std::size_t> perm(dsys.system.size());
        for (int trial = 0; trial < 5; ++trial) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            if (solve(dsys.system.permuted(perm)) != base) broken.push_back("permutation M=" + std::to_string(M));
        }
        if (fit_diagonal(s, M).first.den != solve_denominator_dense(s, M))
            broken.push_back("structured vs dense M=" + std::to_string(M));
    }

    // Reciprocal identity.
    for (int M = 1; M <= 3; ++M) {
        const auto s = exp_half_sum(2 * M + 1);
        if (fit_diagonal(truncated_reciprocal(s, 2 * M + 1), M).first != reciprocal(fit_diagonal(s, M).first))
            broken.push_back("reciprocal M=" + std::to_string(M));
    }

    // Homographic invariance x = A u/(1 - B u), y = A v/(1 - B v).
    const std::pair<Rational, Rational> maps[] = {{2, 1}, {1, -1}};
    const std::pair<Rational, Rational> points[] = {{Rational(1, 3), Rational(1, 5)}, {Rational(-1, 2), Rational(2, 7)}};
    for (const auto& [A, B] : maps)
        for (int M = 1; M <= 2; ++M)
            for (const auto& base : {exp_half_sum(2 * M + 1), add_polynomial(log_one_plus_sum(2 * M + 1), one)}) {
                const int D = 2 * M + 1;
                const auto moved = compose_separable(base, SeparableMap<Rational>::homographic(A, B, D), D);
                const auto fu = fit_diagonal(moved, M).first;
                const auto fx = fit_diagonal(base, M).first;
                for (const auto& [u, v] : points) {
                    const Rational x = A * u / (1 - B * u), y = A * v / (1 - B * v);
                    if (evaluate<Rational>(fu, u, v) != evaluate<Rational>(fx, x, y))
                        broken.push_back("homographic A=" + to_string(A) + " B=" + to_string(B) + " M=" + std::to_string(M));
                }
            }

    // Equation counts, structurally.
    for (int M = 1; M <= 6; ++M) {
        const auto s = exp_half_sum(2 * M + 1);
        const auto dsys = assemble_denominator_system(s, M);
        const int n = (M + 1) * (M + 1) - 1;
        int coefficient_rows = 0, symmetrized_rows = 0;
        for (const auto& r : dsys.rows)
            (r.kind == EquationLabel::Kind::symmetrized ? symmetrized_rows : coefficient_rows) += 1;
        const int numerator_rows = (M + 1) * (M + 1) - 1;  // e_pq = 0 defining a_pq, (p,q) != (0,0)
        const auto report = fit_diagonal(s, M).second;
        if (static_cast<int>(dsys.system.size()) != n || static_cast<int>(dsys.unknowns.size()) != n ||
            coefficient_rows != M * (M + 1) || symmetrized_rows != M ||
            numerator_rows + n != 2 * M * M + 4 * M || report.equations_total != 2 * M * M + 4 * M ||
            report.equations_symmetrized != M)
            broken.push_back("equation count M=" + std::to_string(M));
    }

    const double t = seconds_since(t0);
    std::string detail = broken.empty() ? "all properties hold" : "broken: ";
    for (std::size_t i = 0; i < broken.size() && i < 6; ++i) detail += (i ? ", " : "") + broken[i];
    verdict(9, broken.empty() && t < 60.0,
            "properties: symmetry, permutation uniqueness, reciprocity, homographic invariance, zero residuals, "
            "2M^2+4M equation count",
            detail + ", " + fmt("%.1f s (limit 60 s)", t));
}

} // namespace

int main() {
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("summary: %d of 9 criteria pass", 9 - failures);
    if (failures > unexpected_failures)
        std::printf("; %d known deviation(s), see README.md", failures - unexpected_failures);
    std::printf("\n");
    return unexpected_failures == 0 ? 0 : 1;
}
