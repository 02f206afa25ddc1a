// Fit the [1/1] approximant of exp((x+y)/2) and evaluate it.
#include <iostream>

#include <chisholm/chisholm.hpp>
#include <chisholm/generators.hpp>

int main() {
    using namespace chisholm;
    const auto series = exp_half_sum(3);
    const auto [ca, report] = fit_diagonal(series, 1);

    auto print = [](const char* name, const Grid<Rational>& g) {
        std::cout << name << ":\n";
        for (int p = 0; p <= g.order(); ++p) {
            for (int q = 0; q <= g.order(); ++q) std::cout << "  " << g(p, q);
            std::cout << "\n";
        }
    };
    print("numerator", ca.num);
    print("denominator", ca.den);
    std::cout << "equations: " << report.equations_total << "\n";

    const Rational v = evaluate<Rational>(ca, Rational(1, 2), Rational(1, 2));
    std::cout << "CA(1/2,1/2) = " << v << " ~ " << v.convert_to<double>() << "  (exp(1/2) = 1.6487212707)\n";
    return v == Rational(81, 49) ? 0 : 1;
}
