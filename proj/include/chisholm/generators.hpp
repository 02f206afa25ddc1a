#ifndef CHISHOLM_GENERATORS_HPP
#define CHISHOLM_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "errors.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace chisholm {

// Rising factorial x (x+1) ... (x+k-1). Negative k uses the reflection
// (x)_{-k} = (-1)^k / (1-x)_k, which throws parameter_pole when (1-x)_k = 0.
template <class T>
T pochhammer(const T& x, int k) {
    if (k >= 0) {
        T acc(1);
        for (int i = 0; i < k; ++i) acc *= x + T(i);
        return acc;
    }
    const T den = pochhammer(T(1) - x, -k);
    if (scalar_traits<T>::is_zero(den)) throw parameter_pole("pochhammer: negative-index symbol hits a pole");
    return ((-k) % 2 ? T(-1) : T(1)) / den;
}

namespace detail {

inline bool is_nonpositive_integer(const Rational& v) { return denominator(v) == 1 && v <= 0; }
inline bool is_nonpositive_integer(double v) { return v <= 0 && v == std::floor(v); }

inline std::vector<Rational> inverse_factorials(int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1;
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] / k;
    return out;
}

inline std::vector<double> inverse_factorials_double(int n) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1.0;
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] / k;
    return out;
}

// c_mn = g(m+n) / (m! n!) for a function of the sum; g(k) = f^(k)(center) scale^k.
template <class T, class G>
DoubleSeries<T> sum_series(int degree, std::pair<T, T> center, G g, const std::vector<T>& inv_fact) {
    DoubleSeries<T> s(degree, std::move(center));
    for (int k = 0; k <= degree; ++k) {
        const T gk = g(k);
        if (scalar_traits<T>::is_zero(gk)) continue;
        for (int m = 0; m <= k; ++m)
            s.set(m, k - m, gk * inv_fact[static_cast<std::size_t>(m)] * inv_fact[static_cast<std::size_t>(k - m)]);
    }
    return s;
}

inline void check_generator_degree(int degree) {
    if (degree < 0) throw error("generator: degree must be nonnegative");
}

} // namespace detail

// --- elementary functions of the sum -------------------------------------

// exp((x+y)/2) about the origin: 1 / (2^(m+n) m! n!).
inline DoubleSeries<Rational> exp_half_sum(int degree) {
    detail::check_generator_degree(degree);
    return detail::sum_series<Rational>(
        degree, {0, 0}, [](int k) { return Rational(1, BigInt(1) << k); }, detail::inverse_factorials(degree));
}

// exp((x+y)/2) about (a, b): e^((a+b)/2) / (2^(m+n) m! n!).
inline DoubleSeries<double> exp_half_sum(double a, double b, int degree) {
    detail::check_generator_degree(degree);
    const double e = std::exp((a + b) / 2);
    return detail::sum_series<double>(
        degree, {a, b}, [e](int k) { return std::ldexp(e, -k); }, detail::inverse_factorials_double(degree));
}

inline DoubleSeries<Rational> sin_half_sum(int degree) {
    detail::check_generator_degree(degree);
    return detail::sum_series<Rational>(
        degree, {0, 0},
        [](int k) { return k % 2 == 0 ? Rational(0) : Rational(k % 4 == 1 ? 1 : -1, BigInt(1) << k); },
        detail::inverse_factorials(degree));
}

// k-th derivative of sin cycles sin, cos, -sin, -cos.
inline DoubleSeries<double> sin_half_sum(double a, double b, int degree) {
    detail::check_generator_degree(degree);
    const double t = (a + b) / 2;
    const double phase[4] = {std::sin(t), std::cos(t), -std::sin(t), -std::cos(t)};
    return detail::sum_series<double>(
        degree, {a, b}, [&](int k) { return std::ldexp(phase[k % 4], -k); }, detail::inverse_factorials_double(degree));
}

inline DoubleSeries<Rational> sinh_half_sum(int degree) {
    detail::check_generator_degree(degree);
    return detail::sum_series<Rational>(
        degree, {0, 0}, [](int k) { return k % 2 == 0 ? Rational(0) : Rational(1, BigInt(1) << k); },
        detail::inverse_factorials(degree));
}

inline DoubleSeries<double> sinh_half_sum(double a, double b, int degree) {
    detail::check_generator_degree(degree);
    const double t = (a + b) / 2;
    const double phase[2] = {std::sinh(t), std::cosh(t)};
    return detail::sum_series<double>(
        degree, {a, b}, [&](int k) { return std::ldexp(phase[k % 2], -k); }, detail::inverse_factorials_double(degree));
}

// log(1+x+y) about the origin: (-1)^(k+1) (k-1)! / (m! n!), k = m+n >= 1.
inline DoubleSeries<Rational> log_one_plus_sum(int degree) {
    detail::check_generator_degree(degree);
    BigInt f = 1;
    std::vector<Rational> g(static_cast<std::size_t>(degree) + 1);
    for (int k = 1; k <= degree; ++k) {
        g[static_cast<std::size_t>(k)] = Rational(k % 2 ? f : BigInt(-f));
        f *= k;
    }
    return detail::sum_series<Rational>(
        degree, {0, 0}, [&](int k) { return g[static_cast<std::size_t>(k)]; }, detail::inverse_factorials(degree));
}

// log(1+x+y) about (a, b); needs 1 + a + b > 0.
inline DoubleSeries<double> log_one_plus_sum(double a, double b, int degree) {
    detail::check_generator_degree(degree);
    const double base = 1 + a + b;
    if (!(base > 0)) throw error("log_one_plus_sum: center must satisfy 1 + a + b > 0");
    DoubleSeries<double> s(degree, {a, b});
    s.set(0, 0, std::log(base));
    // (k-1)! / (m! n!) = C(k, m) / k
    for (int k = 1; k <= degree; ++k) {
        const double scale = (k % 2 ? 1.0 : -1.0) / (k * std::pow(base, k));
        double binom = 1.0;
        for (int m = 0; m <= k; ++m) {
            s.set(m, k - m, scale * binom);
            binom = binom * (k - m) / (m + 1);
        }
    }
    return s;
}

// --- hypergeometric families ---------------------------------------------

template <class T>
UniSeries<T> gauss_2f1(const T& a, const T& b, const T& c, int degree) {
    detail::check_generator_degree(degree);
    if (detail::is_nonpositive_integer(c)) throw parameter_pole("2F1: c is a nonpositive integer");
    UniSeries<T> s(degree);
    T term(1);
    for (int n = 0; n <= degree; ++n) {
        s[n] = term;
        term = term * (a + T(n)) * (b + T(n)) / ((c + T(n)) * T(n + 1));
    }
    return s;
}

// F1 = sum (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!) x^m y^n.
template <class T>
DoubleSeries<T> appell_f1(const T& a, const T& b1, const T& b2, const T& c, int degree) {
    detail::check_generator_degree(degree);
    if (detail::is_nonpositive_integer(c)) throw parameter_pole("F1: c is a nonpositive integer");
    DoubleSeries<T> s(degree);
    T row(1);  // term (m, 0)
    for (int m = 0; m <= degree; ++m) {
        T term = row;
        for (int n = 0; m + n <= degree; ++n) {
            s.set(m, n, term);
            term = term * (a + T(m + n)) * (b2 + T(n)) / ((c + T(m + n)) * T(n + 1));
        }
        row = row * (a + T(m)) * (b1 + T(m)) / ((c + T(m)) * T(m + 1));
    }
    return s;
}

// F2 = sum (a)_{m+n} (b1)_m (b2)_n / ((c1)_m (c2)_n m! n!) x^m y^n, |x| + |y| < 1.
template <class T>
DoubleSeries<T> appell_f2(const T& a, const T& b1, const T& b2, const T& c1, const T& c2, int degree) {
    detail::check_generator_degree(degree);
    if (detail::is_nonpositive_integer(c1) || detail::is_nonpositive_integer(c2))
        throw parameter_pole("F2: c1 or c2 is a nonpositive integer");
    DoubleSeries<T> s(degree);
    T row(1);
    for (int m = 0; m <= degree; ++m) {
        T term = row;
        for (int n = 0; m + n <= degree; ++n) {
            s.set(m, n, term);
            term = term * (a + T(m + n)) * (b2 + T(n)) / ((c2 + T(n)) * T(n + 1));
        }
        row = row * (a + T(m)) * (b1 + T(m)) / ((c1 + T(m)) * T(m + 1));
    }
    return s;
}

// How the fitted variables (X, Y) depend on the physical point (x, y).
enum class CoordinateMap {
    identity,       // X = x,          Y = y
    euler,          // X = x/(x-1),    Y = y/(y-1)
    inverse_ratio,  // X = -x/y,       Y = 1/y
    inverse_both,   // X = 1/x,        Y = 1/y
    inverse_x_ratio // X = 1/x,        Y = x/y
};

inline std::pair<Complex, Complex> map_point(CoordinateMap map, Complex x, Complex y) {
    switch (map) {
    case CoordinateMap::identity: return {x, y};
    case CoordinateMap::euler: return {x / (x - 1.0), y / (y - 1.0)};
    case CoordinateMap::inverse_ratio: return {-x / y, 1.0 / y};
    case CoordinateMap::inverse_both: return {1.0 / x, 1.0 / y};
    case CoordinateMap::inverse_x_ratio: return {1.0 / x, x / y};
    }
    return {x, y};
}

// (shift + sign * variable)^exponent on the principal branch. A base on the
// negative real axis takes its side of the cut from the sign of its imaginary
// part, so callers choose +i0 or -i0 by the point they pass in.
struct PowerFactor {
    int variable = 0;  // 0 = x, 1 = y
    double sign = 1.0;
    double exponent = 0.0;
    double shift = 0.0;
};

// prod Gamma(num) / prod Gamma(den) * prod powers, kept as parameter
// expressions and evaluated on demand.
struct Prefactor {
    std::vector<double> gamma_num;
    std::vector<double> gamma_den;
    std::vector<PowerFactor> powers;

    double gamma_ratio() const {
        double r = 1.0;
        for (double g : gamma_num) {
            if (detail::is_nonpositive_integer(g)) throw parameter_pole("prefactor: Gamma pole in numerator");
            r *= std::tgamma(g);
        }
        for (double g : gamma_den) {
            if (detail::is_nonpositive_integer(g)) return 0.0;  // 1/Gamma vanishes
            r /= std::tgamma(g);
        }
        return r;
    }

    Complex operator()(Complex x, Complex y) const {
        Complex out(gamma_ratio(), 0.0);
        for (const auto& p : powers) {
            Complex base = p.sign * (p.variable == 0 ? x : y);
            if (p.shift != 0.0) base += p.shift;  // keeps a signed zero imaginary part intact otherwise
            out *= std::pow(base, p.exponent);
        }
        return out;
    }
};

// A series in mapped variables together with what turns it back into the
// physical function: value = prefactor(x, y) * S(map(x, y)).
template <class T>
struct MappedSeries {
    DoubleSeries<T> series;
    CoordinateMap map = CoordinateMap::identity;
    Prefactor prefactor;
};

// F1(a,b1,b2,c;x,y) = (1-x)^(-b1) (1-y)^(-b2) F1(c-a,b1,b2,c; x/(x-1), y/(y-1)).
template <class T>
MappedSeries<T> appell_f1_transformed(const T& a, const T& b1, const T& b2, const T& c, int degree) {
    MappedSeries<T> out{appell_f1<T>(c - a, b1, b2, c, degree), CoordinateMap::euler, {}};
    out.prefactor.powers = {{0, -1.0, -scalar_cast<double>(b1), 1.0}, {1, -1.0, -scalar_cast<double>(b2), 1.0}};
    return out;
}

namespace detail {

template <class T>
T checked_quotient(const T& num, const T& den) {
    if (scalar_traits<T>::is_zero(den)) throw parameter_pole("F2 continuation: Pochhammer pole in a denominator");
    return num / den;
}

} // namespace detail

// The three double sums of the large-|x|, large-|y| continuation of F2, each
// with its Gamma/power prefactor and coordinate map.
template <class T>
std::array<MappedSeries<T>, 3> appell_f2_ac_components(const T& a, const T& b1, const T& b2, const T& c1,
                                                       const T& c2, int degree) {
    detail::check_generator_degree(degree);
    const double da = scalar_cast<double>(a), db1 = scalar_cast<double>(b1), db2 = scalar_cast<double>(b2);
    const double dc1 = scalar_cast<double>(c1), dc2 = scalar_cast<double>(c2);
    std::array<MappedSeries<T>, 3> out;
    const T one(1);

    DoubleSeries<T> s1(degree), s2(degree), s3(degree);
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) {
            const T fact = pochhammer(one, m) * pochhammer(one, n);
            s1.set(m, n,
                   detail::checked_quotient(pochhammer(b1, m) * pochhammer(a, m + n) * pochhammer(a - c2 + one, m + n),
                                            fact * pochhammer(c1, m) * pochhammer(a - b2 + one, m + n)));
            s2.set(m, n, detail::checked_quotient(pochhammer(b1, m) * pochhammer(b2, n) *
                                                      pochhammer(b1 - c1 + one, m) * pochhammer(b2 - c2 + one, n),
                                                  pochhammer(b1 + b2 - a + one, m + n) * fact));
            s3.set(m, n,
                   detail::checked_quotient(pochhammer(b2, n) * pochhammer(b2 - c2 + one, n) *
                                                pochhammer(a - b2, m - n) * pochhammer(a - b2 - c1 + one, m - n),
                                            pochhammer(a - b1 - b2 + one, m - n) * fact));
        }

    out[0].series = std::move(s1);
    out[0].map = CoordinateMap::inverse_ratio;
    out[0].prefactor = {{dc2, db2 - da}, {db2, dc2 - da}, {{1, -1.0, -da}}};

    out[1].series = std::move(s2);
    out[1].map = CoordinateMap::inverse_both;
    out[1].prefactor = {{dc1, dc2, da - db1 - db2}, {da, dc1 - db1, dc2 - db2}, {{0, -1.0, -db1}, {1, -1.0, -db2}}};

    out[2].series = std::move(s3);
    out[2].map = CoordinateMap::inverse_x_ratio;
    out[2].prefactor = {{dc1, dc2, da - db2, db1 + db2 - da},
                        {da, db1, dc2 - db2, db2 + dc1 - da},
                        {{0, -1.0, db2 - da}, {1, -1.0, -db2}}};
    for (const auto& c : out) c.prefactor.gamma_ratio();  // surface Gamma poles now
    return out;
}

// --- double polylogarithm and the condensed-matter functions -------------

// Li_{2,2}(x, y) = sum_{i > j >= 1} x^i y^j / (i^2 j^2).
inline DoubleSeries<Rational> li22(int degree) {
    detail::check_generator_degree(degree);
    DoubleSeries<Rational> s(degree);
    for (int i = 2; i <= degree; ++i)
        for (int j = 1; j < i && i + j <= degree; ++j) s.set(i, j, Rational(1, BigInt(i) * i * j * j));
    return s;
}

// Coefficient vectors (lowest power first) of P_0 .. P_max by the Bonnet
// recurrence (l+1) P_{l+1} = (2l+1) z P_l - l P_{l-1}.
inline std::vector<std::vector<Rational>> legendre_polynomials(int max_l) {
    std::vector<std::vector<Rational>> p;
    p.push_back({Rational(1)});
    if (max_l >= 1) p.push_back({Rational(0), Rational(1)});
    for (int l = 1; l < max_l; ++l) {
        std::vector<Rational> next(static_cast<std::size_t>(l) + 2);
        const auto& cur = p[static_cast<std::size_t>(l)];
        const auto& prev = p[static_cast<std::size_t>(l - 1)];
        for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += Rational(2 * l + 1) * cur[k];
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= Rational(l) * prev[k];
        for (auto& v : next) v /= l + 1;
        p.push_back(std::move(next));
    }
    return p;
}

// A family of polynomials P_0..P_max in z1 (coefficient vectors, low to high).
using PolynomialFamily = std::function<std::vector<std::vector<Rational>>(int max_l)>;

// sum_{l >= 0} P_l(z1) z2^l (the l = 0 term is the leading 1); Legendre by
// default, for which the sum is 1 / sqrt(1 - 2 z1 z2 + z2^2).
inline DoubleSeries<Rational> ising_susceptibility(int degree, const PolynomialFamily& family = legendre_polynomials) {
    detail::check_generator_degree(degree);
    const auto polys = family(degree);
    DoubleSeries<Rational> s(degree);
    for (int l = 0; l <= degree; ++l) {
        const auto& p = polys.at(static_cast<std::size_t>(l));
        for (int m = 0; m < static_cast<int>(p.size()) && m + l <= degree; ++m)
            if (!p[static_cast<std::size_t>(m)].is_zero()) s.set(m, l, p[static_cast<std::size_t>(m)]);
    }
    return s;
}

// Series of e^(z1 z2) - z2.
inline DoubleSeries<Rational> cm2_denominator(int degree) {
    detail::check_generator_degree(degree);
    DoubleSeries<Rational> s(degree);
    Rational inv_fact(1);
    for (int k = 0; 2 * k <= degree; ++k) {
        s.set(k, k, inv_fact);
        inv_fact /= k + 1;
    }
    if (degree >= 1) s.set(0, 1, s.at(0, 1) - 1);
    return s;
}

// 1 / (e^(z1 z2) - z2) as the truncated reciprocal of cm2_denominator.
inline DoubleSeries<Rational> cm2_function(int degree) { return truncated_reciprocal(cm2_denominator(degree), degree); }

// --- reference values ------------------------------------------------------

// sum_{i,j=1}^{n} 1/((i+j)^2 j^2): the square partial sum of Li_{2,2}(1,1)
// written with i' = i + j.
inline Float50 li22_partial_sum(int n) {
    Float50 acc = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Float50 d = Float50(i + j) * Float50(j);
            acc += 1 / (d * d);
        }
    return acc;
}

inline Float50 li22_at_one() {
    const Float50 pi = boost::math::constants::pi<Float50>();
    return pi * pi * pi * pi / 120;
}

// Square partial sums m, n = 0..N of the hypergeometric double series, in
// complex double arithmetic.
inline Complex appell_f1_sum(double a, double b1, double b2, double c, Complex x, Complex y, int N) {
    Complex total = 0.0;
    Complex row = 1.0;
    for (int m = 0; m <= N; ++m) {
        Complex term = row;
        for (int n = 0; n <= N; ++n) {
            total += term;
            term *= (a + m + n) * (b2 + n) / ((c + m + n) * (n + 1)) * y;
        }
        row *= (a + m) * (b1 + m) / ((c + m) * (m + 1)) * x;
    }
    return total;
}

inline Complex appell_f2_sum(double a, double b1, double b2, double c1, double c2, Complex x, Complex y, int N) {
    Complex total = 0.0;
    Complex row = 1.0;
    for (int m = 0; m <= N; ++m) {
        Complex term = row;
        for (int n = 0; n <= N; ++n) {
            total += term;
            term *= (a + m + n) * (b2 + n) / ((c2 + n) * (n + 1)) * y;
        }
        row *= (a + m) * (b1 + m) / ((c1 + m) * (m + 1)) * x;
    }
    return total;
}

// sum_{l=0}^{L} P_l(z1) z2^l with Legendre P_l.
inline double ising_sum(double z1, double z2, int L) {
    double prev = 1.0, cur = z1, total = 1.0, power = 1.0;
    for (int l = 1; l <= L; ++l) {
        power *= z2;
        total += cur * power;
        const double next = ((2 * l + 1) * z1 * cur - l * prev) / (l + 1);
        prev = cur;
        cur = next;
    }
    return total;
}

inline double ising_closed_form(double z1, double z2) { return 1.0 / std::sqrt(1 - 2 * z1 * z2 + z2 * z2); }

inline double cm2_closed_form(double z1, double z2) { return 1.0 / (std::exp(z1 * z2) - z2); }

// --- name-based construction (used by the command line) --------------------

// Parameters for a named generator. Hypergeometric parameters are exact.
struct GeneratorSpec {
    std::string name;
    std::map<std::string, Rational> params;
    std::pair<double, double> center{0.0, 0.0};
    int degree = 21;
};

using GeneratedSeries = std::variant<DoubleSeries<Rational>, DoubleSeries<double>, UniSeries<Rational>>;

inline const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names = {"exp", "sin", "sinh", "log", "2f1", "f1", "f1-euler",
                                                   "f2", "f2ac1", "f2ac2", "f2ac3", "li22", "ising", "cm2"};
    return names;
}

// Parameters each generator reads, with the defaults used by the worked
// examples: 2F1(1/2,1/3;1/5), F1(1/2;1/3,1/5;1/7), F2(3/10;2/5,3/17;1/5,1/7),
// and F2(123/100;77/50,167/100;211/100,239/100) for the continuation sums.
inline std::map<std::string, Rational> default_params(const std::string& name) {
    if (name == "2f1") return {{"a", Rational(1, 2)}, {"b", Rational(1, 3)}, {"c", Rational(1, 5)}};
    if (name == "f1" || name == "f1-euler")
        return {{"a", Rational(1, 2)}, {"b1", Rational(1, 3)}, {"b2", Rational(1, 5)}, {"c", Rational(1, 7)}};
    if (name == "f2")
        return {{"a", Rational(3, 10)}, {"b1", Rational(2, 5)}, {"b2", Rational(3, 17)},
                {"c1", Rational(1, 5)},  {"c2", Rational(1, 7)}};
    if (name == "f2ac1" || name == "f2ac2" || name == "f2ac3")
        return {{"a", Rational(123, 100)}, {"b1", Rational(77, 50)}, {"b2", Rational(167, 100)},
                {"c1", Rational(211, 100)}, {"c2", Rational(239, 100)}};
    return {};
}

// Defaults overlaid with the caller's parameters; unknown keys are rejected.
inline std::map<std::string, Rational> resolved_params(const GeneratorSpec& spec) {
    auto out = default_params(spec.name);
    for (const auto& [key, value] : spec.params) {
        auto it = out.find(key);
        if (it == out.end()) throw error("generator '" + spec.name + "' has no parameter '" + key + "'");
        it->second = value;
    }
    return out;
}

inline GeneratedSeries make_series(const GeneratorSpec& spec) {
    if (std::find(generator_names().begin(), generator_names().end(), spec.name) == generator_names().end())
        throw error("unknown generator '" + spec.name + "'");
    if (spec.degree < 3) throw error("generator degree must be at least 3");
    const bool origin = spec.center.first == 0.0 && spec.center.second == 0.0;
    const int D = spec.degree;
    const auto params = resolved_params(spec);
    auto p = [&](const char* key) { return params.at(key); };
    const auto& [ca, cb] = spec.center;
    if (spec.name == "exp") return origin ? GeneratedSeries(exp_half_sum(D)) : GeneratedSeries(exp_half_sum(ca, cb, D));
    if (spec.name == "sin") return origin ? GeneratedSeries(sin_half_sum(D)) : GeneratedSeries(sin_half_sum(ca, cb, D));
    if (spec.name == "sinh")
        return origin ? GeneratedSeries(sinh_half_sum(D)) : GeneratedSeries(sinh_half_sum(ca, cb, D));
    if (spec.name == "log")
        return origin ? GeneratedSeries(log_one_plus_sum(D)) : GeneratedSeries(log_one_plus_sum(ca, cb, D));
    if (!origin) throw error("generator '" + spec.name + "' is only available about the origin");
    if (spec.name == "2f1") return gauss_2f1(p("a"), p("b"), p("c"), D);
    if (spec.name == "f1") return appell_f1(p("a"), p("b1"), p("b2"), p("c"), D);
    if (spec.name == "f1-euler") return appell_f1_transformed(p("a"), p("b1"), p("b2"), p("c"), D).series;
    if (spec.name == "f2") return appell_f2(p("a"), p("b1"), p("b2"), p("c1"), p("c2"), D);
    if (spec.name == "f2ac1" || spec.name == "f2ac2" || spec.name == "f2ac3") {
        auto parts = appell_f2_ac_components(p("a"), p("b1"), p("b2"), p("c1"), p("c2"), D);
        return parts[static_cast<std::size_t>(spec.name.back() - '1')].series;
    }
    if (spec.name == "li22") return li22(D);
    if (spec.name == "ising") return ising_susceptibility(D);
    if (spec.name == "cm2") return cm2_function(D);
    throw error("unknown generator '" + spec.name + "'");
}

} // namespace chisholm

#endif // CHISHOLM_GENERATORS_HPP
