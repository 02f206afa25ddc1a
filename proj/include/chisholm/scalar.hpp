#ifndef CHISHOLM_SCALAR_HPP
#define CHISHOLM_SCALAR_HPP

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace chisholm {

namespace mp = boost::multiprecision;

// Exact field. GMP keeps every value in lowest terms with a positive
// denominator, and zero as 0/1.
using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// 50 significant decimal digits; used to render exact fits for golden tables.
using Float50 = mp::cpp_bin_float_50;
using Complex50 = mp::cpp_complex_50;

using Complex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static double magnitude(const Rational& v) { return std::fabs(v.convert_to<double>()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static bool is_zero(double v) { return v == 0.0; }
    static double magnitude(double v) { return std::fabs(v); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& v) { return v == Complex{}; }
    static double magnitude(const Complex& v) { return std::abs(v); }
};

template <>
struct scalar_traits<Float50> {
    static constexpr bool exact = false;
    static bool is_zero(const Float50& v) { return v.is_zero(); }
    static double magnitude(const Float50& v) { return std::fabs(v.convert_to<double>()); }
};

template <>
struct scalar_traits<Complex50> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex50& v) { return v.real().is_zero() && v.imag().is_zero(); }
    static double magnitude(const Complex50& v) { return abs(v).template convert_to<double>(); }
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

// Value conversion between the supported scalar types. Conversions from
// Rational are correctly rounded; double -> Rational is exact.
template <class To, class From>
To scalar_cast(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (std::is_same_v<From, Rational>) {
        if constexpr (std::is_same_v<To, double>) {
            return v.template convert_to<double>();
        } else if constexpr (std::is_same_v<To, Complex>) {
            return Complex(v.template convert_to<double>(), 0.0);
        } else if constexpr (std::is_same_v<To, Float50>) {
            return Float50(Float50(numerator(v)) / Float50(denominator(v)));
        } else if constexpr (std::is_same_v<To, Complex50>) {
            return Complex50(scalar_cast<Float50>(v));
        } else {
            static_assert(!sizeof(To), "unsupported conversion from Rational");
        }
    } else if constexpr (std::is_same_v<From, double>) {
        if constexpr (std::is_same_v<To, Rational>) {
            if (!std::isfinite(v)) throw parse_error("non-finite value cannot be made exact");
            return Rational(v);
        } else {
            return To(v);
        }
    } else if constexpr (std::is_same_v<From, Float50> && std::is_same_v<To, Complex50>) {
        return Complex50(v);
    } else if constexpr (std::is_same_v<From, Complex> && std::is_same_v<To, Complex50>) {
        return Complex50(Float50(v.real()), Float50(v.imag()));
    } else if constexpr (std::is_same_v<From, Float50> && std::is_same_v<To, double>) {
        return v.template convert_to<double>();
    } else if constexpr (std::is_same_v<From, Complex50> && std::is_same_v<To, Complex>) {
        return Complex(v.real().template convert_to<double>(), v.imag().template convert_to<double>());
    } else {
        static_assert(!sizeof(To), "unsupported scalar conversion");
    }
}

// Accepts "p/q", "p", and signed forms; rejects anything else.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+')
        throw parse_error("not a rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    BigInt d(std::string{den});
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(n), d);
}

inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace chisholm

#endif // CHISHOLM_SCALAR_HPP
