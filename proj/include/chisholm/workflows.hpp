#ifndef CHISHOLM_WORKFLOWS_HPP
#define CHISHOLM_WORKFLOWS_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chisholm.hpp"
#include "errors.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace chisholm {

// Preprocessing applied before a fit and undone on evaluation: optionally
// substitute z1 = x - y, z2 = x + y, then add `offset` (a polynomial in the
// fit variables, relative to the center).
struct Preprocess {
    Polynomial<Rational> offset;
    bool rotate_pm = false;
};

// Parses "1", "x+y", "1+x+y", "2x-y/3", "x*y" style offsets (terms of the form
// c, c*x^m*y^n, or c x^m y^n with rational c).
inline Polynomial<Rational> parse_offset(const std::string& text) {
    Polynomial<Rational> out;
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty() || s == "0") return out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw parse_error("offset: empty term in '" + text + "'");
        std::size_t k = 0;
        while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
        Rational c = k ? parse_rational(term.substr(0, k)) : Rational(1);
        int m = 0, n = 0;
        std::size_t pos = k;
        while (pos < term.size()) {
            if (term[pos] == '*') {
                ++pos;
                continue;
            }
            if (term[pos] == '/') {  // trailing divisor, as in y/3
                std::size_t e = ++pos;
                while (e < term.size() && std::isdigit(static_cast<unsigned char>(term[e]))) ++e;
                if (e == pos) throw parse_error("offset: missing divisor in '" + text + "'");
                const Rational divisor = parse_rational(term.substr(pos, e - pos));
                if (divisor == 0) throw parse_error("offset: division by zero in '" + text + "'");
                c /= divisor;
                pos = e;
                continue;
            }
            const char var = term[pos++];
            if (var != 'x' && var != 'y') throw parse_error("offset: unexpected '" + std::string(1, var) + "' in '" + text + "'");
            int power = 1;
            if (pos < term.size() && term[pos] == '^') {
                std::size_t e = ++pos;
                while (e < term.size() && std::isdigit(static_cast<unsigned char>(term[e]))) ++e;
                if (e == pos) throw parse_error("offset: missing exponent in '" + text + "'");
                power = std::stoi(term.substr(pos, e - pos));
                pos = e;
            }
            (var == 'x' ? m : n) += power;
        }
        out.push_back({m, n, sign * c});
        i = j;
    }
    return out;
}

// An approximant together with the preprocessing that produced it. Calling it
// with the caller's original variables returns the approximation to the
// original function.
template <class T>
struct PreparedFit {
    ChisholmApproximant<T> ca;
    FitReport report;
    Preprocess pre;

    template <class U>
    U operator()(const U& z1, const U& z2) const {
        U x = z1, y = z2;
        if (pre.rotate_pm) {
            x = (z1 + z2) / U(2);
            y = (z2 - z1) / U(2);
        }
        U value = evaluate<U>(ca, x, y);
        if (!pre.offset.empty()) {
            const U dx = x - scalar_cast<U>(ca.center.first);
            const U dy = y - scalar_cast<U>(ca.center.second);
            value -= evaluate_polynomial<Rational, U>(pre.offset, dx, dy);
        }
        return value;
    }
};

template <class T>
DoubleSeries<T> prepare_series(const DoubleSeries<T>& s, const Preprocess& pre) {
    DoubleSeries<T> out = s;
    if (pre.rotate_pm) {
        if (!scalar_traits<T>::is_zero(s.center().first) || !scalar_traits<T>::is_zero(s.center().second))
            throw error("rotate-pm needs a series centered at the origin");
        out = rotate_pm(out);
    }
    if (!pre.offset.empty()) {
        Polynomial<T> p;
        for (const auto& t : pre.offset) p.push_back({t.m, t.n, scalar_cast<T>(t.c)});
        out = add_polynomial(out, p);
    }
    return out;
}

// Preprocess, then fit with c00 scaled to 1.
template <class T>
PreparedFit<T> fit_prepared(const DoubleSeries<T>& s, int order, const Preprocess& pre = {}) {
    auto prepared = prepare_series(s, pre);
    if (!prepared.is_known(0, 0) || scalar_traits<T>::is_zero(prepared.at(0, 0)))
        throw not_normalized("c00 = 0 after preprocessing; add a constant offset, e.g. --offset 1 (or 1+x+y)");
    auto [ca, report] = fit_scaled(prepared, order);
    return {std::move(ca), report, pre};
}

// --- error tables ------------------------------------------------------------

struct ErrorTableRow {
    std::pair<double, double> point;
    std::optional<Complex> ca_value;         // empty when the point is a pole
    std::optional<Complex> reference_value;  // empty when no reference applies
    std::optional<double> percent_error;     // 100 |ca - ref| / |ref|, or |ca - ref| when ref = 0
    bool absolute_error = false;
};

inline ErrorTableRow make_row(std::pair<double, double> point, std::optional<Complex> ca,
                              std::optional<Complex> ref) {
    ErrorTableRow row{point, ca, ref, std::nullopt, false};
    if (ca && ref) {
        const double diff = std::abs(*ca - *ref);
        if (std::abs(*ref) == 0.0) {
            row.percent_error = diff;
            row.absolute_error = true;
        } else {
            row.percent_error = 100.0 * diff / std::abs(*ref);
        }
    }
    return row;
}

// Same, with the error computed at 50 digits so tiny errors are not lost to
// binary64 cancellation.
inline ErrorTableRow make_row_precise(std::pair<double, double> point, std::optional<Complex50> ca,
                                      std::optional<Complex50> ref) {
    auto narrow = [](const std::optional<Complex50>& v) -> std::optional<Complex> {
        if (!v) return std::nullopt;
        return scalar_cast<Complex>(*v);
    };
    ErrorTableRow row{point, narrow(ca), narrow(ref), std::nullopt, false};
    if (ca && ref) {
        const Float50 diff = abs(*ca - *ref);
        const Float50 mag = abs(*ref);
        if (mag.is_zero()) {
            row.percent_error = diff.convert_to<double>();
            row.absolute_error = true;
        } else {
            row.percent_error = Float50(100 * diff / mag).convert_to<double>();
        }
    }
    return row;
}

// Ten significant digits, fixed notation where the magnitude allows it, so the
// same value always renders to the same bytes.
inline std::string format_sig10(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    const double mag = std::fabs(v);
    if (mag >= 1e-4 && mag < 1e10) {
        const int exponent = static_cast<int>(std::floor(std::log10(mag)));
        const int decimals = std::max(0, 9 - exponent);
        std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.9e", v);
    }
    return buf;
}

inline std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return format_sig10(z.real());
    const std::string im = format_sig10(std::fabs(z.imag()));
    return format_sig10(z.real()) + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

inline std::string format_error(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2g", e);
    return buf;
}

enum class TableFormat { csv, markdown };

// Header plus rows of preformatted cells. CSV quotes cells containing commas.
inline std::string render_cells(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows, TableFormat format) {
    std::string out;
    if (format == TableFormat::csv) {
        auto line = [&](const std::vector<std::string>& c) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                const bool quote = c[i].find(',') != std::string::npos;
                out += (i ? "," : "") + (quote ? "\"" + c[i] + "\"" : c[i]);
            }
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
    } else {
        auto line = [&](const std::vector<std::string>& c) {
            out += "|";
            for (const auto& s : c) out += " " + s + " |";
            out += '\n';
        };
        line(header);
        out += "|";
        for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
        out += '\n';
        for (const auto& r : rows) line(r);
    }
    return out;
}

inline std::string format_point(std::pair<double, double> p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%g,%g)", p.first, p.second);
    return buf;
}

inline std::vector<std::string> row_cells(const ErrorTableRow& r) {
    return {format_point(r.point), r.ca_value ? format_complex(*r.ca_value) : "pole",
            r.reference_value ? format_complex(*r.reference_value) : "n/a",
            r.percent_error ? format_error(*r.percent_error) + (r.absolute_error ? " (abs)" : "") : "n/a"};
}

inline std::string render_table(const std::vector<ErrorTableRow>& rows, TableFormat format) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) cells.push_back(row_cells(r));
    return render_cells({"point", "CA", "reference", "% error"}, cells, format);
}

} // namespace chisholm

#endif // CHISHOLM_WORKFLOWS_HPP
