#ifndef CHISHOLM_IO_HPP
#define CHISHOLM_IO_HPP

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "chisholm.hpp"
#include "errors.hpp"
#include "pade.hpp"
#include "scalar.hpp"
#include "series.hpp"

// JSON forms:
//   series      {"center": [a, b], "degree": D, "terms": [[m, n, c], ...]}
//   uni series  {"center": a, "degree": D, "terms": [[m, c], ...]}
//   pade        {"kind": "pade", "M": M, "center": a, "p": [...], "q": [...]}
//   chisholm    {"kind": "chisholm", "M": M, "center": [a, b], "num": [[...]], "den": [[...]]}
// A value is a "p/q" string (exact) or a JSON number (binary64). Terms not
// listed up to the degree bound are known zeros.
namespace chisholm::io {

using json = nlohmann::json;

template <class T>
json value_to_json(const T& v) {
    if constexpr (std::is_same_v<T, Rational>)
        return to_string(v);
    else
        return v;
}

template <class T>
T value_from_json(const json& j) {
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if constexpr (std::is_same_v<T, Rational>)
            return r;
        else
            return scalar_cast<T>(r);
    }
    if (j.is_number_integer()) {
        if constexpr (std::is_same_v<T, Rational>)
            return Rational(j.get<long long>());
        else
            return static_cast<T>(j.get<long long>());
    }
    if (j.is_number()) return scalar_cast<T>(j.get<double>());
    throw parse_error("expected a number or a \"p/q\" string, got " + j.dump());
}

// True when every value in the document is exact (a string or an integer).
inline bool all_exact(const json& j) {
    if (j.is_array() || j.is_object()) {
        for (const auto& e : j)
            if (!all_exact(e)) return false;
        return true;
    }
    return !j.is_number_float();
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw parse_error(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

// Largest total degree d such that every coefficient up to d is known.
template <class T>
int complete_degree(const DoubleSeries<T>& s) {
    for (int k = 0; k <= s.degree(); ++k)
        for (int n = 0; n <= k; ++n)
            if (!s.is_known(k - n, n)) return k - 1;
    return s.degree();
}

} // namespace detail

// Series whose known support is not downward closed are written up to their
// last complete total degree.
template <class T>
json to_json(const DoubleSeries<T>& s) {
    const int D = detail::complete_degree(s);
    json terms = json::array();
    for (int k = 0; k <= D; ++k)
        for (int n = 0; n <= k; ++n) {
            const T& c = s.at(k - n, n);
            if (!scalar_traits<T>::is_zero(c)) terms.push_back({k - n, n, value_to_json(c)});
        }
    return {{"center", {value_to_json(s.center().first), value_to_json(s.center().second)}},
            {"degree", D},
            {"terms", terms}};
}

template <class T>
json to_json(const UniSeries<T>& s) {
    json terms = json::array();
    for (int k = 0; k <= s.degree(); ++k)
        if (!scalar_traits<T>::is_zero(s[k])) terms.push_back({k, value_to_json(s[k])});
    return {{"center", value_to_json(s.center())}, {"degree", s.degree()}, {"terms", terms}};
}

template <class T>
DoubleSeries<T> double_series_from_json(const json& j) {
    const int D = detail::int_field(j, "degree");
    const json& c = detail::field(j, "center");
    if (!c.is_array() || c.size() != 2) throw parse_error("series center must be [a, b]");
    DoubleSeries<T> s(D, {value_from_json<T>(c[0]), value_from_json<T>(c[1])});
    for (const auto& t : detail::field(j, "terms")) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw parse_error("series term must be [m, n, c], got " + t.dump());
        const int m = t[0].get<int>(), n = t[1].get<int>();
        if (m < 0 || n < 0 || m + n > D)
            throw parse_error("series term (" + std::to_string(m) + "," + std::to_string(n) + ") outside degree " +
                              std::to_string(D));
        s.set(m, n, value_from_json<T>(t[2]));
    }
    return s;
}

template <class T>
UniSeries<T> uni_series_from_json(const json& j) {
    const int D = detail::int_field(j, "degree");
    UniSeries<T> s(D, value_from_json<T>(detail::field(j, "center")));
    for (const auto& t : detail::field(j, "terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw parse_error("univariate term must be [m, c], got " + t.dump());
        const int m = t[0].get<int>();
        if (m < 0 || m > D) throw parse_error("univariate term " + std::to_string(m) + " outside degree");
        s[m] = value_from_json<T>(t[1]);
    }
    return s;
}

template <class T>
json to_json(const PadeApproximant<T>& pa) {
    json p = json::array(), q = json::array();
    for (const auto& v : pa.p) p.push_back(value_to_json(v));
    for (const auto& v : pa.q) q.push_back(value_to_json(v));
    return {{"kind", "pade"}, {"M", pa.order}, {"center", value_to_json(pa.center)}, {"p", p}, {"q", q}};
}

template <class T>
json to_json(const ChisholmApproximant<T>& ca) {
    auto grid = [&](const Grid<T>& g) {
        json rows = json::array();
        for (int p = 0; p <= ca.order; ++p) {
            json row = json::array();
            for (int q = 0; q <= ca.order; ++q) row.push_back(value_to_json(g(p, q)));
            rows.push_back(row);
        }
        return rows;
    };
    return {{"kind", "chisholm"},
            {"M", ca.order},
            {"center", {value_to_json(ca.center.first), value_to_json(ca.center.second)}},
            {"num", grid(ca.num)},
            {"den", grid(ca.den)}};
}

template <class T>
PadeApproximant<T> pade_from_json(const json& j) {
    if (detail::field(j, "kind") != "pade") throw parse_error("not a pade approximant file");
    PadeApproximant<T> pa;
    pa.order = detail::int_field(j, "M");
    pa.center = value_from_json<T>(detail::field(j, "center"));
    for (const auto& v : detail::field(j, "p")) pa.p.push_back(value_from_json<T>(v));
    for (const auto& v : detail::field(j, "q")) pa.q.push_back(value_from_json<T>(v));
    const auto want = static_cast<std::size_t>(pa.order) + 1;
    if (pa.p.size() != want || pa.q.size() != want) throw parse_error("pade: p and q must have M+1 entries");
    return pa;
}

template <class T>
ChisholmApproximant<T> chisholm_from_json(const json& j) {
    if (detail::field(j, "kind") != "chisholm") throw parse_error("not a chisholm approximant file");
    ChisholmApproximant<T> ca;
    ca.order = detail::int_field(j, "M");
    if (ca.order < 0) throw parse_error("chisholm: negative M");
    const json& c = detail::field(j, "center");
    if (!c.is_array() || c.size() != 2) throw parse_error("chisholm center must be [a, b]");
    ca.center = {value_from_json<T>(c[0]), value_from_json<T>(c[1])};
    auto grid = [&](const char* key) {
        const json& rows = detail::field(j, key);
        Grid<T> g(ca.order);
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(ca.order) + 1)
            throw parse_error(std::string("chisholm: '") + key + "' must have M+1 rows");
        for (int p = 0; p <= ca.order; ++p) {
            const json& row = rows[static_cast<std::size_t>(p)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(ca.order) + 1)
                throw parse_error(std::string("chisholm: '") + key + "' rows must have M+1 entries");
            for (int q = 0; q <= ca.order; ++q) g(p, q) = value_from_json<T>(row[static_cast<std::size_t>(q)]);
        }
        return g;
    };
    ca.num = grid("num");
    ca.den = grid("den");
    return ca;
}

using AnySeries = std::variant<DoubleSeries<Rational>, DoubleSeries<double>>;
using AnyUniSeries = std::variant<UniSeries<Rational>, UniSeries<double>>;
using AnyChisholm = std::variant<ChisholmApproximant<Rational>, ChisholmApproximant<double>>;
using AnyPade = std::variant<PadeApproximant<Rational>, PadeApproximant<double>>;

// Exact when every value in the file is exact, binary64 otherwise.
inline AnySeries read_series(const json& j) {
    if (all_exact(j)) return double_series_from_json<Rational>(j);
    return double_series_from_json<double>(j);
}

inline AnyUniSeries read_uni_series(const json& j) {
    if (all_exact(j)) return uni_series_from_json<Rational>(j);
    return uni_series_from_json<double>(j);
}

inline AnyChisholm read_chisholm(const json& j) {
    if (all_exact(j)) return chisholm_from_json<Rational>(j);
    return chisholm_from_json<double>(j);
}

inline AnyPade read_pade(const json& j) {
    if (all_exact(j)) return pade_from_json<Rational>(j);
    return pade_from_json<double>(j);
}

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

inline json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse(std::string(std::istreambuf_iterator<char>(in), {}));
}

inline void save(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << j.dump(1) << '\n';
}

} // namespace chisholm::io

#endif // CHISHOLM_IO_HPP
