#ifndef CHISHOLM_TOOLS_CLI_HPP
#define CHISHOLM_TOOLS_CLI_HPP

// The `chisholm` command line. run() takes the arguments after the program
// name and writes to the given streams, so tests can drive it in-process.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <chisholm/chisholm.hpp>
#include <chisholm/errors.hpp>
#include <chisholm/generators.hpp>
#include <chisholm/io.hpp>
#include <chisholm/pade.hpp>
#include <chisholm/scalar.hpp>
#include <chisholm/series.hpp>
#include <chisholm/workflows.hpp>

namespace chisholm::cli {

// Process exit codes; one per error kind.
enum exit_code : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_usage = 2,
    exit_insufficient_terms = 3,
    exit_singular = 4,
    exit_not_normalized = 5,
    exit_parse = 6,
    exit_pole = 7,
    exit_parameter_pole = 8,
    exit_order_cap = 9,
};

class usage_error : public error {
public:
    using error::error;
};

class order_cap_error : public error {
public:
    using error::error;
};

struct Options {
    std::string source;  // generator or demo name
    std::string input;
    std::string output;
    int order = 0;
    std::string backend = "exact";
    std::string center = "0,0";
    std::string offset;
    bool rotate_pm = false;
    int degree = -1;
    std::vector<std::string> params;
    std::vector<std::string> points;
    int precision = 10;
    std::string format = "csv";
    std::string grid;
    std::string orders;
};

// --- argument parsing helpers ------------------------------------------------

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_real(const std::string& s) {
    if (s.empty()) throw usage_error("expected a number, got an empty string");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw usage_error("not a real number: '" + s + "'");
    return v;
}

// "p/q", integers, and decimals such as "1.23" or "-4e-2", all exact.
inline Rational parse_exact(const std::string& s) {
    if (s.find('/') != std::string::npos || s.find_first_of(".eE") == std::string::npos) {
        try {
            return parse_rational(s);
        } catch (const parse_error&) {
            throw usage_error("not a rational number: '" + s + "'");
        }
    }
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        const std::string ex = s.substr(e + 1);
        char* end = nullptr;
        exponent = std::strtol(ex.c_str(), &end, 10);
        if (ex.empty() || end != ex.c_str() + ex.size() || std::labs(exponent) > 1000)
            throw usage_error("bad exponent in '" + s + "'");
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw usage_error("not a number: '" + s + "'");
    Rational value;
    try {
        value = parse_rational(digits);
    } catch (const parse_error&) {
        throw usage_error("not a number: '" + s + "'");
    }
    BigInt scale = 1;
    for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
    return exponent >= 0 ? value * Rational(scale) : value / Rational(scale);
}

// "a", "bi", "a+bi", "a-bi"; "i" alone means 1i. A leading "-0" keeps its sign.
inline Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw usage_error("empty complex number");
    const char last = s.back();
    if (last != 'i' && last != 'I' && last != 'j') return {parse_real(s), 0.0};
    s.pop_back();
    std::size_t split_at = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    auto imag_part = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split_at == std::string::npos) return {0.0, imag_part(s)};
    return {parse_real(s.substr(0, split_at)), imag_part(s.substr(split_at))};
}

inline std::pair<double, double> parse_real_pair(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw usage_error("expected 'a,b', got '" + s + "'");
    return {parse_real(parts[0]), parse_real(parts[1])};
}

inline std::pair<Complex, Complex> parse_point(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw usage_error("a point is 'x,y' (components may be complex), got '" + s + "'");
    return {parse_complex(parts[0]), parse_complex(parts[1])};
}

inline std::map<std::string, Rational> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, Rational> out;
    for (const auto& item : items)
        for (const auto& kv : split(item, ',')) {
            if (kv.empty()) continue;
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw usage_error("--params expects k=v, got '" + kv + "'");
            out[kv.substr(0, eq)] = parse_exact(kv.substr(eq + 1));
        }
    return out;
}

// "v1,v2,..." for a square grid, or "x1,x2,...:y1,y2,..."; x varies slowest.
inline std::vector<std::pair<double, double>> parse_grid(const std::string& s) {
    std::vector<std::pair<double, double>> out;
    if (s.empty()) return out;
    const auto halves = split(s, ':');
    if (halves.size() > 2) throw usage_error("--grid is 'values' or 'xvalues:yvalues'");
    auto values = [](const std::string& list) {
        std::vector<double> v;
        for (const auto& t : split(list, ','))
            if (!t.empty()) v.push_back(parse_real(t));
        return v;
    };
    const auto xs = values(halves[0]);
    const auto ys = halves.size() == 2 ? values(halves[1]) : xs;
    for (double x : xs)
        for (double y : ys) out.emplace_back(x, y);
    return out;
}

inline int max_order() {
    if (const char* env = std::getenv("CHISHOLM_MAX_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*env == '\0' || *end != '\0' || v < 1) throw usage_error("CHISHOLM_MAX_ORDER must be a positive integer");
        return static_cast<int>(std::min(v, 10000L));
    }
    return 25;
}

inline void check_order(int order) {
    if (order < 1) throw usage_error("--order must be at least 1");
    const int cap = max_order();
    if (order > cap)
        throw order_cap_error("order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap) +
                              " (raise CHISHOLM_MAX_ORDER to allow it)");
}

inline TableFormat table_format(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "markdown") return TableFormat::markdown;
    throw usage_error("--format must be csv or markdown");
}

// --- value formatting --------------------------------------------------------

inline std::string format_digits(const Float50& v, int digits) { return v.str(digits); }

inline std::string format_digits(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

template <class R>
std::string format_value(const R& re, const R& im, int digits) {
    if (im == 0) return format_digits(re, digits);
    const std::string imag = format_digits(im < 0 ? R(-im) : im, digits);
    return format_digits(re, digits) + (im < 0 ? "-" : "+") + imag + "i";
}

inline std::string format_value(const Complex50& z, int digits) {
    return format_value<Float50>(z.real(), z.imag(), std::clamp(digits, 1, 45));
}

inline std::string format_value(const Complex& z, int digits) {
    return format_value<double>(z.real(), z.imag(), std::clamp(digits, 1, 17));
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw error("cannot write '" + path + "'");
    f << text;
}

// --- series sources ----------------------------------------------------------

inline GeneratorSpec make_spec(const Options& o, int default_degree) {
    GeneratorSpec spec;
    spec.name = o.source;
    spec.params = parse_params(o.params);
    spec.center = parse_real_pair(o.center);
    spec.degree = o.degree >= 0 ? o.degree : std::max(default_degree, 3);
    return spec;
}

inline io::AnySeries load_double_series(const Options& o, int default_degree) {
    if (!o.input.empty() && !o.source.empty()) throw usage_error("give either a generator name or --input, not both");
    if (!o.input.empty()) return io::read_series(io::load(o.input));
    if (o.source.empty()) throw usage_error("no series: name a generator or pass --input FILE");
    auto g = make_series(make_spec(o, default_degree));
    if (auto* s = std::get_if<DoubleSeries<Rational>>(&g)) return *s;
    if (auto* s = std::get_if<DoubleSeries<double>>(&g)) return *s;
    throw usage_error("generator '" + o.source + "' is univariate; use pade-fit");
}

template <class T>
DoubleSeries<T> to_backend(const io::AnySeries& any) {
    return std::visit([](const auto& s) { return series_cast<T>(s); }, any);
}

inline Preprocess make_preprocess(const Options& o) {
    Preprocess pre;
    pre.offset = parse_offset(o.offset);
    pre.rotate_pm = o.rotate_pm;
    return pre;
}

// The preprocessing is stored next to the approximant so eval can undo it.
inline void attach_preprocess(io::json& j, const Options& o) {
    if (o.offset.empty() && !o.rotate_pm) return;
    j["preprocess"] = {{"offset", o.offset}, {"rotate_pm", o.rotate_pm}};
}

inline Preprocess preprocess_from_json(const io::json& j) {
    Preprocess pre;
    if (!j.contains("preprocess")) return pre;
    const auto& p = j.at("preprocess");
    if (!p.is_object()) throw parse_error("'preprocess' must be an object");
    if (p.contains("offset")) {
        if (!p.at("offset").is_string()) throw parse_error("'preprocess.offset' must be a string");
        pre.offset = parse_offset(p.at("offset").get<std::string>());
    }
    if (p.contains("rotate_pm")) {
        if (!p.at("rotate_pm").is_boolean()) throw parse_error("'preprocess.rotate_pm' must be a boolean");
        pre.rotate_pm = p.at("rotate_pm").get<bool>();
    }
    return pre;
}

inline std::string describe_report(const FitReport& r, int order, const std::string& backend) {
    std::ostringstream s;
    s << "[" << order << "/" << order << "] Chisholm approximant, " << backend << " backend\n"
      << "constraints: " << r.equations_total << " = 2M^2+4M (" << r.equations_symmetrized << " symmetrized)\n";
    if (r.residual_max) s << "max |taylor residual|: " << format_digits(*r.residual_max, 3) << "\n";
    return s.str();
}

// A fitted approximant in either backend, with its preprocessing.
using AnyFit = std::variant<PreparedFit<Rational>, PreparedFit<double>>;

inline AnyFit fit_any(const io::AnySeries& series, int order, const Preprocess& pre, const std::string& backend) {
    if (backend == "exact") return fit_prepared(to_backend<Rational>(series), order, pre);
    return fit_prepared(to_backend<double>(series), order, pre);
}

// Value at a real point: exact fits are evaluated at 50 digits.
inline Complex50 value_at(const AnyFit& fit, double x, double y) {
    return std::visit(
        [&](const auto& f) -> Complex50 {
            using T = std::decay_t<decltype(f.ca.center.first)>;
            if constexpr (std::is_same_v<T, Rational>)
                return Complex50(f(Float50(x), Float50(y)));
            else
                return Complex50(Float50(f(x, y)));
        },
        fit);
}

inline std::optional<Complex50> value_or_pole(const AnyFit& fit, double x, double y) {
    try {
        return value_at(fit, x, y);
    } catch (const pole_hit&) {
        return std::nullopt;
    }
}

// --- references ----------------------------------------------------------------

// Closed forms, or partial sums of depth 100 inside the region of convergence;
// nullopt where no reference applies.
inline std::optional<Complex50> reference_value(const std::string& name, const std::map<std::string, Rational>& params,
                                                double x, double y) {
    const Float50 X(x), Y(y);
    auto p = [&](const char* key) { return params.at(key).convert_to<double>(); };
    if (name == "exp") return Complex50(exp((X + Y) / 2));
    if (name == "sin") return Complex50(sin((X + Y) / 2));
    if (name == "sinh") return Complex50(sinh((X + Y) / 2));
    if (name == "log") {
        if (1 + X + Y <= 0) return std::nullopt;
        return Complex50(log(1 + X + Y));
    }
    if (name == "ising") {
        const Float50 r = 1 - 2 * X * Y + Y * Y;
        if (r <= 0) return std::nullopt;
        return Complex50(1 / sqrt(r));
    }
    if (name == "cm2") {
        const Float50 d = exp(X * Y) - Y;
        if (d.is_zero()) return std::nullopt;
        return Complex50(1 / d);
    }
    if (name == "li22") {
        if (x == 1.0 && y == 1.0) return Complex50(li22_at_one());
        return std::nullopt;
    }
    if (name == "f1") {
        if (std::fabs(x) >= 1 || std::fabs(y) >= 1) return std::nullopt;
        return scalar_cast<Complex50>(appell_f1_sum(p("a"), p("b1"), p("b2"), p("c"), x, y, 100));
    }
    if (name == "f2") {
        if (std::fabs(x) + std::fabs(y) >= 1) return std::nullopt;
        return scalar_cast<Complex50>(appell_f2_sum(p("a"), p("b1"), p("b2"), p("c1"), p("c2"), x, y, 100));
    }
    return std::nullopt;
}

inline std::vector<ErrorTableRow> error_rows(const AnyFit& fit, const std::vector<std::pair<double, double>>& points,
                                             const std::function<std::optional<Complex50>(double, double)>& ref) {
    std::vector<ErrorTableRow> rows;
    for (const auto& [x, y] : points) rows.push_back(make_row_precise({x, y}, value_or_pole(fit, x, y), ref(x, y)));
    return rows;
}

// --- verbs -------------------------------------------------------------------

inline int cmd_gen(const Options& o, std::ostream& out) {
    auto g = make_series(make_spec(o, 21));
    const io::json j = std::visit([](const auto& s) { return io::to_json(s); }, g);
    emit(j.dump(1) + "\n", o.output, out);
    return exit_ok;
}

inline int cmd_fit(const Options& o, std::ostream& out, std::ostream& err) {
    check_order(o.order);
    const auto series = load_double_series(o, 2 * o.order + 1);
    const auto fit = fit_any(series, o.order, make_preprocess(o), o.backend);
    io::json j = std::visit([](const auto& f) { return io::to_json(f.ca); }, fit);
    attach_preprocess(j, o);
    const FitReport report = std::visit([](const auto& f) { return f.report; }, fit);
    const std::string text = describe_report(report, o.order, o.backend);
    if (o.output.empty()) {
        out << j.dump(1) << "\n";
        err << text;
    } else {
        io::save(o.output, j);
        out << text << "written to " << o.output << "\n";
    }
    return exit_ok;
}

inline int cmd_eval(const Options& o, std::ostream& out) {
    if (o.input.empty()) throw usage_error("eval needs --input APPROXIMANT");
    if (o.points.empty()) throw usage_error("eval needs at least one --point x,y");
    const io::json j = io::load(o.input);
    const Preprocess pre = preprocess_from_json(j);
    const auto any = io::read_chisholm(j);
    for (const auto& text : o.points) {
        const auto [x, y] = parse_point(text);
        const std::string value = std::visit(
            [&, x = x, y = y](const auto& ca) {
                using T = std::decay_t<decltype(ca.center.first)>;
                PreparedFit<T> f{ca, {}, pre};
                if constexpr (std::is_same_v<T, Rational>)
                    return format_value(f(scalar_cast<Complex50>(x), scalar_cast<Complex50>(y)), o.precision);
                else
                    return format_value(f(x, y), o.precision);
            },
            any);
        out << text << " " << value << "\n";
    }
    return exit_ok;
}

inline int cmd_error_table(const Options& o, std::ostream& out) {
    check_order(o.order);
    if (o.source.empty()) throw usage_error("error-table needs a generator name");
    const TableFormat format = table_format(o.format);
    auto points = parse_grid(o.grid);
    for (const auto& p : o.points) points.push_back(parse_real_pair(p));
    if (o.source == "2f1") throw usage_error("error-table works on two-variable generators; use pade-eval for 2f1");
    const GeneratorSpec spec = make_spec(o, 2 * o.order + 1);
    const auto params = resolved_params(spec);
    const auto fit = fit_any(load_double_series(o, spec.degree), o.order, make_preprocess(o), o.backend);
    const auto rows =
        error_rows(fit, points, [&](double x, double y) { return reference_value(spec.name, params, x, y); });
    emit(render_table(rows, format), o.output, out);
    return exit_ok;
}

inline int cmd_pade_fit(const Options& o, std::ostream& out, std::ostream& err) {
    check_order(o.order);
    if (!o.input.empty() && !o.source.empty()) throw usage_error("give either a generator name or --input, not both");
    io::AnyUniSeries series;
    if (!o.input.empty()) {
        series = io::read_uni_series(io::load(o.input));
    } else {
        if (o.source.empty()) throw usage_error("no series: name a generator or pass --input FILE");
        auto g = make_series(make_spec(o, 2 * o.order));
        auto* s = std::get_if<UniSeries<Rational>>(&g);
        if (!s) throw usage_error("generator '" + o.source + "' is two-variable; use fit");
        series = *s;
    }
    io::json j;
    if (o.backend == "exact")
        j = io::to_json(fit_diagonal(std::visit([](const auto& s) { return series_cast<Rational>(s); }, series), o.order));
    else
        j = io::to_json(fit_diagonal(std::visit([](const auto& s) { return series_cast<double>(s); }, series), o.order));
    const std::string text = "[" + std::to_string(o.order) + "/" + std::to_string(o.order) + "] Pade approximant, " +
                             o.backend + " backend\n";
    if (o.output.empty()) {
        out << j.dump(1) << "\n";
        err << text;
    } else {
        io::save(o.output, j);
        out << text << "written to " << o.output << "\n";
    }
    return exit_ok;
}

inline int cmd_pade_eval(const Options& o, std::ostream& out) {
    if (o.input.empty()) throw usage_error("pade-eval needs --input APPROXIMANT");
    if (o.points.empty()) throw usage_error("pade-eval needs at least one --point z");
    const auto any = io::read_pade(io::load(o.input));
    for (const auto& text : o.points) {
        const Complex z = parse_complex(text);
        const std::string value = std::visit(
            [&](const auto& pa) {
                using T = std::decay_t<decltype(pa.center)>;
                if constexpr (std::is_same_v<T, Rational>)
                    return format_value(evaluate<Complex50>(pa, scalar_cast<Complex50>(z)), o.precision);
                else
                    return format_value(evaluate<Complex>(pa, z), o.precision);
            },
            any);
        out << text << " " << value << "\n";
    }
    return exit_ok;
}

// --- demos -------------------------------------------------------------------

namespace demo {

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"exp", "sin",  "sinh",  "log", "f1", "f2",
                                               "f2ac", "li22", "ising", "cm2", "2f1"};
    return n;
}

struct Context {
    int order;  // 0 = the workflow's default
    TableFormat format;
    std::string orders;
    std::ostream& out;

    int order_or(int fallback) const { return order > 0 ? order : fallback; }
};

inline Polynomial<Rational> poly(const std::string& text) { return parse_offset(text); }

inline void table(const Context& c, const std::string& title, const std::vector<ErrorTableRow>& rows) {
    c.out << "## " << title << "\n\n" << render_table(rows, c.format) << "\n";
}

inline std::function<std::optional<Complex50>(double, double)> reference_for(const std::string& name) {
    const auto params = default_params(name);
    return [name, params](double x, double y) { return reference_value(name, params, x, y); };
}

inline void elementary(const Context& c, const std::string& name) {
    const int M = c.order_or(10);
    const int D = 2 * M + 1;
    check_order(M);
    const bool needs_one = name != "exp";  // sin, sinh and log vanish at the origin
    const Preprocess origin_pre{needs_one ? poly("1") : Polynomial<Rational>{}, false};
    std::vector<std::pair<double, double>> grid;
    std::pair<double, double> center;
    if (name == "exp") {
        grid = parse_grid("0,3,6,9");
        center = {3, 6};
    } else if (name == "log") {
        grid = parse_grid("0.1,1.1,2.1,3.1");
    } else {
        grid = parse_grid("0.1,1.6,3.1,4.6");
        center = {1.6, 1.6};
    }
    GeneratorSpec spec{name, {}, {0, 0}, D};
    const auto origin = std::get<DoubleSeries<Rational>>(make_series(spec));
    const AnyFit f0 = fit_prepared(origin, M, origin_pre);
    const std::string order = "[" + std::to_string(M) + "/" + std::to_string(M) + "]";
    table(c, name + ": " + order + " about (0,0)", error_rows(f0, grid, reference_for(name)));
    if (name == "log") return;
    // Recentered: binary64 generator coefficients, converted exactly and fitted exactly.
    spec.center = center;
    const auto shifted = std::get<DoubleSeries<double>>(make_series(spec));
    const AnyFit f1 = fit_prepared(series_cast<Rational>(shifted), M);
    table(c, name + ": " + order + " about " + format_point(center), error_rows(f1, grid, reference_for(name)));
}

inline void f1(const Context& c) {
    const int M = c.order_or(10);
    check_order(M);
    const auto params = default_params("f1");
    const auto d = [&](const char* k) { return params.at(k).convert_to<double>(); };
    const AnyFit fit = fit_prepared(appell_f1(params.at("a"), params.at("b1"), params.at("b2"), params.at("c"), 2 * M + 1), M);
    const std::string order = "[" + std::to_string(M) + "/" + std::to_string(M) + "]";
    table(c, "F1: " + order + " about (0,0) against depth-100 partial sums",
          error_rows(fit, parse_grid("0.1,0.34,0.58,0.82"), reference_for("f1")));
    // Outside the unit bidisk the reference is the Euler-transformed sum.
    const auto euler = appell_f1_transformed(d("a"), d("b1"), d("b2"), d("c"), 0);
    auto transformed = [&](double x, double y) -> std::optional<Complex50> {
        const auto [X, Y] = map_point(euler.map, x, y);
        const Complex v =
            euler.prefactor(x, y) * appell_f1_sum(d("c") - d("a"), d("b1"), d("b2"), d("c"), X, Y, 100);
        return scalar_cast<Complex50>(v);
    };
    table(c, "F1: " + order + " about (0,0) against the Euler-transformed sum",
          error_rows(fit, parse_grid("-1,-1.5,-2:-1,-1.5,-2,-2.5,-3"), transformed));
}

inline void f2(const Context& c) {
    const int M = c.order_or(10);
    check_order(M);
    const auto params = default_params("f2");
    const AnyFit fit = fit_prepared(
        appell_f2(params.at("a"), params.at("b1"), params.at("b2"), params.at("c1"), params.at("c2"), 2 * M + 1), M);
    std::vector<std::pair<double, double>> pts = {{-0.6, -0.2}, {-0.6, 0.2}, {-0.2, -0.6}, {-0.2, -0.2},
                                                  {-0.2, 0.2},  {-0.2, 0.6}, {0.2, -0.6},  {0.2, -0.2},
                                                  {0.2, 0.2},   {0.6, -0.2}, {0.6, 0.2}};
    table(c, "F2: [" + std::to_string(M) + "/" + std::to_string(M) + "] about (0,0) against depth-100 partial sums",
          error_rows(fit, pts, reference_for("f2")));
}

// Region where the three continuation sums converge.
inline bool f2ac_in_roc(double x, double y) {
    const double r = std::fabs(x / y);
    return 1 / std::fabs(x) < 1 && r < 1 && r < std::fabs(x / (x + 1)) && 1 / std::fabs(y) < 1 && r + 1 / std::fabs(y) < 1;
}

inline void f2ac(const Context& c) {
    const int M = c.order_or(10);
    check_order(M);
    const auto params = default_params("f2ac1");
    const auto& P = params;
    const auto parts = appell_f2_ac_components(P.at("a"), P.at("b1"), P.at("b2"), P.at("c1"), P.at("c2"), 2 * M + 1);
    const auto dparts = appell_f2_ac_components(P.at("a").convert_to<double>(), P.at("b1").convert_to<double>(),
                                                P.at("b2").convert_to<double>(), P.at("c1").convert_to<double>(),
                                                P.at("c2").convert_to<double>(), 60);
    std::vector<ChisholmApproximant<Rational>> fits;
    for (const auto& part : parts) fits.push_back(fit_diagonal(part.series, M).first);
    const std::vector<std::pair<double, double>> pts = {{5, 5},   {5, 15},   {15, 5},   {15, 15},
                                                        {-15, 5}, {-15, 15}, {-5, 5},   {-5, 15},
                                                        {-15, -15}, {-15, -5}, {-5, -15}, {-5, -5},
                                                        {5, -15}, {5, -5},   {15, -15}, {15, -5}};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [px, py] : pts) {
        // Points sit just below the real axis, fixing the side of every cut.
        const Complex x(px, -0.0), y(py, -0.0);
        Complex ca = 0.0, direct = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto [X, Y] = map_point(parts[k].map, x, y);
            const Complex pref = parts[k].prefactor(x, y);
            ca += pref * evaluate_mapped<Complex>(fits[k], X, Y);
            direct += pref * evaluate_truncation<Complex>(dparts[k].series, X, Y);
        }
        const bool roc = f2ac_in_roc(px, py);
        const auto row = make_row({px, py}, ca, roc ? std::optional<Complex>(direct) : std::nullopt);
        auto cells = row_cells(row);
        cells.insert(cells.begin() + 1, roc ? "yes" : "no");
        rows.push_back(cells);
    }
    c.out << "## F2 continuation: three [" << M << "/" << M
          << "] fits in mapped variables; reference = the same sums to total degree 60 (inside the ROC only)\n\n"
          << render_cells({"point", "in ROC", "CA", "reference", "% error"}, rows, c.format) << "\n";
}

inline void li22_demo(const Context& c) {
    std::vector<int> orders;
    if (!c.orders.empty()) {
        for (const auto& t : split(c.orders, ','))
            if (!t.empty()) orders.push_back(static_cast<int>(parse_real(t)));
    } else if (c.order > 0) {
        orders = {c.order};
    } else {
        for (int o = 5; o <= 20; ++o) orders.push_back(o);
    }
    const Float50 exact = li22_at_one();
    const Preprocess pre{poly("1+x+y"), true};
    std::vector<std::vector<std::string>> rows;
    for (int o : orders) {
        check_order(o);
        const auto fit = fit_prepared(li22(2 * o + 1), o, pre);
        const Float50 ca = fit(Float50(1), Float50(1));
        const int n = 2 * o + 1;
        const Float50 ps = li22_partial_sum(n);
        rows.push_back({std::to_string(o), ca.str(15), ps.str(15), std::to_string(n * n),
                        format_error(abs(ca - exact).convert_to<double>()),
                        format_error(abs(ps - exact).convert_to<double>())});
        c.out.flush();
    }
    c.out << "## Li22(1,1) = pi^4/120 = " << exact.str(15)
          << ": CA of 1+x+y+Li22(x-y,x+y) against the square partial sum\n\n"
          << render_cells({"order", "CA", "partial sum", "terms", "CA error", "sum error"}, rows, c.format)
          << "\n";
}

inline void condensed(const Context& c, const std::string& name) {
    const int M = c.order_or(10);
    check_order(M);
    const bool ising = name == "ising";
    const auto s = ising ? ising_susceptibility(2 * M + 1) : cm2_function(2 * M + 1);
    // Rotation fills the missing mixed terms; ising also needs x+y added to be solvable.
    const Preprocess pre{ising ? poly("x+y") : Polynomial<Rational>{}, true};
    const AnyFit fit = fit_prepared(s, M, pre);
    const auto grid = ising ? parse_grid("0.01,0.21,0.41,0.61,0.81") : parse_grid("0.1,0.4,0.7,1,1.3,1.6,1.9:0.1,1.1,2.1");
    const std::string title = ising ? "1 + sum P_l(z1) z2^l" : "1/(exp(z1 z2) - z2)";
    table(c, title + ": [" + std::to_string(M) + "/" + std::to_string(M) + "] after z1 = x-y, z2 = x+y",
          error_rows(fit, grid, reference_for(name)));
}

inline void gauss(const Context& c) {
    const int M = c.order_or(10);
    check_order(M);
    const auto params = default_params("2f1");
    const auto pa = fit_diagonal(gauss_2f1(params.at("a"), params.at("b"), params.at("c"), 2 * M), M);
    const Complex50 z(Float50(0.5), -sqrt(Float50(3)) / 2);
    c.out << "## 2F1(1/2,1/3;1/5;z): [" << M << "/" << M << "] Pade from " << 2 * M << " terms\n\n"
          << "z = (1 - i sqrt(3))/2\nvalue = " << format_value(evaluate<Complex50>(pa, z), 10) << "\n\n";
}

inline void run(const std::string& name, const Context& c) {
    if (name == "exp" || name == "sin" || name == "sinh" || name == "log") return elementary(c, name);
    if (name == "f1") return f1(c);
    if (name == "f2") return f2(c);
    if (name == "f2ac") return f2ac(c);
    if (name == "li22") return li22_demo(c);
    if (name == "ising" || name == "cm2") return condensed(c, name);
    if (name == "2f1") return gauss(c);
    throw usage_error("unknown demo '" + name + "'");
}

} // namespace demo

inline int cmd_demo(const Options& o, const std::string& format, std::ostream& out) {
    if (o.source.empty()) throw usage_error("demo needs a name");
    demo::run(o.source, {o.order, table_format(format), o.orders, out});
    return exit_ok;
}

// --- entry point -------------------------------------------------------------

inline std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "|") + x;
    return s;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chisholm (two-variable) and Pade (one-variable) diagonal rational approximants"};
    app.name("chisholm");
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 ok, 1 other error, 2 usage, 3 insufficient terms, 4 singular system (approximant does not "
        "exist), 5 not normalized (c00 = 0), 6 unreadable input, 7 pole, 8 parameter pole, 9 order above "
        "CHISHOLM_MAX_ORDER (default 25).");
    Options o;
    std::string demo_format = "markdown";
    const std::string gens = join(generator_names());

    auto add_generator = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("generator", o.source, "built-in generator: " + gens);
        if (required) opt->required();
        sub->add_option("--degree", o.degree, "total-degree bound of the generated series");
        sub->add_option("--center", o.center, "expansion point a,b (elementary generators only)");
        sub->add_option("--params", o.params, "generator parameters k=v[,k=v...], rational or decimal");
    };
    auto add_fit = [&](CLI::App* sub) {
        sub->add_option("--order,-M", o.order, "diagonal order M")->required();
        sub->add_option("--backend", o.backend, "exact (rational) or float (binary64)")
            ->check(CLI::IsMember({"exact", "float"}));
    };
    auto add_preprocess = [&](CLI::App* sub) {
        sub->add_option("--offset", o.offset, "polynomial added before fitting, e.g. 1 or 1+x+y");
        sub->add_flag("--rotate-pm", o.rotate_pm, "substitute z1 = x-y, z2 = x+y before fitting");
    };

    auto* gen = app.add_subcommand("gen", "write a generator's series as JSON");
    add_generator(gen, true);
    gen->add_option("--output,-o", o.output, "output file (default: standard output)");

    auto* fit = app.add_subcommand("fit", "fit an [M/M] Chisholm approximant");
    add_generator(fit, false);
    add_fit(fit);
    add_preprocess(fit);
    fit->add_option("--input,-i", o.input, "series JSON file");
    fit->add_option("--output,-o", o.output, "approximant file (default: JSON on standard output)");

    auto* eval = app.add_subcommand("eval", "evaluate a Chisholm approximant file");
    eval->add_option("--input,-i", o.input, "approximant JSON file")->required();
    eval->add_option("--point,-p", o.points, "x,y; components may be complex, e.g. 1-2i")->required();
    eval->add_option("--precision", o.precision, "significant digits");

    auto* table = app.add_subcommand("error-table", "fit a generator and compare with its reference on a grid");
    add_generator(table, true);
    add_fit(table);
    add_preprocess(table);
    table->add_option("--grid", o.grid, "v1,v2,... (square) or x1,...:y1,...");
    table->add_option("--point,-p", o.points, "extra real point x,y");
    table->add_option("--format", o.format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));
    table->add_option("--output,-o", o.output, "output file (default: standard output)");

    auto* demo_cmd = app.add_subcommand("demo", "run one of the worked examples end to end");
    demo_cmd->add_option("name", o.source, "one of " + join(demo::names()))->required();
    demo_cmd->add_option("--order,-M", o.order, "override the example's order");
    demo_cmd->add_option("--orders", o.orders, "li22 only: comma-separated orders (default 5..20)");
    demo_cmd->add_option("--format", demo_format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));

    auto* pfit = app.add_subcommand("pade-fit", "fit an [M/M] Pade approximant to a one-variable series");
    add_generator(pfit, false);
    add_fit(pfit);
    pfit->add_option("--input,-i", o.input, "univariate series JSON file");
    pfit->add_option("--output,-o", o.output, "approximant file (default: JSON on standard output)");

    auto* peval = app.add_subcommand("pade-eval", "evaluate a Pade approximant file");
    peval->add_option("--input,-i", o.input, "approximant JSON file")->required();
    peval->add_option("--point,-p", o.points, "z, possibly complex, e.g. 0.5-0.866i")->required();
    peval->add_option("--precision", o.precision, "significant digits");

    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (fit->parsed()) return cmd_fit(o, out, err);
        if (eval->parsed()) return cmd_eval(o, out);
        if (table->parsed()) return cmd_error_table(o, out);
        if (demo_cmd->parsed()) return cmd_demo(o, demo_format, out);
        if (pfit->parsed()) return cmd_pade_fit(o, out, err);
        if (peval->parsed()) return cmd_pade_eval(o, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const order_cap_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_order_cap;
    } catch (const insufficient_terms& e) {
        err << "error: " << e.what() << "\n";
        return exit_insufficient_terms;
    } catch (const singular_system& e) {
        err << "error: " << e.what() << "\n";
        return exit_singular;
    } catch (const not_normalized& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_normalized;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const pole_hit& e) {
        err << "error: " << e.what() << "\n";
        return exit_pole;
    } catch (const parameter_pole& e) {
        err << "error: " << e.what() << "\n";
        return exit_parameter_pole;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace chisholm::cli

#endif // CHISHOLM_TOOLS_CLI_HPP
