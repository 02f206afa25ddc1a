#ifndef CHISHOLM_CHISHOLM_HPP
#define CHISHOLM_CHISHOLM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "pade.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace chisholm {

// (M+1) x (M+1) coefficient grid; row = power of x, column = power of y.
template <class T>
class Grid {
public:
    Grid() = default;
    explicit Grid(int order) : side_(order + 1), data_(static_cast<std::size_t>(side_ * side_), T(0)) {}

    int order() const noexcept { return side_ - 1; }
    T& operator()(int p, int q) { return data_[static_cast<std::size_t>(p * side_ + q)]; }
    const T& operator()(int p, int q) const { return data_[static_cast<std::size_t>(p * side_ + q)]; }

    bool operator==(const Grid&) const = default;

private:
    int side_ = 0;
    std::vector<T> data_;
};

// Diagonal [M/M] Chisholm approximant N(x-a, y-b) / D(x-a, y-b).
template <class T>
struct ChisholmApproximant {
    int order = 0;
    std::pair<T, T> center{};
    Grid<T> num;
    Grid<T> den;

    bool operator==(const ChisholmApproximant&) const = default;
};

struct FitReport {
    int equations_total = 0;
    int equations_symmetrized = 0;
    std::optional<double> residual_max;
};

// What produced one row of the denominator system.
struct EquationLabel {
    enum class Kind { coefficient, symmetrized };
    Kind kind = Kind::coefficient;
    int p = 0;  // coefficient: x power; symmetrized: 2M+1-j
    int q = 0;  // coefficient: y power; symmetrized: j
};

// The square system for the denominator unknowns b_rs, (r,s) != (0,0).
template <class T>
struct DenominatorSystem {
    int order = 0;
    std::vector<std::pair<int, int>> unknowns;
    std::vector<EquationLabel> rows;
    DenseSystem<T> system;
};

namespace detail {

// Adds the b-part of e_pq = sum_{r <= min(p,M), s <= min(q,M)} b_rs c_{p-r,q-s}
// into `row` (one slot per unknown) and its b_00 term into `constant`.
template <class T>
void accumulate_equation(const DoubleSeries<T>& s, int order, int p, int q, const std::vector<int>& slot,
                         std::vector<T>& row, T& constant) {
    const int side = order + 1;
    for (int r = 0; r <= std::min(p, order); ++r) {
        for (int t = 0; t <= std::min(q, order); ++t) {
            const T& c = s.at(p - r, q - t);
            if (scalar_traits<T>::is_zero(c)) continue;
            if (r == 0 && t == 0)
                constant += c;
            else
                row[static_cast<std::size_t>(slot[static_cast<std::size_t>(r * side + t)])] += c;
        }
    }
}

} // namespace detail

// Rows: e_pq = 0 for every p + q <= 2M with p > M or q > M (M(M+1) rows, the
// a-free equations), then e_{2M+1-j,j} + e_{j,2M+1-j} = 0 for j = 1..M.
template <class T>
DenominatorSystem<T> assemble_denominator_system(const DoubleSeries<T>& s, int order) {
    const int M = order;
    const int side = M + 1;
    DenominatorSystem<T> out;
    out.order = M;
    std::vector<int> slot(static_cast<std::size_t>(side * side), -1);
    for (int r = 0; r <= M; ++r)
        for (int t = 0; t <= M; ++t) {
            if (r == 0 && t == 0) continue;
            slot[static_cast<std::size_t>(r * side + t)] = static_cast<int>(out.unknowns.size());
            out.unknowns.emplace_back(r, t);
        }
    const std::size_t n = out.unknowns.size();
    out.system = DenseSystem<T>(n);

    std::size_t row_index = 0;
    auto emit = [&](const std::vector<T>& row, const T& constant, EquationLabel label) {
        for (std::size_t j = 0; j < n; ++j) out.system(row_index, j) = row[j];
        out.system.rhs(row_index) = -constant;
        out.rows.push_back(label);
        ++row_index;
    };

    for (int k = 1; k <= 2 * M; ++k) {
        for (int q = 0; q <= k; ++q) {
            const int p = k - q;
            if (p <= M && q <= M) continue;
            std::vector<T> row(n, T(0));
            T constant(0);
            detail::accumulate_equation(s, M, p, q, slot, row, constant);
            emit(row, constant, {EquationLabel::Kind::coefficient, p, q});
        }
    }
    for (int j = 1; j <= M; ++j) {
        std::vector<T> row(n, T(0));
        T constant(0);
        detail::accumulate_equation(s, M, 2 * M + 1 - j, j, slot, row, constant);
        detail::accumulate_equation(s, M, j, 2 * M + 1 - j, slot, row, constant);
        emit(row, constant, {EquationLabel::Kind::symmetrized, 2 * M + 1 - j, j});
    }
    return out;
}

namespace detail {

// Exact elimination of the denominator system that follows its block
// structure. Index unknowns by level k = min(r, s). The rows e_pk (p > M) touch
// only level-k unknowns b_rk, b_kk and lower levels; the rows e_kq (q > M)
// touch b_kq, b_kk and lower levels. Taking b_kk = t_k as a free parameter,
// each level splits into two (M-k) x (M-k) solves whose right-hand sides are
// affine in t_1..t_k. The M symmetrized rows then fix t. This is a block
// factorization of the same square system, so its determinant is the product
// of the block determinants and the final M x M determinant. Returns nullopt
// when a block is singular; the caller then falls back to dense elimination.
inline std::optional<Grid<Rational>> denominator_by_levels(const DoubleSeries<Rational>& s, int order) {
    using Affine = std::vector<Rational>;
    const int M = order;
    const auto width = static_cast<std::size_t>(M) + 1;
    std::vector<Affine> b(width * width, Affine(width));
    auto B = [&](int r, int t) -> Affine& { return b[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(t)]; };
    B(0, 0)[0] = Rational(1);

    auto known_part = [&](int p, int q, auto include) {
        Affine acc(width);
        for (int r = 0; r <= std::min(p, M); ++r)
            for (int t = 0; t <= std::min(q, M); ++t) {
                if (!include(r, t)) continue;
                const Rational& c = s.at(p - r, q - t);
                if (c.is_zero()) continue;
                const Affine& v = B(r, t);
                for (std::size_t i = 0; i < width; ++i)
                    if (!v[i].is_zero()) acc[i] += c * v[i];
            }
        return acc;
    };

    for (int k = 0; k <= M; ++k) {
        if (k > 0) B(k, k)[static_cast<std::size_t>(k)] = Rational(1);
        const int n = M - k;
        if (n == 0) continue;
        const auto un = static_cast<std::size_t>(n);
        for (int side = 0; side < 2; ++side) {
            std::vector<Rational> matrix(un * un);
            std::vector<std::vector<Rational>> cols(static_cast<std::size_t>(k) + 1, std::vector<Rational>(un));
            for (int i = 0; i < n; ++i) {
                const int far = M + 1 + i;
                for (int j = 0; j < n; ++j) {
                    const int lag = far - (k + 1 + j);
                    matrix[static_cast<std::size_t>(i * n + j)] = side == 0 ? s.at(lag, 0) : s.at(0, lag);
                }
                const Affine rhs = side == 0 ? known_part(far, k, [k](int r, int t) { return !(t == k && r > k); })
                                             : known_part(k, far, [k](int r, int t) { return !(r == k && t > k); });
                for (int c = 0; c <= k; ++c)
                    cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = -rhs[static_cast<std::size_t>(c)];
            }
            std::vector<std::vector<Rational>> sol;
            try {
                sol = solve_many(un, matrix, cols);
            } catch (const singular_system&) {
                return std::nullopt;
            }
            for (int j = 0; j < n; ++j) {
                Affine& target = side == 0 ? B(k + 1 + j, k) : B(k, k + 1 + j);
                for (int c = 0; c <= k; ++c)
                    target[static_cast<std::size_t>(c)] = sol[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
            }
        }
    }

    const auto all = [](int, int) { return true; };
    DenseSystem<Rational> final_system(static_cast<std::size_t>(M));
    for (int j = 1; j <= M; ++j) {
        Affine e = known_part(2 * M + 1 - j, j, all);
        const Affine mirrored = known_part(j, 2 * M + 1 - j, all);
        for (std::size_t i = 0; i < width; ++i) e[i] += mirrored[i];
        for (int l = 1; l <= M; ++l)
            final_system(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) = e[static_cast<std::size_t>(l)];
        final_system.rhs(static_cast<std::size_t>(j - 1)) = -e[0];
    }
    const std::vector<Rational> t = solve(final_system);

    Grid<Rational> den(M);
    for (int r = 0; r <= M; ++r)
        for (int c = 0; c <= M; ++c) {
            const Affine& v = B(r, c);
            Rational value = v[0];
            for (int l = 1; l <= M; ++l)
                if (!v[static_cast<std::size_t>(l)].is_zero()) value += v[static_cast<std::size_t>(l)] * t[static_cast<std::size_t>(l - 1)];
            den(r, c) = value;
        }
    return den;
}

} // namespace detail

// Numerator grid by convolution: a_pq = sum_{r<=p, s<=q} b_rs c_{p-r,q-s}.
template <class T>
Grid<T> numerator_from_denominator(const DoubleSeries<T>& s, const Grid<T>& den) {
    const int M = den.order();
    Grid<T> num(M);
    for (int p = 0; p <= M; ++p)
        for (int q = 0; q <= M; ++q) {
            T acc(0);
            for (int r = 0; r <= p; ++r)
                for (int t = 0; t <= q; ++t) {
                    const T& c = s.at(p - r, q - t);
                    if (scalar_traits<T>::is_zero(c) || scalar_traits<T>::is_zero(den(r, t))) continue;
                    acc += den(r, t) * c;
                }
            num(p, q) = acc;
        }
    return num;
}

template <class T>
struct ResidualEntry {
    int p = 0;
    int q = 0;
    T value{};
};

template <class T>
struct ResidualReport {
    std::vector<ResidualEntry<T>> low_order;    // every e_pq with p + q <= 2M
    std::vector<ResidualEntry<T>> symmetrized;  // e_{2M+1-j,j} + e_{j,2M+1-j}, stored at (2M+1-j, j)
    double max_abs = 0.0;

    bool all_zero() const {
        auto zero = [](const ResidualEntry<T>& e) { return scalar_traits<T>::is_zero(e.value); };
        return std::all_of(low_order.begin(), low_order.end(), zero) &&
               std::all_of(symmetrized.begin(), symmetrized.end(), zero);
    }
};

// Coefficients of D * f - N through total degree 2M, plus the M symmetrized
// sums at degree 2M + 1. All vanish for a correct fit.
template <class T>
ResidualReport<T> taylor_residuals(const ChisholmApproximant<T>& ca, const DoubleSeries<T>& s) {
    const int M = ca.order;
    auto e = [&](int p, int q) {
        T acc(0);
        for (int r = 0; r <= std::min(p, M); ++r)
            for (int t = 0; t <= std::min(q, M); ++t) {
                if (!s.is_known(p - r, q - t))
                    throw insufficient_terms("taylor_residuals: series lacks coefficient (" +
                                                 std::to_string(p - r) + "," + std::to_string(q - t) + ")",
                                             {{p - r, q - t}});
                acc += ca.den(r, t) * s.at(p - r, q - t);
            }
        if (p <= M && q <= M) acc -= ca.num(p, q);
        return acc;
    };
    ResidualReport<T> out;
    auto track = [&](const T& v) { out.max_abs = std::max(out.max_abs, scalar_traits<T>::magnitude(v)); };
    for (int k = 0; k <= 2 * M; ++k)
        for (int q = 0; q <= k; ++q) {
            T v = e(k - q, q);
            track(v);
            out.low_order.push_back({k - q, q, std::move(v)});
        }
    for (int j = 1; j <= M; ++j) {
        T v = e(2 * M + 1 - j, j) + e(j, 2 * M + 1 - j);
        track(v);
        out.symmetrized.push_back({2 * M + 1 - j, j, std::move(v)});
    }
    return out;
}

// Denominator grid from one dense solve of the assembled system.
template <class T>
Grid<T> solve_denominator_dense(const DoubleSeries<T>& s, int order) {
    const auto dsys = assemble_denominator_system(s, order);
    const std::vector<T> b = solve(dsys.system);
    Grid<T> den(order);
    den(0, 0) = T(1);
    for (std::size_t i = 0; i < dsys.unknowns.size(); ++i) den(dsys.unknowns[i].first, dsys.unknowns[i].second) = b[i];
    return den;
}

// Diagonal [M/M] Chisholm approximant of a series with c00 = 1. The
// denominator system ((M+1)^2 - 1 unknowns) is solved first; the numerator
// follows by convolution. Together these are 2M^2 + 4M constraints.
template <class T>
std::pair<ChisholmApproximant<T>, FitReport> fit_diagonal(const DoubleSeries<T>& s, int order) {
    if (order < 1) throw error("chisholm: order must be at least 1");
    const auto support = has_chisholm_support(s, order);
    if (!support.ok) {
        std::string list;
        for (std::size_t i = 0; i < support.missing.size() && i < 8; ++i)
            list += (i ? " " : "") + std::string("x^") + std::to_string(support.missing[i].first) + "y^" +
                    std::to_string(support.missing[i].second);
        if (support.missing.size() > 8) list += " ...";
        throw insufficient_terms(
            "Equations may not give solutions for all solve variables: [" + std::to_string(order) + "/" +
                std::to_string(order) + "] needs every term with total degree <= " + std::to_string(2 * order + 1) +
                " (except the two pure powers of that degree); missing " + list,
            support.missing);
    }
    if (s.at(0, 0) != T(1)) throw not_normalized("chisholm: fit requires c00 = 1 (rescale or add an offset first)");

    ChisholmApproximant<T> ca;
    ca.order = order;
    ca.center = s.center();
    // The b00 = 1 column is the right-hand side; when it vanishes, den = 1
    // solves the system even if it is singular (e.g. a constant series).
    bool zero_rhs = true;
    for (int p = 0; p <= 2 * order && zero_rhs; ++p)
        for (int q = 0; p + q <= 2 * order; ++q)
            if ((p > order || q > order) && !scalar_traits<T>::is_zero(s.at(p, q))) {
                zero_rhs = false;
                break;
            }
    for (int j = 1; j <= order && zero_rhs; ++j)
        zero_rhs = scalar_traits<T>::is_zero(s.at(2 * order + 1 - j, j) + s.at(j, 2 * order + 1 - j));
    try {
        std::optional<Grid<T>> den;
        if (zero_rhs) {
            den = Grid<T>(order);
            (*den)(0, 0) = T(1);
        }
        if constexpr (is_exact_v<T>)
            if (!den) den = detail::denominator_by_levels(s, order);
        if (!den) den = solve_denominator_dense(s, order);
        ca.den = std::move(*den);
    } catch (const singular_system&) {
        throw singular_system("chisholm: [" + std::to_string(order) + "/" + std::to_string(order) +
                              "] approximant does not exist for this series (singular consistency equations)");
    }
    ca.num = numerator_from_denominator(s, ca.den);

    FitReport report;
    report.equations_total = 2 * order * order + 4 * order;
    report.equations_symmetrized = order;
    if constexpr (!is_exact_v<T>) report.residual_max = taylor_residuals(ca, s).max_abs;
    return {std::move(ca), report};
}

// Fit for c00 != 0: divides by c00, fits, multiplies the numerator back.
template <class T>
std::pair<ChisholmApproximant<T>, FitReport> fit_scaled(const DoubleSeries<T>& s, int order) {
    auto [unit, scale] = scale_to_unit_constant(s);
    auto result = fit_diagonal(unit, order);
    for (int p = 0; p <= order; ++p)
        for (int q = 0; q <= order; ++q) result.first.num(p, q) *= scale;
    return result;
}

namespace detail {

template <class U, class T>
U horner2(const Grid<T>& g, const U& x, const U& y) {
    const int M = g.order();
    U outer(0);
    for (int p = M; p >= 0; --p) {
        U inner(0);
        for (int q = M; q >= 0; --q) inner = inner * y + scalar_cast<U>(g(p, q));
        outer = outer * x + inner;
    }
    return outer;
}

} // namespace detail

template <class U, class T>
U evaluate(const ChisholmApproximant<T>& ca, const U& x, const U& y) {
    const U dx = x - scalar_cast<U>(ca.center.first);
    const U dy = y - scalar_cast<U>(ca.center.second);
    const U den = detail::horner2(ca.den, dx, dy);
    detail::check_denominator(den);
    return detail::horner2(ca.num, dx, dy) / den;
}

// Evaluation of an approximant that was fitted in mapped variables (X, Y),
// e.g. X = -x/y, Y = 1/y or the inverse rotation. The caller computes the
// mapped coordinates; this is the same rational function as evaluate().
template <class U, class T>
U evaluate_mapped(const ChisholmApproximant<T>& ca, const U& X, const U& Y) {
    return evaluate(ca, X, Y);
}

template <class T>
ChisholmApproximant<T> reciprocal(const ChisholmApproximant<T>& ca) {
    ChisholmApproximant<T> out = ca;
    std::swap(out.num, out.den);
    return out;
}

template <class T>
PadeApproximant<T> reduce_to_pade(const ChisholmApproximant<T>& ca) {
    PadeApproximant<T> out;
    out.order = ca.order;
    out.center = ca.center.first;
    for (int i = 0; i <= ca.order; ++i) {
        out.p.push_back(ca.num(i, 0));
        out.q.push_back(ca.den(i, 0));
    }
    return out;
}

template <class U, class T>
ChisholmApproximant<U> approximant_cast(const ChisholmApproximant<T>& ca) {
    ChisholmApproximant<U> out;
    out.order = ca.order;
    out.center = {scalar_cast<U>(ca.center.first), scalar_cast<U>(ca.center.second)};
    out.num = Grid<U>(ca.order);
    out.den = Grid<U>(ca.order);
    for (int p = 0; p <= ca.order; ++p)
        for (int q = 0; q <= ca.order; ++q) {
            out.num(p, q) = scalar_cast<U>(ca.num(p, q));
            out.den(p, q) = scalar_cast<U>(ca.den(p, q));
        }
    return out;
}

} // namespace chisholm

#endif // CHISHOLM_CHISHOLM_HPP
