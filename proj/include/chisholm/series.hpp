#ifndef CHISHOLM_SERIES_HPP
#define CHISHOLM_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace chisholm {

// Truncated univariate Taylor series sum_k a_k (x - center)^k, k = 0..degree.
template <class T>
class UniSeries {
public:
    UniSeries() : UniSeries(0) {}
    explicit UniSeries(int degree, T center = T(0))
        : center_(std::move(center)), coeffs_(static_cast<std::size_t>(check_degree(degree)) + 1, T(0)) {}
    UniSeries(std::vector<T> coeffs, T center = T(0)) : center_(std::move(center)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw error("UniSeries: coefficient vector must be non-empty");
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const T& center() const noexcept { return center_; }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool operator==(const UniSeries&) const = default;

private:
    static int check_degree(int d) {
        if (d < 0) throw error("UniSeries: negative degree");
        return d;
    }

    T center_;
    std::vector<T> coeffs_;
};

// Truncated bivariate Taylor series sum c_mn (x-a)^m (y-b)^n over total degree
// m + n <= degree, with an explicit known-support mask: a known zero and a
// coefficient that was never supplied are different things. Every index beyond
// the degree bound is unknown.
template <class T>
class DoubleSeries {
public:
    DoubleSeries() : DoubleSeries(0) {}

    // All coefficients up to `degree` known and zero.
    explicit DoubleSeries(int degree, std::pair<T, T> center = {T(0), T(0)})
        : degree_(degree), center_(std::move(center)) {
        if (degree < 0) throw error("DoubleSeries: negative degree");
        const auto n = slots(degree);
        coeffs_.assign(n, T(0));
        known_.assign(n, true);
    }

    // Same shape, nothing known.
    static DoubleSeries unknown(int degree, std::pair<T, T> center = {T(0), T(0)}) {
        DoubleSeries s(degree, std::move(center));
        std::fill(s.known_.begin(), s.known_.end(), false);
        return s;
    }

    int degree() const noexcept { return degree_; }
    const std::pair<T, T>& center() const noexcept { return center_; }

    bool is_known(int m, int n) const {
        return m >= 0 && n >= 0 && m + n <= degree_ && known_[index(m, n)];
    }

    // nullopt marks an unknown coefficient.
    std::optional<T> coefficient(int m, int n) const {
        if (!is_known(m, n)) return std::nullopt;
        return coeffs_[index(m, n)];
    }

    // Unchecked read; only valid for known indices.
    const T& at(int m, int n) const { return coeffs_[index(m, n)]; }

    void set(int m, int n, T value) {
        require_in_range(m, n);
        coeffs_[index(m, n)] = std::move(value);
        known_[index(m, n)] = true;
    }

    void forget(int m, int n) {
        require_in_range(m, n);
        coeffs_[index(m, n)] = T(0);
        known_[index(m, n)] = false;
    }

    // Known coefficients over total degree <= d and everything above unknown.
    void truncate_known(int d) {
        for (int k = std::max(d + 1, 0); k <= degree_; ++k)
            for (int n = 0; n <= k; ++n) forget(k - n, n);
    }

    bool operator==(const DoubleSeries&) const = default;

private:
    static std::size_t slots(int degree) {
        return static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
    }
    static std::size_t index(int m, int n) {
        const auto k = static_cast<std::size_t>(m + n);
        return k * (k + 1) / 2 + static_cast<std::size_t>(n);
    }
    void require_in_range(int m, int n) const {
        if (m < 0 || n < 0 || m + n > degree_)
            throw error("DoubleSeries: index (" + std::to_string(m) + "," + std::to_string(n) +
                        ") outside total degree " + std::to_string(degree_));
    }

    int degree_ = 0;
    std::pair<T, T> center_;
    std::vector<T> coeffs_;
    std::vector<bool> known_;
};

// x = sx(u), y = sy(v), both without constant term.
template <class T>
struct SeparableMap {
    UniSeries<T> sx;
    UniSeries<T> sy;

    SeparableMap(UniSeries<T> x_map, UniSeries<T> y_map) : sx(std::move(x_map)), sy(std::move(y_map)) {
        if (!scalar_traits<T>::is_zero(sx[0]) || !scalar_traits<T>::is_zero(sy[0]))
            throw error("SeparableMap: component series must have zero constant term");
    }

    static SeparableMap identity(int degree) {
        UniSeries<T> id(std::max(degree, 1));
        id[1] = T(1);
        return SeparableMap(id, id);
    }

    // Power-series expansion of A t / (1 - B t) = sum_{k>=1} A B^{k-1} t^k, used
    // for both variables.
    static SeparableMap homographic(const T& A, const T& B, int degree) {
        UniSeries<T> s(std::max(degree, 1));
        T term = A;
        for (int k = 1; k <= s.degree(); ++k) {
            s[k] = term;
            term *= B;
        }
        return SeparableMap(s, s);
    }
};

// One term c x^m y^n of a small correction polynomial.
template <class T>
struct Monomial {
    int m = 0;
    int n = 0;
    T c{};
};

template <class T>
using Polynomial = std::vector<Monomial<T>>;

template <class T>
std::optional<T> coefficient(const DoubleSeries<T>& s, int m, int n) {
    return s.coefficient(m, n);
}

struct SupportCheck {
    bool ok = true;
    std::vector<std::pair<int, int>> missing;
};

// Every c_{ab} with a + b <= 2M + 1 must be known, except the two pure powers
// of degree 2M + 1.
template <class T>
SupportCheck has_chisholm_support(const DoubleSeries<T>& s, int order) {
    SupportCheck out;
    const int top = 2 * order + 1;
    for (int k = 0; k <= top; ++k) {
        for (int n = 0; n <= k; ++n) {
            const int m = k - n;
            if (k == top && (m == 0 || n == 0)) continue;
            if (!s.is_known(m, n)) out.missing.emplace_back(m, n);
        }
    }
    out.ok = out.missing.empty();
    return out;
}

// Divides by c00 so the constant term becomes exactly one; returns the factor.
template <class T>
std::pair<DoubleSeries<T>, T> scale_to_unit_constant(const DoubleSeries<T>& s) {
    auto c00 = s.coefficient(0, 0);
    if (!c00) throw not_normalized("constant coefficient is unknown; add a polynomial offset first");
    if (scalar_traits<T>::is_zero(*c00))
        throw not_normalized("constant coefficient is zero; add a polynomial offset (e.g. 1 or 1+x+y) first");
    DoubleSeries<T> out = s;
    const T scale = *c00;
    for (int k = 0; k <= s.degree(); ++k)
        for (int n = 0; n <= k; ++n)
            if (s.is_known(k - n, n)) out.set(k - n, n, s.at(k - n, n) / scale);
    out.set(0, 0, T(1));
    return {std::move(out), scale};
}

// Coefficientwise sum; the polynomial's indices become known even where the
// series had them unknown.
template <class T>
DoubleSeries<T> add_polynomial(const DoubleSeries<T>& s, const Polynomial<T>& p) {
    DoubleSeries<T> out = s;
    for (const auto& term : p) {
        if (term.m + term.n > s.degree())
            throw error("add_polynomial: term degree exceeds the series degree bound");
        T base = s.is_known(term.m, term.n) ? s.at(term.m, term.n) : T(0);
        out.set(term.m, term.n, base + term.c);
    }
    return out;
}

template <class T, class U>
U evaluate_polynomial(const Polynomial<T>& p, const U& x, const U& y) {
    U acc(0);
    for (const auto& term : p) {
        U t = scalar_cast<U>(term.c);
        for (int i = 0; i < term.m; ++i) t *= x;
        for (int i = 0; i < term.n; ++i) t *= y;
        acc += t;
    }
    return acc;
}

namespace detail {

// Coefficients of (alpha x + beta y)^k as a vector indexed by the power of y.
template <class T>
std::vector<std::vector<T>> linear_form_powers(const T& alpha, const T& beta, int degree) {
    std::vector<std::vector<T>> pw(static_cast<std::size_t>(degree) + 1);
    pw[0] = {T(1)};
    for (int k = 1; k <= degree; ++k) {
        const auto& prev = pw[static_cast<std::size_t>(k - 1)];
        std::vector<T> cur(static_cast<std::size_t>(k) + 1, T(0));
        for (int j = 0; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] += alpha * prev[static_cast<std::size_t>(j)];
            cur[static_cast<std::size_t>(j) + 1] += beta * prev[static_cast<std::size_t>(j)];
        }
        pw[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return pw;
}

template <class T>
UniSeries<T> truncated_product(const UniSeries<T>& a, const UniSeries<T>& b, int degree) {
    UniSeries<T> out(degree);
    for (int i = 0; i <= std::min(a.degree(), degree); ++i) {
        if (scalar_traits<T>::is_zero(a[i])) continue;
        for (int j = 0; j <= std::min(b.degree(), degree - i); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace detail

// Re-expands s(u, w) with u = a11 x + a12 y and w = a21 x + a22 y. The map is
// homogeneous, so total degree k of the result is known exactly when every
// input coefficient of total degree k is known.
template <class T>
DoubleSeries<T> linear_substitute(const DoubleSeries<T>& s, const T& a11, const T& a12, const T& a21,
                                  const T& a22) {
    const int D = s.degree();
    const auto first = detail::linear_form_powers(a11, a12, D);
    const auto second = detail::linear_form_powers(a21, a22, D);
    DoubleSeries<T> out(D, s.center());
    for (int k = 0; k <= D; ++k) {
        bool complete = true;
        for (int n = 0; n <= k; ++n) complete = complete && s.is_known(k - n, n);
        if (!complete) {
            for (int n = 0; n <= k; ++n) out.forget(k - n, n);
            continue;
        }
        std::vector<T> acc(static_cast<std::size_t>(k) + 1, T(0));
        for (int n = 0; n <= k; ++n) {
            const int m = k - n;
            const T& c = s.at(m, n);
            if (scalar_traits<T>::is_zero(c)) continue;
            const auto& pm = first[static_cast<std::size_t>(m)];
            const auto& pn = second[static_cast<std::size_t>(n)];
            for (int i = 0; i <= m; ++i) {
                if (scalar_traits<T>::is_zero(pm[static_cast<std::size_t>(i)])) continue;
                const T ci = c * pm[static_cast<std::size_t>(i)];
                for (int j = 0; j <= n; ++j) acc[static_cast<std::size_t>(i + j)] += ci * pn[static_cast<std::size_t>(j)];
            }
        }
        for (int yp = 0; yp <= k; ++yp) out.set(k - yp, yp, acc[static_cast<std::size_t>(yp)]);
    }
    return out;
}

// z1 -> x - y, z2 -> x + y.
template <class T>
DoubleSeries<T> rotate_pm(const DoubleSeries<T>& s) {
    if (!scalar_traits<T>::is_zero(s.center().first) || !scalar_traits<T>::is_zero(s.center().second))
        throw error("rotate_pm: series must be centered at the origin");
    return linear_substitute(s, T(1), T(-1), T(1), T(1));
}

// Inverse of rotate_pm: x -> (z1 + z2)/2, y -> (z2 - z1)/2.
template <class T>
DoubleSeries<T> unrotate_pm(const DoubleSeries<T>& s) {
    const T half = T(1) / T(2);
    return linear_substitute(s, half, half, -half, half);
}

// c'_{ij} = sum c_mn [u^i] sx(u)^m [v^j] sy(v)^n over i + j <= degree.
template <class T>
DoubleSeries<T> compose_separable(const DoubleSeries<T>& s, const SeparableMap<T>& map, int degree) {
    if (degree > s.degree()) throw error("compose_separable: degree exceeds the input degree bound");
    std::vector<UniSeries<T>> px{UniSeries<T>(std::vector<T>{T(1)})};
    std::vector<UniSeries<T>> py{UniSeries<T>(std::vector<T>{T(1)})};
    UniSeries<T> sx(degree), sy(degree);
    for (int k = 0; k <= std::min(degree, map.sx.degree()); ++k) sx[k] = map.sx[k];
    for (int k = 0; k <= std::min(degree, map.sy.degree()); ++k) sy[k] = map.sy[k];
    for (int k = 1; k <= degree; ++k) {
        px.push_back(detail::truncated_product(px.back(), sx, degree));
        py.push_back(detail::truncated_product(py.back(), sy, degree));
    }
    auto at = [](const UniSeries<T>& u, int k) { return k <= u.degree() ? u[k] : T(0); };

    DoubleSeries<T> out(degree, {T(0), T(0)});
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            T acc(0);
            bool known = true;
            for (int m = 0; m <= i && known; ++m) {
                const T xm = at(px[static_cast<std::size_t>(m)], i);
                for (int n = 0; n <= j; ++n) {
                    if (!s.is_known(m, n)) {
                        known = false;
                        break;
                    }
                    if (scalar_traits<T>::is_zero(xm)) continue;
                    acc += s.at(m, n) * xm * at(py[static_cast<std::size_t>(n)], j);
                }
            }
            if (known)
                out.set(i, j, acc);
            else
                out.forget(i, j);
        }
    }
    return out;
}

// Truncated product over total degree <= degree.
template <class T>
DoubleSeries<T> multiply(const DoubleSeries<T>& a, const DoubleSeries<T>& b, int degree) {
    DoubleSeries<T> out(degree, a.center());
    for (int m = 0; m <= degree; ++m) {
        for (int n = 0; m + n <= degree; ++n) {
            T acc(0);
            bool known = true;
            for (int i = 0; i <= m && known; ++i) {
                for (int j = 0; j <= n; ++j) {
                    if (!a.is_known(i, j) || !b.is_known(m - i, n - j)) {
                        known = false;
                        break;
                    }
                    acc += a.at(i, j) * b.at(m - i, n - j);
                }
            }
            if (known)
                out.set(m, n, acc);
            else
                out.forget(m, n);
        }
    }
    return out;
}

// d with (s * d) = 1 through total degree `degree`, by the recursion
// d_mn = -sum_{(i,j) != (0,0)} c_ij d_{m-i,n-j}.
template <class T>
DoubleSeries<T> truncated_reciprocal(const DoubleSeries<T>& s, int degree) {
    auto c00 = s.coefficient(0, 0);
    if (!c00 || *c00 != T(1)) throw not_normalized("truncated_reciprocal requires c00 = 1");
    DoubleSeries<T> d(degree, s.center());
    d.set(0, 0, T(1));
    for (int k = 1; k <= degree; ++k) {
        for (int n = 0; n <= k; ++n) {
            const int m = k - n;
            T acc(0);
            bool known = true;
            for (int i = 0; i <= m && known; ++i) {
                for (int j = 0; j <= n; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (!s.is_known(i, j) || !d.is_known(m - i, n - j)) {
                        known = false;
                        break;
                    }
                    if (scalar_traits<T>::is_zero(s.at(i, j))) continue;
                    acc -= s.at(i, j) * d.at(m - i, n - j);
                }
            }
            if (known)
                d.set(m, n, acc);
            else
                d.forget(m, n);
        }
    }
    return d;
}

// sum_m c_{m,0} x^m, stopping before the first unknown coefficient.
template <class T>
UniSeries<T> slice_y0(const DoubleSeries<T>& s) {
    std::vector<T> coeffs;
    for (int m = 0; m <= s.degree() && s.is_known(m, 0); ++m) coeffs.push_back(s.at(m, 0));
    if (coeffs.empty()) coeffs.push_back(T(0));
    return UniSeries<T>(std::move(coeffs), s.center().first);
}

template <class T>
DoubleSeries<T> swap_xy(const DoubleSeries<T>& s) {
    DoubleSeries<T> out(s.degree(), {s.center().second, s.center().first});
    for (int k = 0; k <= s.degree(); ++k)
        for (int n = 0; n <= k; ++n) {
            if (s.is_known(k - n, n))
                out.set(n, k - n, s.at(k - n, n));
            else
                out.forget(n, k - n);
        }
    return out;
}

template <class U, class T>
DoubleSeries<U> series_cast(const DoubleSeries<T>& s) {
    DoubleSeries<U> out(s.degree(), {scalar_cast<U>(s.center().first), scalar_cast<U>(s.center().second)});
    for (int k = 0; k <= s.degree(); ++k)
        for (int n = 0; n <= k; ++n) {
            if (s.is_known(k - n, n))
                out.set(k - n, n, scalar_cast<U>(s.at(k - n, n)));
            else
                out.forget(k - n, n);
        }
    return out;
}

// The truncated polynomial sum c_mn (x-a)^m (y-b)^n over the known terms.
template <class U, class T>
U evaluate_truncation(const DoubleSeries<T>& s, const U& x, const U& y) {
    const U dx = x - scalar_cast<U>(s.center().first);
    const U dy = y - scalar_cast<U>(s.center().second);
    U total(0), xm(1);
    for (int m = 0; m <= s.degree(); ++m) {
        U term = xm;
        for (int n = 0; m + n <= s.degree(); ++n) {
            if (s.is_known(m, n)) total += term * scalar_cast<U>(s.at(m, n));
            term *= dy;
        }
        xm *= dx;
    }
    return total;
}

template <class U, class T>
UniSeries<U> series_cast(const UniSeries<T>& s) {
    std::vector<U> c;
    c.reserve(s.coeffs().size());
    for (const auto& v : s.coeffs()) c.push_back(scalar_cast<U>(v));
    return UniSeries<U>(std::move(c), scalar_cast<U>(s.center()));
}

} // namespace chisholm

#endif // CHISHOLM_SERIES_HPP
