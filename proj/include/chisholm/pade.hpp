#ifndef CHISHOLM_PADE_HPP
#define CHISHOLM_PADE_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace chisholm {

// [M/M] Padé approximant P(x - a) / Q(x - a), q_0 = 1.
template <class T>
struct PadeApproximant {
    int order = 0;
    T center{};
    std::vector<T> p;
    std::vector<T> q;

    bool operator==(const PadeApproximant&) const = default;
};

// Solves the M equations 0 = a_{M+i} + sum_j a_{M+i-j} q_j (i = 1..M) for q,
// then fills p by convolution. The series is divided by a_0 first and the
// numerator scaled back on return.
template <class T>
PadeApproximant<T> fit_diagonal(const UniSeries<T>& s, int order) {
    if (order < 0) throw error("pade: order must be nonnegative");
    if (s.degree() < 2 * order) {
        std::vector<std::pair<int, int>> missing;
        for (int k = s.degree() + 1; k <= 2 * order; ++k) missing.emplace_back(k, 0);
        throw insufficient_terms("pade: [" + std::to_string(order) + "/" + std::to_string(order) +
                                     "] needs coefficients through order " + std::to_string(2 * order) +
                                     ", series stops at " + std::to_string(s.degree()),
                                 std::move(missing));
    }
    if (scalar_traits<T>::is_zero(s[0]))
        throw not_normalized("pade: a_0 = 0; add a constant to the series before fitting");

    const T a0 = s[0];
    std::vector<T> a(static_cast<std::size_t>(2 * order) + 1);
    for (int k = 0; k <= 2 * order; ++k) a[static_cast<std::size_t>(k)] = s[k] / a0;
    auto coef = [&](int k) { return k < 0 ? T(0) : a[static_cast<std::size_t>(k)]; };

    PadeApproximant<T> out;
    out.order = order;
    out.center = s.center();
    out.q.assign(static_cast<std::size_t>(order) + 1, T(0));
    out.q[0] = T(1);
    bool polynomial = true;  // a_{M+1..2M} = 0: q = 1 solves the system, singular or not
    for (int k = order + 1; k <= 2 * order; ++k) polynomial = polynomial && scalar_traits<T>::is_zero(coef(k));
    if (order > 0 && !polynomial) {
        DenseSystem<T> sys(static_cast<std::size_t>(order));
        for (int i = 1; i <= order; ++i) {
            for (int j = 1; j <= order; ++j)
                sys(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = coef(order + i - j);
            sys.rhs(static_cast<std::size_t>(i - 1)) = -coef(order + i);
        }
        std::vector<T> q;
        try {
            q = solve(sys);
        } catch (const singular_system&) {
            throw singular_system("pade: [" + std::to_string(order) + "/" + std::to_string(order) +
                                  "] approximant does not exist for this series");
        }
        for (int j = 1; j <= order; ++j) out.q[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)];
    }
    out.p.assign(static_cast<std::size_t>(order) + 1, T(0));
    for (int i = 0; i <= order; ++i) {
        T acc(0);
        for (int j = 0; j <= i; ++j) acc += coef(i - j) * out.q[static_cast<std::size_t>(j)];
        out.p[static_cast<std::size_t>(i)] = acc * a0;
    }
    return out;
}

namespace detail {

template <class U, class T>
U horner(const std::vector<T>& c, const U& t) {
    U acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + scalar_cast<U>(*it);
    return acc;
}

template <class U>
void check_denominator(const U& den) {
    if constexpr (is_exact_v<U>) {
        if (scalar_traits<U>::is_zero(den)) throw pole_hit("evaluation point is a pole of the approximant");
    } else {
        if (scalar_traits<U>::magnitude(den) < 1e-300)
            throw pole_hit("evaluation point is a pole of the approximant");
    }
}

} // namespace detail

template <class U, class T>
U evaluate(const PadeApproximant<T>& pa, const U& z) {
    const U t = z - scalar_cast<U>(pa.center);
    const U den = detail::horner(pa.q, t);
    detail::check_denominator(den);
    return detail::horner(pa.p, t) / den;
}

template <class U, class T>
PadeApproximant<U> approximant_cast(const PadeApproximant<T>& pa) {
    PadeApproximant<U> out;
    out.order = pa.order;
    out.center = scalar_cast<U>(pa.center);
    for (const auto& v : pa.p) out.p.push_back(scalar_cast<U>(v));
    for (const auto& v : pa.q) out.q.push_back(scalar_cast<U>(v));
    return out;
}

} // namespace chisholm

#endif // CHISHOLM_PADE_HPP
