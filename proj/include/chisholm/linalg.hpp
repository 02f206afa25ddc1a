#ifndef CHISHOLM_LINALG_HPP
#define CHISHOLM_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmp.h>

#include "errors.hpp"
#include "scalar.hpp"

namespace chisholm {

// Square system matrix * x = rhs, row-major.
template <class T>
class DenseSystem {
public:
    DenseSystem() = default;
    explicit DenseSystem(std::size_t n) : n_(n), matrix_(n * n, T(0)), rhs_(n, T(0)) {}

    DenseSystem(std::size_t n, std::vector<T> matrix, std::vector<T> rhs)
        : n_(n), matrix_(std::move(matrix)), rhs_(std::move(rhs)) {
        if (matrix_.size() != n_ * n_ || rhs_.size() != n_)
            throw error("DenseSystem: matrix/rhs dimensions do not match n=" + std::to_string(n_));
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t row, std::size_t col) { return matrix_[row * n_ + col]; }
    const T& operator()(std::size_t row, std::size_t col) const { return matrix_[row * n_ + col]; }

    T& rhs(std::size_t row) { return rhs_[row]; }
    const T& rhs(std::size_t row) const { return rhs_[row]; }

    const std::vector<T>& matrix() const noexcept { return matrix_; }
    const std::vector<T>& rhs() const noexcept { return rhs_; }

    // Same system with rows reordered: row i of the result is row perm[i] of this.
    DenseSystem permuted(const std::vector<std::size_t>& perm) const {
        DenseSystem out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(perm[i], j);
            out.rhs(i) = rhs_[perm[i]];
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> matrix_;
    std::vector<T> rhs_;
};

namespace detail {

// RAII holder for a row-major grid of mpz_t; the elimination kernel works on
// raw GMP integers to avoid temporaries in the inner loop.
class MpzGrid {
public:
    MpzGrid(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows * cols) {
        for (auto& z : data_) mpz_init(z.v);
    }
    ~MpzGrid() {
        for (auto& z : data_) mpz_clear(z.v);
    }
    MpzGrid(const MpzGrid&) = delete;
    MpzGrid& operator=(const MpzGrid&) = delete;

    mpz_ptr at(std::size_t r, std::size_t c) { return data_[r * cols_ + c].v; }

private:
    struct Cell {
        mpz_t v;
    };
    std::size_t cols_;
    std::vector<Cell> data_;
};

class Mpz {
public:
    Mpz() { mpz_init(v); }
    ~Mpz() { mpz_clear(v); }
    Mpz(const Mpz&) = delete;
    Mpz& operator=(const Mpz&) = delete;
    mpz_t v;
};

inline BigInt to_bigint(mpz_srcptr z) {
    BigInt out;
    mpz_set(out.backend().data(), z);
    return out;
}

// Fraction-free (Bareiss) elimination of an n x n rational matrix against
// several right-hand sides at once. Each row is first scaled to integers;
// after step k every entry of the active block is a (k+1)-minor of the integer
// matrix, so the division by the previous pivot is exact and intermediate
// growth stays polynomial. Returns one solution vector per right-hand side.
inline std::vector<std::vector<Rational>> bareiss_solve(std::size_t n, const std::vector<Rational>& matrix,
                                                        const std::vector<std::vector<Rational>>& rhs) {
    const std::size_t k_rhs = rhs.size();
    const std::size_t w = n + k_rhs;
    auto entry = [&](std::size_t i, std::size_t j) -> const Rational& {
        return j < n ? matrix[i * n + j] : rhs[j - n][i];
    };

    MpzGrid a(n, w);
    {
        Mpz scale;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_set_ui(scale.v, 1);
            for (std::size_t j = 0; j < w; ++j) mpz_lcm(scale.v, scale.v, mpq_denref(entry(i, j).backend().data()));
            for (std::size_t j = 0; j < w; ++j) {
                const Rational& q = entry(i, j);
                mpz_divexact(a.at(i, j), scale.v, mpq_denref(q.backend().data()));
                mpz_mul(a.at(i, j), a.at(i, j), mpq_numref(q.backend().data()));
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    Mpz prev, t;
    mpz_set_ui(prev.v, 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (mpz_sgn(a.at(order[i], k)) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n)
            throw singular_system("singular system: no nonzero pivot in column " + std::to_string(k));
        std::swap(order[k], order[pivot]);
        mpz_ptr pk = a.at(order[k], k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::size_t ri = order[i];
            mpz_ptr aik = a.at(ri, k);
            const bool zero_lead = mpz_sgn(aik) == 0;
            for (std::size_t j = k + 1; j < w; ++j) {
                mpz_ptr aij = a.at(ri, j);
                if (zero_lead) {
                    if (mpz_sgn(aij) == 0) continue;
                    mpz_mul(t.v, aij, pk);
                } else {
                    mpz_mul(t.v, aij, pk);
                    mpz_submul(t.v, aik, a.at(order[k], j));
                }
                mpz_divexact(aij, t.v, prev.v);
            }
            mpz_set_ui(aik, 0);
        }
        mpz_set(prev.v, pk);
    }

    std::vector<std::vector<Rational>> x(k_rhs, std::vector<Rational>(n));
    for (std::size_t c = 0; c < k_rhs; ++c) {
        auto& xc = x[c];
        for (std::size_t kk = n; kk-- > 0;) {
            const std::size_t r = order[kk];
            Rational acc(to_bigint(a.at(r, n + c)));
            for (std::size_t j = kk + 1; j < n; ++j) {
                if (mpz_sgn(a.at(r, j)) == 0 || xc[j].is_zero()) continue;
                acc -= Rational(to_bigint(a.at(r, j))) * xc[j];
            }
            xc[kk] = acc / Rational(to_bigint(a.at(r, kk)));
        }
    }
    return x;
}

} // namespace detail

// Exact solve; see detail::bareiss_solve.
inline std::vector<Rational> solve(const DenseSystem<Rational>& system) {
    if (system.size() == 0) return {};
    return detail::bareiss_solve(system.size(), system.matrix(), {system.rhs()}).front();
}

// Exact solve of matrix * X = [rhs_0 ... rhs_k] sharing one elimination.
inline std::vector<std::vector<Rational>> solve_many(std::size_t n, const std::vector<Rational>& matrix,
                                                     const std::vector<std::vector<Rational>>& rhs) {
    if (matrix.size() != n * n) throw error("solve_many: matrix is not n x n");
    for (const auto& col : rhs)
        if (col.size() != n) throw error("solve_many: right-hand side length differs from n");
    if (n == 0) return std::vector<std::vector<Rational>>(rhs.size());
    return detail::bareiss_solve(n, matrix, rhs);
}

// Floating solve with partial pivoting. A pivot is rejected when its
// magnitude falls below 1e-12 times the largest initial magnitude in its
// column.
template <class T>
std::vector<T> solve_floating(const DenseSystem<T>& system) {
    constexpr double relative_threshold = 1e-12;
    const std::size_t n = system.size();
    std::vector<T> a = system.matrix();
    std::vector<T> b = system.rhs();

    std::vector<double> column_scale(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            column_scale[j] = std::max(column_scale[j], scalar_traits<T>::magnitude(a[i * n + j]));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = scalar_traits<T>::magnitude(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            double m = scalar_traits<T>::magnitude(a[i * n + k]);
            if (m > best) {
                best = m;
                pivot = i;
            }
        }
        if (!(best >= relative_threshold * column_scale[k]) || best == 0.0)
            throw singular_system("singular system: pivot below threshold in column " + std::to_string(k));
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            std::swap(b[k], b[pivot]);
        }
        const T pk = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = a[i * n + k] / pk;
            if (scalar_traits<T>::is_zero(f)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
            b[i] -= f * b[k];
            a[i * n + k] = T(0);
        }
    }
    std::vector<T> x(n);
    for (std::size_t kk = n; kk-- > 0;) {
        T acc = b[kk];
        for (std::size_t j = kk + 1; j < n; ++j) acc -= a[kk * n + j] * x[j];
        x[kk] = acc / a[kk * n + kk];
    }
    return x;
}

inline std::vector<double> solve(const DenseSystem<double>& system) { return solve_floating(system); }
inline std::vector<Complex> solve(const DenseSystem<Complex>& system) { return solve_floating(system); }

} // namespace chisholm

#endif // CHISHOLM_LINALG_HPP
