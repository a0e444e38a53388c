#include "denv/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

namespace denv::kernels {

namespace {

// Row update of one Bareiss step: row <- (pivot*row - f*pivot_row) / prev on columns >= c.
void bareiss_row(Matrix& m, std::size_t i, std::size_t r, std::size_t c, const Scalar& pivot,
                 const Scalar& prev) {
    const Scalar f = m(i, c);
    for (std::size_t j = c; j < m.cols; ++j) {
        Scalar v = pivot * m(i, j);
        if (!f.is_zero() && !m(r, j).is_zero()) v -= f * m(r, j);
        if (!prev.is_one()) v /= prev;
        m(i, j) = std::move(v);
    }
}

std::size_t find_pivot(const Matrix& m, std::size_t from, std::size_t c) {
    for (std::size_t p = from; p < m.rows; ++p) {
        if (!m(p, c).is_zero()) return p;
    }
    return m.rows;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

template <bool Parallel>
PivotColumns echelon(Matrix& m) {
    PivotColumns pivots;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        const std::size_t p = find_pivot(m, r, c);
        if (p == m.rows) continue;
        swap_rows(m, p, r);
        const Scalar pivot = m(r, c);
        const auto below = static_cast<long>(m.rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long i = static_cast<long>(r) + 1; i < below; ++i) {
                bareiss_row(m, static_cast<std::size_t>(i), r, c, pivot, prev);
            }
        } else {
            for (long i = static_cast<long>(r) + 1; i < below; ++i) {
                bareiss_row(m, static_cast<std::size_t>(i), r, c, pivot, prev);
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

namespace serial {

std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Scalar> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

PivotColumns fraction_free_echelon(Matrix& m) { return echelon<false>(m); }

}  // namespace serial

namespace parallel {

std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.empty() || b.empty()) return {};
    const auto n = static_cast<long>(a.size() + b.size() - 1);
    std::vector<Scalar> out(static_cast<std::size_t>(n));
    const long na = static_cast<long>(a.size());
    const long nb = static_cast<long>(b.size());
    // Each output coefficient is an independent convolution sum.
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < n; ++k) {
        Scalar acc;
        const long lo = std::max(0L, k - nb + 1);
        const long hi = std::min(k, na - 1);
        for (long i = lo; i <= hi; ++i) {
            const Scalar& x = a[static_cast<std::size_t>(i)];
            const Scalar& y = b[static_cast<std::size_t>(k - i)];
            if (!x.is_zero() && !y.is_zero()) acc += x * y;
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return out;
}

PivotColumns fraction_free_echelon(Matrix& m) { return echelon<true>(m); }

}  // namespace parallel

std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() * b.size() >= kParallelMulTerms && omp_get_max_threads() > 1) {
        return parallel::poly_mul(a, b);
    }
    return serial::poly_mul(a, b);
}

PivotColumns fraction_free_echelon(Matrix& m) {
    if (m.rows >= kParallelRows && omp_get_max_threads() > 1) {
        return parallel::fraction_free_echelon(m);
    }
    return serial::fraction_free_echelon(m);
}

}  // namespace denv::kernels
