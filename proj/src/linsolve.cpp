#include "denv/linsolve.hpp"

namespace denv {

namespace {

// Scales a row so every entry has integral rational parts.
void clear_row_denominators(kernels::Matrix& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols; ++j) {
        const Scalar& v = m(r, j);
        if (v.is_zero()) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re_part().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.alpha_part().get_den_mpz_t());
    }
    if (l == 1) return;
    const Scalar s{mpq_class(l)};
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (!m(r, j).is_zero()) m(r, j) *= s;
    }
}

}  // namespace

LinearSolution solve_linear(const kernels::Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows) throw Error("linear system: right-hand side has wrong length");
    const std::size_t n = a.cols;
    kernels::Matrix m(a.rows, n + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
        clear_row_denominators(m, i);
    }
    kernels::PivotColumns pivots = kernels::fraction_free_echelon(m);

    LinearSolution out;
    const bool consistent = pivots.empty() || pivots.back() != n;
    if (!consistent) pivots.pop_back();
    out.rank = pivots.size();

    // Reduced echelon form on the pivot rows.
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t pc = pivots[i];
        const Scalar inv = m(i, pc).inverse();
        for (std::size_t j = pc; j <= n; ++j) {
            if (!m(i, j).is_zero()) m(i, j) *= inv;
        }
        for (std::size_t k = 0; k < i; ++k) {
            const Scalar f = m(k, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j <= n; ++j) {
                if (!m(i, j).is_zero()) m(k, j) -= f * m(i, j);
            }
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    if (consistent) {
        std::vector<Scalar> x(n);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m(i, n);
        out.particular = std::move(x);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t matrix_rank(kernels::Matrix m) {
    for (std::size_t i = 0; i < m.rows; ++i) clear_row_denominators(m, i);
    return kernels::fraction_free_echelon(m).size();
}

}  // namespace denv
