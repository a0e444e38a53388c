#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "denv/scalar.hpp"

// Hot loops of the exact algebra. Every kernel has a serial reference in
// `serial` and an OpenMP version in `parallel` computing the identical result;
// the unqualified entry points pick one by problem size.
namespace denv::kernels {

/// Dense row-major matrix of scalars.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    bool operator==(const Matrix&) const = default;
};

/// Pivot columns of a row echelon form, in row order.
using PivotColumns = std::vector<std::size_t>;

namespace serial {
std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b);
PivotColumns fraction_free_echelon(Matrix& m);
}  // namespace serial

namespace parallel {
std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b);
PivotColumns fraction_free_echelon(Matrix& m);
}  // namespace parallel

inline constexpr std::size_t kParallelMulTerms = 4096;  // len(a) * len(b)
inline constexpr std::size_t kParallelRows = 48;

std::vector<Scalar> poly_mul(std::span<const Scalar> a, std::span<const Scalar> b);
PivotColumns fraction_free_echelon(Matrix& m);

}  // namespace denv::kernels
