#pragma once

#include <optional>
#include <vector>

#include "denv/kernels.hpp"

namespace denv {

/// Affine solution set of A x = b: particular + span(kernel).
struct LinearSolution {
    std::optional<std::vector<Scalar>> particular;  // free variables set to zero
    std::vector<std::vector<Scalar>> kernel;        // one vector per free column, ascending
    std::size_t rank = 0;
};

/// Exact solve via fraction-free echelon form followed by reduced back-substitution.
LinearSolution solve_linear(const kernels::Matrix& a, const std::vector<Scalar>& b);

std::size_t matrix_rank(kernels::Matrix m);

}  // namespace denv
