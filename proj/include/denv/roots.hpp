#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "denv/poly.hpp"

namespace denv {

/// Roots of a polynomial split into those recognized exactly in the base
/// field and the remainder, isolated numerically.
struct RootSet {
    std::vector<std::pair<Scalar, int>> exact;      // sorted lexicographically
    std::vector<std::pair<BigFloatC, int>> numeric;
};

/// Simultaneous Aberth iteration on a squarefree polynomial of degree >= 1.
/// Throws with a precision hint if the iteration does not settle.
std::vector<BigFloatC> aberth_roots(const Poly& p, mpfr_prec_t prec);

/// Best rational approximation from the continued fraction of x, accepted only
/// when it agrees with x to about 3/4 of the working precision.
std::optional<mpq_class> recognize_rational(const BigFloat& x);

/// All roots of p with multiplicity. Exact roots are verified by evaluation.
RootSet find_roots(const Poly& p, const Field& field, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace denv
