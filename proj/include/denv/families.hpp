#pragma once

#include <string>
#include <utility>

#include "denv/ratfun.hpp"

namespace denv {

/// x^k, or 1/x^|k| for negative k.
RatFun monomial(int k);

enum class ChebyshevNorm { classical, dilated };
ChebyshevNorm parse_chebyshev_norm(const std::string& s);

/// classical: T_k with T_k(cos w) = cos(kw). dilated: 2 T_k(x/2).
RatFun chebyshev(int k, ChebyshevNorm norm = ChebyshevNorm::classical);

/// Curve y^2 = 4x^3 - g2 x - g3 and multiplication by k.
struct LattesParams {
    Scalar g2;
    Scalar g3;
    int k = 2;

    Scalar discriminant() const { return g2.pow(3) - Scalar(27) * g3 * g3; }
};

inline constexpr int kDefaultLattesCap = 5;

/// x-coordinate of [k] from division polynomials; degree k^2.
RatFun lattes(const LattesParams& p, int cap = kDefaultLattesCap);

/// Invariants for the curve (y')^2 = 4y^3 + g2 y + g3 rewritten in the
/// minus convention.
std::pair<Scalar, Scalar> from_plus_convention(const Scalar& g2, const Scalar& g3);

/// Cases: 1 rotation quotient, 2 exp, 3 cos, 4 p, 5 p^2, 6 p', 7 p^3.
struct FamilySpec {
    int case_id = 2;
    Scalar g2;
    Scalar g3;
};

struct KnownMu {
    RatFun mu;
    bool verified = false;  // residual checked against a generator
    std::string note;
};

KnownMu known_mu(const FamilySpec& spec);

bool commutes(const RatFun& a, const RatFun& b);

}  // namespace denv
