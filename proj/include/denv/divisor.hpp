#pragma once

#include <string>
#include <utility>
#include <vector>

#include "denv/ratfun.hpp"

namespace denv {

/// Galois-stable finite point set with multiplicities on the projective line,
/// stored as pairwise coprime monic squarefree factors plus a multiplicity at
/// infinity. Individual algebraic roots are never materialized.
class Divisor {
public:
    using Factor = std::pair<Poly, int>;

    Divisor() = default;
    /// Refines arbitrary (polynomial, multiplicity) pairs; overlapping points keep the max multiplicity.
    Divisor(std::vector<Factor> factors, int inf_mult);
    /// Support of p's roots (multiplicity one), optionally with infinity.
    static Divisor roots_of(const Poly& p, bool with_infinity = false);
    static Divisor point(const PointP1& p);
    static Divisor infinity() { return Divisor({}, 1); }

    const std::vector<Factor>& factors() const { return factors_; }
    int inf_mult() const { return inf_mult_; }
    bool has_infinity() const { return inf_mult_ > 0; }
    bool empty() const { return factors_.empty() && inf_mult_ == 0; }

    /// Product of the finite factors.
    Poly finite_support() const;
    int support_size() const;
    int total_multiplicity() const;
    /// Same points, multiplicity one.
    Divisor support() const;

    bool contains(const PointP1& p) const;
    /// Support containment.
    bool contains(const Divisor& other) const;
    bool same_support(const Divisor& other) const { return contains(other) && other.contains(*this); }

    Divisor unite(const Divisor& other) const;
    Divisor intersect(const Divisor& other) const;

    /// Largest bit height among the factors.
    std::size_t height_bits() const;

    bool operator==(const Divisor&) const = default;
    std::string str() const;

private:
    std::vector<Factor> factors_;
    int inf_mult_ = 0;
};

/// Pairwise coprime monic squarefree polynomials whose products give the
/// supports of all inputs; sorted deterministically.
std::vector<Poly> gcd_free_basis(const std::vector<Poly>& polys);

/// Largest m with b^m | g (b squarefree, g nonzero).
int multiplicity(const Poly& g, const Poly& b);

/// R(support D).
Divisor divisor_pushforward(const Divisor& d, const RatFun& r);
/// R^{-1}(support D).
Divisor divisor_pullback(const Divisor& d, const RatFun& r);

/// Polynomial of degree < points.size() through (points[i], values[i]).
Poly interpolate(const std::vector<Scalar>& points, const std::vector<Scalar>& values);

}  // namespace denv
