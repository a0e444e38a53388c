#pragma once

#include <map>
#include <string>
#include <vector>

#include "denv/ratfun.hpp"

namespace denv {

inline constexpr int kDefaultMaxJetOrder = 8;

/// Order-k jet (x, y, y1, ..., yk) of an invertible local map, y1 != 0.
class Jet {
public:
    Jet(Scalar source, Scalar target, std::vector<Scalar> derivatives);

    int order() const { return static_cast<int>(d_.size()); }
    const Scalar& source() const { return x_; }
    const Scalar& target() const { return y_; }
    /// y_i for 1 <= i <= order.
    const Scalar& derivative(int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Scalar>& derivatives() const { return d_; }

    bool operator==(const Jet&) const = default;
    std::string str() const;

private:
    Scalar x_;
    Scalar y_;
    std::vector<Scalar> d_;
};

/// Jet of h o j at source(j); requires target(j) == source(h).
Jet jet_compose(const Jet& j, const Jet& h);
Jet jet_invert(const Jet& j);
Jet jet_identity(const Scalar& x, int order);
/// (p, R(p), R'(p), ..., R^(k)(p)); throws at poles, infinity and critical points.
Jet jet_of_map(const RatFun& r, const PointP1& p, int order);

/// Polynomial in (x, y) with Scalar coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg x, deg y)

    BiPoly() = default;
    static BiPoly in_x(const Poly& p);
    static BiPoly in_y(const Poly& p);
    static BiPoly constant(const Scalar& c);

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Scalar>& terms() const { return c_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Scalar& s);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly dx() const;
    BiPoly dy() const;
    Scalar eval(const Scalar& x, const Scalar& y) const;
    /// Substitutes y = r(x).
    RatFun substitute(const RatFun& r) const;

private:
    void add(const Key& k, const Scalar& v);
    std::map<Key, Scalar> c_;
};

/// Differential polynomial in the jet coordinates: finite sum of
/// c(x, y) * y1^a1 * y2^a2 * ... * yk^ak with a1 any integer and a2.. >= 0.
/// All coefficients share the denominator dx(x) * dy(y).
class DiffPoly {
public:
    using Monomial = std::vector<int>;  // exponents of y1, y2, ...; no trailing zeros

    DiffPoly() = default;
    static DiffPoly coefficient_x(const RatFun& c);
    static DiffPoly coefficient_y(const RatFun& c);
    static DiffPoly constant(const Scalar& c);
    /// y_i^e (i >= 1); e may be negative only for i == 1.
    static DiffPoly y(int i, int e = 1);

    bool is_zero() const;
    /// Highest derivative index present.
    int order() const;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(DiffPoly a, const Scalar& s);
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return (a - b).is_zero(); }

    /// Evaluates at a jet of order >= order().
    Scalar eval(const Jet& j) const;
    /// Evaluates on the prolongation of r as a rational function of x.
    RatFun on_map(const RatFun& r) const;

    std::string str() const;

private:
    static Monomial trim(Monomial m);
    DiffPoly over(const Poly& dx, const Poly& dy) const;

    std::map<Monomial, BiPoly> terms_;
    Poly den_x_ = Poly(1);
    Poly den_y_ = Poly(1);

    friend DiffPoly total_derivative(const DiffPoly& e);
};

/// D = d/dx + y1 d/dy + sum y_{i+1} d/dy_i.
DiffPoly total_derivative(const DiffPoly& e);

}  // namespace denv
