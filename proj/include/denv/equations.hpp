#pragma once

#include <string>

#include "denv/jets.hpp"
#include "denv/series.hpp"

namespace denv {

/// One of the normal forms
///   G1^n(eta): eta(y) y1^n - eta(x) = 0
///   G2(mu):    mu(y) y1 + y2/y1 - mu(x) = 0
///   G3(nu):    nu(y) y1^2 + 2 y3/y1 - 3 (y2/y1)^2 - nu(x) = 0
///   Ginf:      0 = 0
struct GroupoidEq {
    enum class Kind { g1, g2, g3, ginf };

    Kind kind = Kind::ginf;
    int n = 0;
    RatFun coeff;

    static GroupoidEq g1(int n, RatFun eta);
    static GroupoidEq g2(RatFun mu) { return {Kind::g2, 0, std::move(mu)}; }
    static GroupoidEq g3(RatFun nu) { return {Kind::g3, 0, std::move(nu)}; }
    static GroupoidEq ginf() { return {}; }

    /// 1, 2, 3, or 0 for the trivial groupoid.
    int order() const;
    bool operator==(const GroupoidEq&) const = default;
    std::string str() const;
};

/// R''/R'.
RatFun affine_coeff(const RatFun& r);
/// 2 R'''/R' - 3 (R''/R')^2, twice the classical Schwarzian.
RatFun schwarzian(const RatFun& r);

/// Substitutes the prolongation of r; zero iff r solves e.
RatFun eq_residual(const GroupoidEq& e, const RatFun& r);

/// Pullback phi^* e for a Moebius phi. Functorial as
/// gauge(e, phi o psi) == gauge(gauge(e, phi), psi), and r solves e iff
/// phi^{-1} o r o phi solves gauge(e, phi).
GroupoidEq gauge_transform(const GroupoidEq& e, const RatFun& phi);
/// The equation in the chart 1/x.
GroupoidEq chart_transform(const GroupoidEq& e);

/// Cocycle defect of the coefficient map under composition g o f:
///   kind 1: eta(g o f) ((g o f)')^n - [eta(g) (g')^n] o f * (f')^n
///   kind 2: A(g o f) - A(g) o f * f' - A(f),   A = affine_coeff
///   kind 3: S(g o f) - S(g) o f * (f')^2 - S(f), S = schwarzian
RatFun cocycle_residual(int kind, const RatFun& f, const RatFun& g, int n = 1, const RatFun& eta = RatFun(1));

/// The defining differential polynomial of e.
DiffPoly to_diffpoly(const GroupoidEq& e);

// Series versions for invertible germs phi(t) = phi0 + phi1 t + ..., phi1 != 0.

template <class T>
void require_invertible_germ(const Series<T>& phi) {
    if (phi.order() < 1 || RingTraits<T>::is_zero(phi[1])) throw Error("gauge transform needs an invertible germ");
}

/// phi''/phi', valid to order N - 2.
template <class T>
Series<T> affine_coeff_series(const Series<T>& phi) {
    require_invertible_germ(phi);
    Series<T> d1 = phi.derivative();
    Series<T> d2 = d1.derivative();
    return d2 * reciprocal(d1.truncate(d2.order()));
}

/// 2 phi'''/phi' - 3 (phi''/phi')^2, valid to order N - 3.
template <class T>
Series<T> schwarzian_series(const Series<T>& phi) {
    require_invertible_germ(phi);
    if (phi.order() < 3) throw Error("schwarzian of a germ needs order at least 3");
    Series<T> d1 = phi.derivative();
    Series<T> d2 = d1.derivative();
    Series<T> d3 = d2.derivative();
    const int n = d3.order();
    Series<T> inv = reciprocal(d1.truncate(n));
    Series<T> a = d2.truncate(n) * inv;
    const T two = RingTraits<T>::from(Scalar(2), phi.ref());
    const T three = RingTraits<T>::from(Scalar(3), phi.ref());
    return (d3 * inv) * two - (a * a) * three;
}

/// Coefficient of phi^* e as a germ, e.g. mu o phi * phi' + phi''/phi' for G2.
template <class T>
Series<T> gauge_series(const GroupoidEq& e, const Series<T>& phi) {
    require_invertible_germ(phi);
    using Tr = RingTraits<T>;
    switch (e.kind) {
        case GroupoidEq::Kind::g1: {
            Series<T> d1 = phi.derivative();
            Series<T> w = Series<T>::constant(Tr::from(Scalar(1), phi.ref()), d1.order());
            const Series<T> base = e.n > 0 ? d1 : reciprocal(d1);
            for (int i = 0; i < (e.n > 0 ? e.n : -e.n); ++i) w = w * base;
            return compose(e.coeff, phi.truncate(d1.order())) * w;
        }
        case GroupoidEq::Kind::g2: {
            Series<T> a = affine_coeff_series(phi);
            Series<T> d1 = phi.derivative().truncate(a.order());
            return compose(e.coeff, phi.truncate(a.order())) * d1 + a;
        }
        case GroupoidEq::Kind::g3: {
            Series<T> s = schwarzian_series(phi);
            Series<T> d1 = phi.derivative().truncate(s.order());
            return compose(e.coeff, phi.truncate(s.order())) * (d1 * d1) + s;
        }
        case GroupoidEq::Kind::ginf:
            break;
    }
    return Series<T>::zero(phi.order(), phi.ref());
}

}  // namespace denv
