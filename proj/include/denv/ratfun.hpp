#pragma once

#include <optional>
#include <string>

#include "denv/poly.hpp"

namespace denv {

/// A point of the projective line: finite value or infinity.
class PointP1 {
public:
    PointP1() = default;  // infinity
    PointP1(Scalar v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static PointP1 infinity() { return {}; }

    bool is_infinity() const { return !v_.has_value(); }
    const Scalar& value() const;
    bool operator==(const PointP1&) const = default;
    std::string str() const;

private:
    std::optional<Scalar> v_;
};

/// Reduced rational function num/den with monic den.
class RatFun {
public:
    RatFun() : den_(Scalar(1)) {}
    RatFun(Poly num, Poly den);
    RatFun(Poly p) : num_(std::move(p)), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
    RatFun(Scalar c) : RatFun(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    /// max(deg num, deg den); 0 for constants.
    int degree() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const { return RatFun(-num_, den_); }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    friend bool operator==(const RatFun&, const RatFun&) = default;

    RatFun pow(int e) const;
    RatFun derivative() const;
    /// this o inner.
    RatFun compose(const RatFun& inner) const;
    PointP1 eval(const PointP1& p) const;
    /// Finite evaluation; throws at a pole.
    Scalar eval(const Scalar& v) const;
    BigFloatC eval(const BigFloatC& v) const;

    /// Canonical text, integer coefficients where possible; re-parses to *this.
    std::string str(const std::string& var = "x") const;

private:
    Poly num_;
    Poly den_;
};

RatFun rf_normalize(const Poly& num, const Poly& den);
RatFun rf_derive(const RatFun& r);
RatFun rf_compose(const RatFun& outer, const RatFun& inner);
PointP1 rf_eval(const RatFun& r, const PointP1& p);

inline constexpr int kDefaultIterateDegreeCap = 4096;
RatFun rf_iterate(const RatFun& r, int n, int degree_cap = kDefaultIterateDegreeCap);

bool is_mobius(const RatFun& r);
RatFun mobius_inverse(const RatFun& phi);
/// phi^{-1} o r o phi.
RatFun mobius_conjugate(const RatFun& r, const RatFun& phi);

}  // namespace denv
