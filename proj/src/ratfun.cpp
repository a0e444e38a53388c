#include "denv/ratfun.hpp"

#include <algorithm>

namespace denv {

namespace {

bool single_term(const Poly& p) {
    int terms = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        ++terms;
        if (!c.is_rational() && sgn(c.re_part()) != 0) return false;
    }
    return terms == 1;
}

std::string wrap(const Poly& p, const std::string& var) {
    std::string s = p.str(var);
    return single_term(p) ? s : "(" + s + ")";
}

// A bare denominator must not absorb a following factor: only x^k with unit coefficient.
std::string wrap_denominator(const Poly& p, const std::string& var) {
    std::string s = p.str(var);
    const bool bare = p.degree() >= 1 && single_term(p) && p.lc().is_one();
    return bare ? s : "(" + s + ")";
}

}  // namespace

const Scalar& PointP1::value() const {
    if (!v_) throw Error("point at infinity has no finite value");
    return *v_;
}

std::string PointP1::str() const { return v_ ? v_->str() : "inf"; }

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    if (num.is_zero()) {
        den_ = Poly(Scalar(1));
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    const Scalar inv = den.lc().inverse();
    num_ = std::move(num) * inv;
    den_ = std::move(den) * inv;
}

int RatFun::degree() const {
    if (num_.is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return RatFun(Poly(Scalar(1))) / pow(-e);
    return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun RatFun::derivative() const {
    if (den_.degree() == 0) return RatFun(num_.derivative());
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::compose(const RatFun& inner) const {
    const int n = std::max(num_.degree(), den_.degree());
    Poly top = homogenize(num_, inner.num_, inner.den_, n);
    Poly bottom = homogenize(den_, inner.num_, inner.den_, n);
    if (bottom.is_zero()) throw Error("composition lands on a pole: constant infinity");
    return RatFun(std::move(top), std::move(bottom));
}

PointP1 RatFun::eval(const PointP1& p) const {
    if (p.is_infinity()) {
        const int dn = num_.is_zero() ? -1 : num_.degree();
        const int dd = den_.degree();
        if (dn > dd) return PointP1::infinity();
        if (dn < dd) return Scalar();
        return num_.lc() / den_.lc();
    }
    Scalar d = den_.eval(p.value());
    if (d.is_zero()) return PointP1::infinity();
    return num_.eval(p.value()) / d;
}

Scalar RatFun::eval(const Scalar& v) const {
    Scalar d = den_.eval(v);
    if (d.is_zero()) throw Error("evaluation at a pole");
    return num_.eval(v) / d;
}

BigFloatC RatFun::eval(const BigFloatC& v) const { return num_.eval(v) / den_.eval(v); }

std::string RatFun::str(const std::string& var) const {
    if (den_.degree() == 0) return num_.str(var);
    // R = (GN/LN) N1 / ((GD/LD) D1); print (p N1)/(q D1) with p/q the leftover scale.
    auto [cn, n1] = integer_primitive(num_);
    auto [cd, d1] = integer_primitive(den_);
    const Scalar scale = cn / cd;
    Poly top = n1;
    Poly bottom = d1;
    if (scale.is_rational()) {
        const mpq_class& q = scale.re_part();
        top = top * Scalar(mpq_class(q.get_num()));
        bottom = bottom * Scalar(mpq_class(q.get_den()));
    } else {
        top = top * scale;
    }
    return wrap(top, var) + "/" + wrap_denominator(bottom, var);
}

RatFun rf_normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }
RatFun rf_derive(const RatFun& r) { return r.derivative(); }
RatFun rf_compose(const RatFun& outer, const RatFun& inner) { return outer.compose(inner); }
PointP1 rf_eval(const RatFun& r, const PointP1& p) { return r.eval(p); }

RatFun rf_iterate(const RatFun& r, int n, int degree_cap) {
    if (n < 1) throw Error("iterate count must be positive");
    long long deg = 1;
    for (int i = 0; i < n; ++i) {
        deg *= std::max(r.degree(), 1);
        if (deg > degree_cap) throw Error("iterate degree cap exceeded (" + std::to_string(degree_cap) + ")");
    }
    RatFun acc = r;
    for (int i = 1; i < n; ++i) acc = r.compose(acc);
    return acc;
}

bool is_mobius(const RatFun& r) { return r.degree() == 1; }

RatFun mobius_inverse(const RatFun& phi) {
    if (!is_mobius(phi)) throw Error("conjugator must be degree 1");
    const Scalar a = phi.num().coeff(1), b = phi.num().coeff(0);
    const Scalar c = phi.den().coeff(1), d = phi.den().coeff(0);
    return RatFun(Poly(std::vector<Scalar>{-b, d}), Poly(std::vector<Scalar>{a, -c}));
}

RatFun mobius_conjugate(const RatFun& r, const RatFun& phi) {
    if (!is_mobius(phi)) throw Error("conjugator must be degree 1");
    return mobius_inverse(phi).compose(r.compose(phi));
}

}  // namespace denv
