#include "denv/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace denv {

namespace {

mpfr_prec_t join(const BigFloat& x, const BigFloat& y) {
    return std::max(x.precision(), y.precision());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, std::max(prec, kMinPrecision));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const mpq_class& q, mpfr_prec_t prec) : BigFloat(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
    BigFloat r(join(x, y));
    mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

double BigFloat::log2_abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

mpq_class BigFloat::to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::str(int digits) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
    return raw;
}

BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloatC::BigFloatC(const Scalar& s, mpfr_prec_t prec) : re_(s.re_part(), prec), im_(prec) {
    if (s.is_rational()) return;
    const long d = s.generator_square();
    BigFloat root = BigFloat(mpq_class(d < 0 ? -d : d), prec + 16).sqrt();
    BigFloat scaled = BigFloat(s.alpha_part(), prec + 16) * root;
    if (d < 0) {
        im_ = BigFloat(prec);
        mpfr_set(im_.get(), scaled.get(), MPFR_RNDN);
    } else {
        re_ = BigFloat(s.re_part(), prec + 16) + scaled;
        BigFloat rounded(prec);
        mpfr_set(rounded.get(), re_.get(), MPFR_RNDN);
        re_ = rounded;
    }
}

BigFloatC& BigFloatC::operator+=(const BigFloatC& o) {
    re_ = re_ + o.re_;
    im_ = im_ + o.im_;
    return *this;
}

BigFloatC& BigFloatC::operator-=(const BigFloatC& o) {
    re_ = re_ - o.re_;
    im_ = im_ - o.im_;
    return *this;
}

BigFloatC& BigFloatC::operator*=(const BigFloatC& o) {
    BigFloat r = re_ * o.re_ - im_ * o.im_;
    BigFloat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

BigFloatC& BigFloatC::operator/=(const BigFloatC& o) {
    BigFloat n = o.norm();
    if (n.is_zero()) throw Error("division by zero");
    BigFloat r = (re_ * o.re_ + im_ * o.im_) / n;
    BigFloat i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

BigFloat BigFloatC::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigFloatC::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigFloatC BigFloatC::pow(long e) const {
    if (e < 0) return (BigFloatC(1.0, 0.0, precision()) / *this).pow(-e);
    BigFloatC result(1.0, 0.0, precision());
    BigFloatC base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string BigFloatC::str(int digits) const {
    std::string s = re_.str(digits);
    if (mpfr_signbit(im_.get())) {
        s += " - " + im_.abs().str(digits) + "*i";
    } else {
        s += " + " + im_.str(digits) + "*i";
    }
    return s;
}

BigFloatC exp(const BigFloatC& z) {
    const mpfr_prec_t p = z.precision();
    BigFloat m(p), c(p), s(p);
    mpfr_exp(m.get(), z.re().get(), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
    return {m * c, m * s};
}

BigFloatC cos(const BigFloatC& z) {
    // cos(a + bi) = cos a cosh b - i sin a sinh b
    const mpfr_prec_t p = z.precision();
    BigFloat c(p), s(p), ch(p), sh(p);
    mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
    mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
    return {c * ch, -(s * sh)};
}

BigFloatC sin(const BigFloatC& z) {
    // sin(a + bi) = sin a cosh b + i cos a sinh b
    const mpfr_prec_t p = z.precision();
    BigFloat c(p), s(p), ch(p), sh(p);
    mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
    mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
    return {s * ch, c * sh};
}

}  // namespace denv
