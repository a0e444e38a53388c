#pragma once

#include <algorithm>
#include <string>

#include "denv/scalar.hpp"

#include <mpfr.h>

namespace denv {

inline constexpr mpfr_prec_t kMinPrecision = 64;
inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// RAII owner of an mpfr_t. Results take the larger precision of the operands.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
    BigFloat(double v, mpfr_prec_t prec);
    BigFloat(const mpq_class& q, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_); }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return mpfr_greater_p(x.v_, y.v_); }

    BigFloat sqrt() const;
    BigFloat abs() const;
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log2 |x|, -inf for zero.
    double log2_abs() const;
    /// Exact rational value of the binary float.
    mpq_class to_rational() const;
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

BigFloat pi(mpfr_prec_t prec);

/// Complex number with BigFloat parts.
class BigFloatC {
public:
    explicit BigFloatC(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
    BigFloatC(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigFloatC(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    /// a + b sqrt(d), rounded to the given precision.
    BigFloatC(const Scalar& s, mpfr_prec_t prec);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

    BigFloatC operator-() const { return {-re_, -im_}; }
    BigFloatC& operator+=(const BigFloatC& o);
    BigFloatC& operator-=(const BigFloatC& o);
    BigFloatC& operator*=(const BigFloatC& o);
    BigFloatC& operator/=(const BigFloatC& o);
    friend BigFloatC operator+(BigFloatC x, const BigFloatC& y) { return x += y; }
    friend BigFloatC operator-(BigFloatC x, const BigFloatC& y) { return x -= y; }
    friend BigFloatC operator*(BigFloatC x, const BigFloatC& y) { return x *= y; }
    friend BigFloatC operator/(BigFloatC x, const BigFloatC& y) { return x /= y; }

    BigFloat norm() const;  // |z|^2
    BigFloat abs() const;
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigFloatC pow(long e) const;

    std::string str(int digits = 20) const;

private:
    BigFloat re_;
    BigFloat im_;
};

BigFloatC exp(const BigFloatC& z);
BigFloatC cos(const BigFloatC& z);
BigFloatC sin(const BigFloatC& z);

}  // namespace denv
