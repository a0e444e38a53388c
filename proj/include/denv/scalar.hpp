#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace denv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Base field of a session: Q, Q(i) or Q(sqrt d).
struct Field {
    enum class Kind { rational, gauss, sqrt };
    Kind kind = Kind::rational;
    long d = 0;  // generator squared; 0 for plain rationals, -1 for gauss

    static Field rational() { return {}; }
    static Field gauss() { return {Kind::gauss, -1}; }
    static Field sqrt(long d);
    /// Parses "rational", "gauss" or "sqrt:<d>".
    static Field parse(const std::string& tag);

    std::string tag() const;
    bool has_generator() const { return d != 0; }
    bool operator==(const Field&) const = default;
};

/// Element a + b*alpha of Q(alpha) with alpha^2 = d.
///
/// The generator's square travels with the value so that arithmetic needs no
/// ambient state. Values with b == 0 are plain rationals and combine with any
/// field; mixing two different nonzero generators throws.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    Scalar(mpq_class a, mpq_class b, long d);
    static Scalar ratio(long num, long den);
    static Scalar generator(long d) { return Scalar(0, 1, d); }

    const mpq_class& re_part() const { return a_; }
    const mpq_class& alpha_part() const { return b_; }
    long generator_square() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    /// Total order on (a, b) used for canonical sorting; not a field order.
    friend std::strong_ordering lexicographic(const Scalar& x, const Scalar& y);

    Scalar inverse() const;
    Scalar pow(long e) const;
    /// Galois conjugate a - b*alpha.
    Scalar conjugate() const;
    /// Field norm a^2 - d b^2.
    mpq_class norm() const;

    /// Exact |x| > 1 test. Complex absolute value when d < 0, real when d >= 0.
    bool abs_greater_than_one() const;
    /// Sign of a real element (d >= 0). Throws for d < 0 with b != 0.
    int real_sign() const;

    /// Bit length of the largest integer coefficient after clearing denominators.
    std::size_t height_bits() const;

    std::string str() const;
    /// True when printing needs parentheses as a factor (two parts, or a negative).
    bool is_compound() const;

private:
    static long merge(long d1, bool b1, long d2, bool b2);

    mpq_class a_{0};
    mpq_class b_{0};
    long d_ = 0;
};

std::string alpha_symbol(long d);

}  // namespace denv
