#pragma once

#include <string>
#include <utility>
#include <vector>

#include "denv/bigfloat.hpp"
#include "denv/scalar.hpp"

namespace denv {

/// Univariate polynomial over Scalar, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(Scalar c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly x() { return monomial(Scalar(1), 1); }
    static Poly monomial(Scalar c, int k);
    /// Monic polynomial (x - r).
    static Poly linear_root(const Scalar& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Scalar& lc() const;
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s);
    friend Poly operator*(const Scalar& s, Poly a) { return std::move(a) * s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Quotient and remainder with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Division that must be exact; throws otherwise.
    Poly exact_div(const Poly& divisor) const;
    Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }
    bool divides(const Poly& other) const;

    Poly derivative() const;
    Scalar eval(const Scalar& v) const;
    BigFloatC eval(const BigFloatC& v) const;
    Poly compose(const Poly& inner) const;
    Poly pow(unsigned e) const;
    Poly monic() const;
    /// p(x + a).
    Poly shift(const Scalar& a) const;

    /// Bit height of the primitive integer multiple of this polynomial.
    std::size_t height_bits() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
/// Yun decomposition p = lc * prod f_i^{m_i} with monic squarefree coprime f_i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Res(p, q) = lc(p)^{deg q} prod_{p(a)=0} q(a), so Res(x-a, x-b) = a - b.
Scalar resultant(const Poly& p, const Poly& q);

/// Homogenized evaluation sum_i c_i num^i den^{n-i} with n = max(degree, formal).
Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int formal_degree);

/// Splits p = c * q with q having coprime integer (or Z[alpha]) coefficients.
std::pair<Scalar, Poly> integer_primitive(const Poly& p);

}  // namespace denv
