#include "denv/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "denv/kernels.hpp"

namespace denv {

namespace {

bool prints_negative(const Scalar& s) {
    const int sa = sgn(s.re_part());
    const int sb = sgn(s.alpha_part());
    return (sa < 0 && sb == 0) || (sa == 0 && sb < 0);
}

bool both_parts(const Scalar& s) { return sgn(s.re_part()) != 0 && sgn(s.alpha_part()) != 0; }

std::string power_of(const std::string& var, int k) {
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

// Modular gcd for polynomials with rational coefficients: images mod 62-bit primes,
// CRT on the scaled images, then a trial-division check over Q.
using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a, p)) {
        if (e & 1) r = mul_mod(r, a, p);
    }
    return r;
}

u64 mod_of(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

void trim(ModPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        const u64 inv = pow_mod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const u64 q = mul_mod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const u64 t = mul_mod(q, b[j], p);
                a[shift + j] = a[shift + j] >= t ? a[shift + j] - t : a[shift + j] + p - t;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    const u64 inv = pow_mod(a.back(), p - 2, p);
    for (auto& v : a) v = mul_mod(v, inv, p);
    return a;
}

bool rational_poly(const Poly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Scalar& c) { return c.is_rational(); });
}

std::vector<mpz_class> integer_coeffs(const Poly& f) {
    const Poly g = integer_primitive(f).second;
    std::vector<mpz_class> out;
    out.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) out.push_back(c.re_part().get_num());
    return out;
}

ModPoly image(const std::vector<mpz_class>& f, u64 p) {
    ModPoly out;
    out.reserve(f.size());
    for (const auto& c : f) out.push_back(mod_of(c, p));
    return out;
}

Poly from_integers(const std::vector<mpz_class>& c) {
    std::vector<Scalar> s;
    s.reserve(c.size());
    for (const auto& v : c) s.emplace_back(mpq_class(v));
    return Poly(std::move(s));
}

Poly modular_gcd(const Poly& a, const Poly& b) {
    const std::vector<mpz_class> A = integer_coeffs(a);
    const std::vector<mpz_class> B = integer_coeffs(b);
    mpz_class lc;
    mpz_gcd(lc.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    std::vector<mpz_class> acc;
    std::vector<mpz_class> last;
    mpz_class modulus = 1;
    int best = std::min(a.degree(), b.degree()) + 1;
    mpz_class prime = mpz_class(1) << 62;
    while (true) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = prime.get_ui();
        if (mod_of(A.back(), p) == 0 || mod_of(B.back(), p) == 0) continue;
        ModPoly g = gcd_mod(image(A, p), image(B, p), p);
        const int deg = static_cast<int>(g.size()) - 1;
        if (deg == 0) return Poly(Scalar(1));
        if (deg > best) continue;
        const u64 scale = mod_of(lc, p);
        for (auto& v : g) v = mul_mod(v, scale, p);
        if (deg < best) {
            best = deg;
            acc.assign(g.size(), mpz_class(0));
            for (std::size_t i = 0; i < g.size(); ++i) acc[i] = g[i];
            modulus = prime;
            last.clear();
            continue;
        }
        // CRT: x = acc + modulus * ((g - acc) * modulus^{-1} mod p).
        const u64 inv = pow_mod(mod_of(modulus, p), p - 2, p);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const u64 r = mod_of(acc[i], p);
            const u64 t = mul_mod(g[i] >= r ? g[i] - r : g[i] + p - r, inv, p);
            acc[i] += modulus * mpz_class(t);
        }
        modulus *= prime;
        std::vector<mpz_class> sym = acc;
        const mpz_class half = modulus / 2;
        for (auto& v : sym) {
            if (v > half) v -= modulus;
        }
        if (sym != last) {
            last = std::move(sym);
            continue;
        }
        const Poly cand = integer_primitive(from_integers(last)).second;
        if (cand.divides(a) && cand.divides(b)) return cand.monic();
    }
}

}  // namespace

Poly::Poly(Scalar c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Scalar c, int k) {
    if (c.is_zero()) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Scalar& r) { return Poly(std::vector<Scalar>{-r, Scalar(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::lc() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar();
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
    return Poly(kernels::poly_mul(a.c_, b.c_));
}

Poly operator*(Poly a, const Scalar& s) {
    if (s.is_zero()) return {};
    for (auto& v : a.c_) v *= s;
    return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    if (degree() < divisor.degree()) return {Poly(), *this};
    std::vector<Scalar> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<Scalar> quo(c_.size() - dd);
    const Scalar inv_lc = divisor.lc().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Scalar q = rem[k + dd];
        if (q.is_zero()) continue;
        if (!inv_lc.is_one()) q *= inv_lc;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (!divisor.c_[j].is_zero()) rem[k + j] -= q * divisor.c_[j];
        }
        quo[k] = std::move(q);
    }
    rem.resize(dd);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& other) const { return (other % *this).is_zero(); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(d));
}

Scalar Poly::eval(const Scalar& v) const {
    Scalar acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= v;
        acc += c_[i];
    }
    return acc;
}

BigFloatC Poly::eval(const BigFloatC& v) const {
    const mpfr_prec_t prec = v.precision();
    BigFloatC acc(prec);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= v;
        acc += BigFloatC(c_[i], prec);
    }
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        acc += Poly(c_[i]);
    }
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Scalar(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * lc().inverse();
}

Poly Poly::shift(const Scalar& a) const { return compose(Poly(std::vector<Scalar>{a, Scalar(1)})); }

std::size_t Poly::height_bits() const {
    if (is_zero()) return 0;
    auto [c, q] = integer_primitive(*this);
    std::size_t h = 0;
    for (const auto& v : q.coeffs()) h = std::max(h, v.height_bits());
    return h;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        const int k = static_cast<int>(i);
        const bool neg = prints_negative(c);
        const Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << (both_parts(mag) ? "(" + mag.str() + ")" : mag.str());
        } else if (mag.is_one()) {
            os << power_of(var, k);
        } else {
            os << (both_parts(mag) ? "(" + mag.str() + ")" : mag.str()) << "*" << power_of(var, k);
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.degree() >= 1 && b.degree() >= 1 && rational_poly(a) && rational_poly(b)) return modular_gcd(a, b);
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b.exact_div(gcd(a, b))).monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.is_zero() ? Poly() : Poly(Scalar(1));
    return p.exact_div(gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm (characteristic zero).
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f.exact_div(a);
    Poly c = fp.exact_div(a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Scalar resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw Error("resultant of the zero polynomial");
    // Res(A,B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R) with R = A mod B.
    Poly a = p;
    Poly b = q;
    Scalar acc(1);
    while (true) {
        const int da = a.degree();
        const int db = b.degree();
        if (db == 0) return acc * b.lc().pow(da);
        Poly r = a % b;
        if (r.is_zero()) return Scalar();
        const int dr = r.degree();
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        acc *= b.lc().pow(da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int formal_degree) {
    const int n = std::max(p.degree(), formal_degree);
    if (p.is_zero()) return {};
    // Horner in the homogeneous form: acc = acc*num + c_i den^{n-i} processed top-down.
    std::vector<Poly> den_pow(static_cast<std::size_t>(n) + 1);
    den_pow[0] = Poly(Scalar(1));
    for (int i = 1; i <= n; ++i) den_pow[static_cast<std::size_t>(i)] = den_pow[static_cast<std::size_t>(i - 1)] * den;
    Poly acc;
    for (int i = n; i >= 0; --i) {
        acc = acc * num;
        const Scalar c = p.coeff(i);
        if (!c.is_zero()) acc += den_pow[static_cast<std::size_t>(n - i)] * c;
    }
    return acc;
}

std::pair<Scalar, Poly> integer_primitive(const Poly& p) {
    if (p.is_zero()) return {Scalar(1), Poly()};
    mpz_class l = 1;
    for (const auto& v : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re_part().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.alpha_part().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& v : p.coeffs()) {
        mpz_class na = v.re_part().get_num() * (l / v.re_part().get_den());
        mpz_class nb = v.alpha_part().get_num() * (l / v.alpha_part().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), na.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nb.get_mpz_t());
    }
    const Scalar scale(mpq_class(l, g));
    return {scale.inverse(), p * scale};
}

}  // namespace denv
