#include "denv/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace denv {

namespace {

bool squarefree(long d) {
    unsigned long m = static_cast<unsigned long>(d < 0 ? -d : d);
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

std::size_t bits(const mpz_class& z) {
    return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace

Field Field::sqrt(long d) {
    if (d == -1) return gauss();
    if (d == 0 || d == 1 || !squarefree(d)) {
        throw Error("field generator must be a squarefree integer other than 0 and 1, got " +
                    std::to_string(d));
    }
    return {Kind::sqrt, d};
}

Field Field::parse(const std::string& tag) {
    if (tag == "rational") return rational();
    if (tag == "gauss") return gauss();
    if (tag.rfind("sqrt:", 0) == 0) {
        try {
            std::size_t used = 0;
            long d = std::stol(tag.substr(5), &used);
            if (used == tag.size() - 5) return sqrt(d);
        } catch (const std::logic_error&) {
        }
    }
    throw Error("unknown field '" + tag + "' (expected rational, gauss or sqrt:<d>)");
}

std::string Field::tag() const {
    switch (kind) {
        case Kind::rational: return "rational";
        case Kind::gauss: return "gauss";
        case Kind::sqrt: return "sqrt:" + std::to_string(d);
    }
    return "rational";
}

std::string alpha_symbol(long d) {
    return d == -1 ? "i" : "sqrt(" + std::to_string(d) + ")";
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) != 0 && d_ == 0) throw Error("scalar has a generator part but no field generator");
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw Error("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

long Scalar::merge(long d1, bool b1, long d2, bool b2) {
    if (d1 == d2) return d1;
    if (!b1 && !b2) return d1 != 0 ? d1 : d2;
    if (!b1) return d2;
    if (!b2) return d1;
    throw Error("incompatible fields: sqrt(" + std::to_string(d1) + ") and sqrt(" +
                std::to_string(d2) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge(d_, sgn(b_) != 0, o.d_, sgn(o.b_) != 0);
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge(d_, sgn(b_) != 0, o.d_, sgn(o.b_) != 0);
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const bool mine = sgn(b_) != 0;
    const bool theirs = sgn(o.b_) != 0;
    d_ = merge(d_, mine, o.d_, theirs);
    if (!mine && !theirs) {
        a_ *= o.a_;
    } else if (!theirs) {
        a_ *= o.a_;
        b_ *= o.a_;
    } else if (!mine) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
    } else {
        mpq_class na = a_ * o.a_ + mpq_class(d_) * b_ * o.b_;
        mpq_class nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (sgn(b_) == 0) {
        Scalar r;
        r.a_ = 1 / a_;
        r.d_ = d_;
        return r;
    }
    mpq_class n = norm();
    return Scalar(a_ / n, -b_ / n, d_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::conjugate() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

mpq_class Scalar::norm() const {
    mpq_class n = a_ * a_ - mpq_class(d_) * b_ * b_;
    return n;
}

int Scalar::real_sign() const {
    if (sgn(b_) == 0) return sgn(a_);
    if (d_ < 0) throw Error("sign of a non-real scalar");
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 with d b^2
    const int c = cmp(mpq_class(a_ * a_), mpq_class(mpq_class(d_) * b_ * b_));
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

bool Scalar::abs_greater_than_one() const {
    if (sgn(b_) == 0) return abs(a_) > 1;
    if (d_ < 0) return norm() > 1;  // |a + b i sqrt(-d)|^2 = a^2 - d b^2
    return (*this - Scalar(1)).real_sign() > 0 || (*this + Scalar(1)).real_sign() < 0;
}

std::size_t Scalar::height_bits() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
    mpz_class na = a_.get_num() * (l / a_.get_den());
    mpz_class nb = b_.get_num() * (l / b_.get_den());
    return std::max({bits(l), bits(na), bits(nb)});
}

std::strong_ordering lexicographic(const Scalar& x, const Scalar& y) {
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Scalar::is_compound() const {
    if (sgn(a_) != 0 && sgn(b_) != 0) return true;
    if (sgn(a_) < 0 || sgn(b_) < 0) return true;
    return false;
}

std::string Scalar::str() const {
    std::ostringstream os;
    const bool has_a = sgn(a_) != 0;
    const bool has_b = sgn(b_) != 0;
    if (!has_b) {
        os << a_.get_str();
        return os.str();
    }
    if (has_a) os << a_.get_str() << (sgn(b_) < 0 ? " - " : " + ");
    mpq_class mb = has_a ? mpq_class(abs(b_)) : b_;
    if (mb == 1) {
        os << alpha_symbol(d_);
    } else if (mb == -1) {
        os << "-" << alpha_symbol(d_);
    } else {
        os << mb.get_str() << "*" << alpha_symbol(d_);
    }
    return os.str();
}

}  // namespace denv
