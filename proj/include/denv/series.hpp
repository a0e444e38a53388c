#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "denv/bigfloat.hpp"
#include "denv/ratfun.hpp"
#include "denv/scalar.hpp"

namespace denv {

/// Constructors for coefficient rings used by Series. BigFloatC needs a
/// reference value to inherit precision from.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Scalar> {
    static Scalar zero_like(const Scalar&) { return {}; }
    static Scalar from(const Scalar& s, const Scalar&) { return s; }
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
};

template <>
struct RingTraits<BigFloatC> {
    static BigFloatC zero_like(const BigFloatC& ref) { return BigFloatC(ref.precision()); }
    static BigFloatC from(const Scalar& s, const BigFloatC& ref) { return {s, ref.precision()}; }
    static bool is_zero(const BigFloatC& s) { return s.is_zero(); }
};

/// Truncated power series sum_{k<=N} c_k t^k.
template <class T>
class Series {
public:
    using Traits = RingTraits<T>;

    Series() = default;
    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {}
    /// Zero series of the given order, with ring reference `ref`.
    static Series zero(int order, const T& ref) {
        return Series(std::vector<T>(static_cast<std::size_t>(order) + 1, Traits::zero_like(ref)));
    }
    static Series constant(const T& c, int order) {
        Series s = zero(order, c);
        s.c_[0] = c;
        return s;
    }
    /// The series t, truncated at `order`.
    static Series variable(int order, const T& ref) {
        Series s = zero(order, ref);
        if (order >= 1) s.c_[1] = Traits::from(Scalar(1), ref);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    T& operator[](std::size_t k) { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& ref() const { return c_.front(); }

    Series truncate(int order) const {
        return Series(std::vector<T>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
    }

    friend Series operator+(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r = a.truncate(n);
        for (int k = 0; k <= n; ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r = a.truncate(n);
        for (int k = 0; k <= n; ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r = zero(n, a.ref());
        for (int i = 0; i <= n; ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (!Traits::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend Series operator*(Series a, const T& s) {
        for (auto& v : a.c_) v *= s;
        return a;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    /// Derivative; the order drops by one.
    Series derivative() const {
        if (order() == 0) return zero(0, ref());
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            d.push_back(c_[k] * Traits::from(Scalar(static_cast<long>(k)), ref()));
        }
        return Series(std::move(d));
    }

    /// t -> lambda t.
    Series scale(const T& lambda) const {
        Series r = *this;
        T p = Traits::from(Scalar(1), ref());
        for (auto& v : r.c_) {
            v *= p;
            p *= lambda;
        }
        return r;
    }

    /// Largest coefficient index with a nonzero entry among k >= from, or -1.
    int last_nonzero(int from = 0) const {
        for (int k = order(); k >= from; --k) {
            if (!Traits::is_zero(c_[k])) return k;
        }
        return -1;
    }

private:
    std::vector<T> c_;
};

/// 1/a by the coefficient recursion b_k = -(sum_{i>=1} a_i b_{k-i}) / a_0.
template <class T>
Series<T> reciprocal_naive(const Series<T>& a) {
    using Tr = RingTraits<T>;
    if (Tr::is_zero(a[0])) throw Error("series reciprocal: zero constant term");
    Series<T> b = Series<T>::zero(a.order(), a.ref());
    const T inv = Tr::from(Scalar(1), a.ref()) / a[0];
    b[0] = inv;
    for (int k = 1; k <= a.order(); ++k) {
        T acc = Tr::zero_like(a.ref());
        for (int i = 1; i <= k; ++i) {
            if (!Tr::is_zero(a[i])) acc += a[i] * b[k - i];
        }
        b[k] = -(acc * inv);
    }
    return b;
}

/// 1/a by Newton iteration b <- b (2 - a b), doubling the valid order each step.
template <class T>
Series<T> reciprocal(const Series<T>& a) {
    using Tr = RingTraits<T>;
    if (Tr::is_zero(a[0])) throw Error("series reciprocal: zero constant term");
    const int n = a.order();
    Series<T> b = Series<T>::constant(Tr::from(Scalar(1), a.ref()) / a[0], 0);
    int have = 0;
    while (have < n) {
        const int next = std::min(n, 2 * have + 1);
        Series<T> bb = Series<T>::zero(next, a.ref());
        for (int k = 0; k <= b.order(); ++k) bb[k] = b[k];
        Series<T> ab = a.truncate(next) * bb;
        Series<T> two_minus = -ab;
        two_minus[0] += Tr::from(Scalar(2), a.ref());
        b = bb * two_minus;
        have = next;
    }
    return b;
}

/// f(g(t)) for g with zero constant term (Horner).
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
    using Tr = RingTraits<T>;
    if (!Tr::is_zero(g[0])) throw Error("series composition needs an inner series without constant term");
    const int n = std::min(f.order(), g.order());
    Series<T> acc = Series<T>::constant(f[static_cast<std::size_t>(f.order())], n);
    for (int i = f.order() - 1; i >= 0; --i) {
        acc = acc * g.truncate(n);
        acc[0] += f[i];
    }
    return acc;
}

/// p(s(t)) for a polynomial p and any series s (Horner).
template <class T>
Series<T> compose(const Poly& p, const Series<T>& s) {
    using Tr = RingTraits<T>;
    Series<T> acc = Series<T>::zero(s.order(), s.ref());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * s;
        acc[0] += Tr::from(p.coeff(i), s.ref());
    }
    return acc;
}

/// r(s(t)); the denominator of r must not vanish at s(0).
template <class T>
Series<T> compose(const RatFun& r, const Series<T>& s) {
    Series<T> top = compose(r.num(), s);
    if (r.den().degree() == 0) return top * RingTraits<T>::from(r.den().lc().inverse(), s.ref());
    return top * reciprocal(compose(r.den(), s));
}

/// Compositional inverse by solving s(r(t)) = t one coefficient at a time.
template <class T>
Series<T> reversion_naive(const Series<T>& s) {
    using Tr = RingTraits<T>;
    if (!Tr::is_zero(s[0]) || s.order() < 1 || Tr::is_zero(s[1])) {
        throw Error("series reversion needs s(0) = 0 and s'(0) != 0");
    }
    const int n = s.order();
    Series<T> r = Series<T>::zero(n, s.ref());
    const T inv = Tr::from(Scalar(1), s.ref()) / s[1];
    r[1] = inv;
    for (int k = 2; k <= n; ++k) {
        // coefficient k of s(r) with r_k = 0 is the defect; the r_k contribution is s_1 r_k.
        Series<T> cur = compose(s, r.truncate(k));
        r[k] = -(cur[k] * inv);
    }
    return r;
}

/// Compositional inverse by Newton iteration r <- r - (s(r) - t) / s'(r).
template <class T>
Series<T> reversion(const Series<T>& s) {
    using Tr = RingTraits<T>;
    if (!Tr::is_zero(s[0]) || s.order() < 1 || Tr::is_zero(s[1])) {
        throw Error("series reversion needs s(0) = 0 and s'(0) != 0");
    }
    const int n = s.order();
    Series<T> r = Series<T>::zero(1, s.ref());
    r[1] = Tr::from(Scalar(1), s.ref()) / s[1];
    int have = 1;
    while (have < n) {
        const int next = std::min(n, 2 * have);
        Series<T> rr = Series<T>::zero(next, s.ref());
        for (int k = 0; k <= r.order(); ++k) rr[k] = r[k];
        Series<T> defect = compose(s.truncate(next), rr) - Series<T>::variable(next, s.ref());
        Series<T> slope = compose(s.derivative(), rr.truncate(next - 1));
        Series<T> inv = reciprocal(slope);
        // defect has no constant term, so inv is only needed to order next - 1.
        Series<T> step = Series<T>::zero(next, s.ref());
        for (int k = 1; k <= next; ++k) {
            for (int j = 1; j <= k; ++j) {
                if (!Tr::is_zero(defect[j])) step[k] += defect[j] * inv[k - j];
            }
        }
        r = rr - step;
        have = next;
    }
    return r;
}

}  // namespace denv
