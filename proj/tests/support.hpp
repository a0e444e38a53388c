#pragma once

#include <random>
#include <vector>

#include "denv/ratfun.hpp"

namespace denv::test {

inline Poly poly(std::initializer_list<long> c) {
    std::vector<Scalar> s;
    for (long v : c) s.emplace_back(v);
    return Poly(std::move(s));
}

inline RatFun rat(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return RatFun(poly(num), poly(den));
}

inline Scalar q(long n, long d = 1) { return Scalar::ratio(n, d); }

/// Fixed-seed generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Scalar scalar(long bound = 5) {
        const long den = integer(1, 3);
        return Scalar::ratio(integer(-bound, bound), den);
    }

    Scalar nonzero_scalar(long bound = 5) {
        Scalar s;
        while (s.is_zero()) s = scalar(bound);
        return s;
    }

    Poly poly(int degree, long bound = 5) {
        std::vector<Scalar> c;
        for (int i = 0; i < degree; ++i) c.push_back(scalar(bound));
        c.push_back(nonzero_scalar(bound));
        return Poly(std::move(c));
    }

    /// Nonconstant map of degree in [1, max_degree].
    RatFun map(int max_degree, long bound = 5) {
        while (true) {
            const int dn = static_cast<int>(integer(0, max_degree));
            const int dd = static_cast<int>(integer(0, max_degree));
            RatFun r(poly(dn, bound), poly(dd, bound));
            if (r.degree() >= 1) return r;
        }
    }

    RatFun mobius(long bound = 4) {
        while (true) {
            const Scalar a = scalar(bound), b = scalar(bound), c = scalar(bound), d = scalar(bound);
            if ((a * d - b * c).is_zero()) continue;
            return RatFun(Poly({b, a}), Poly({d, c}));
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace denv::test
