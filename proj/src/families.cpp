#include "denv/families.hpp"

#include "denv/equations.hpp"

namespace denv {

RatFun monomial(int k) {
    if (k >= -1 && k <= 1) throw Error("monomial needs |k| >= 2");
    return RatFun::x().pow(k);
}

ChebyshevNorm parse_chebyshev_norm(const std::string& s) {
    if (s == "classical") return ChebyshevNorm::classical;
    if (s == "dilated") return ChebyshevNorm::dilated;
    throw Error("normalization must be classical or dilated");
}

RatFun chebyshev(int k, ChebyshevNorm norm) {
    if (k < 2) throw Error("chebyshev needs k >= 2");
    // classical: T_{k+1} = 2x T_k - T_{k-1}; dilated: P_{k+1} = x P_k - P_{k-1}.
    const bool classical = norm == ChebyshevNorm::classical;
    const Poly step = classical ? Poly::monomial(Scalar(2), 1) : Poly::x();
    Poly prev = classical ? Poly(1) : Poly(2);
    Poly cur = Poly::x();
    for (int i = 1; i < k; ++i) {
        Poly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return RatFun(cur);
}

namespace {

// f(x) * Y^ypow on Y^2 = cubic, kept with ypow in {0, 1}.
struct DivPoly {
    Poly f;
    int ypow = 0;
};

class DivisionPolys {
public:
    DivisionPolys(const Scalar& a, const Scalar& b) {
        cubic_ = Poly({b, a, Scalar(0), Scalar(1)});
        const Poly x = Poly::x();
        psi_.push_back({Poly(), 0});
        psi_.push_back({Poly(1), 0});
        psi_.push_back({Poly(2), 1});
        psi_.push_back({Poly({-a * a, Scalar(12) * b, Scalar(6) * a, Scalar(0), Scalar(3)}), 0});
        psi_.push_back({Poly({Scalar(-8) * b * b - a * a * a, Scalar(-4) * a * b, Scalar(-5) * a * a, Scalar(20) * b,
                              Scalar(5) * a, Scalar(0), Scalar(1)}) *
                            Poly(4),
                        1});
    }

    const DivPoly& get(int n) {
        while (static_cast<int>(psi_.size()) <= n) extend();
        return psi_[static_cast<std::size_t>(n)];
    }

    // Y^e reduced to a polynomial; e must be even.
    Poly flatten(const DivPoly& p) const {
        if (p.ypow != 0) throw Error("internal: odd power of y in a division polynomial product");
        return p.f;
    }

    DivPoly mul(const DivPoly& a, const DivPoly& b) const {
        DivPoly r{a.f * b.f, a.ypow + b.ypow};
        if (r.ypow == 2) {
            r.f = r.f * cubic_;
            r.ypow = 0;
        }
        return r;
    }

private:
    DivPoly sub(const DivPoly& a, const DivPoly& b) const {
        if (a.ypow != b.ypow && !a.f.is_zero() && !b.f.is_zero()) throw Error("internal: mixed y parity");
        return {a.f - b.f, a.f.is_zero() ? b.ypow : a.ypow};
    }
    DivPoly cube(const DivPoly& a) const { return mul(mul(a, a), a); }
    DivPoly square(const DivPoly& a) const { return mul(a, a); }
    DivPoly div_2y(DivPoly a) const {
        if (a.ypow == 1) {
            a.ypow = 0;
        } else {
            a.f = a.f.exact_div(cubic_);
            a.ypow = 1;
        }
        a.f = a.f * Scalar::ratio(1, 2);
        return a;
    }

    void extend() {
        const int n = static_cast<int>(psi_.size());
        const int m = n / 2;
        auto p = [this](int i) { return psi_[static_cast<std::size_t>(i)]; };
        if (n % 2 == 1) {
            psi_.push_back(sub(mul(p(m + 2), cube(p(m))), mul(p(m - 1), cube(p(m + 1)))));
        } else {
            const DivPoly inner = sub(mul(p(m + 2), square(p(m - 1))), mul(p(m - 2), square(p(m + 1))));
            psi_.push_back(div_2y(mul(p(m), inner)));
        }
    }

    Poly cubic_;
    std::vector<DivPoly> psi_;
};

}  // namespace

RatFun lattes(const LattesParams& p, int cap) {
    if (p.k < 2) throw Error("lattes needs k >= 2");
    if (p.k > cap) throw Error("lattes k exceeds the division-polynomial cap " + std::to_string(cap));
    if (p.discriminant().is_zero()) throw Error("singular cubic");
    // Y = y/2 gives Y^2 = x^3 + a x + b.
    const Scalar a = -p.g2 * Scalar::ratio(1, 4);
    const Scalar b = -p.g3 * Scalar::ratio(1, 4);
    DivisionPolys psi(a, b);
    const Poly den = psi.flatten(psi.mul(psi.get(p.k), psi.get(p.k)));
    const Poly cross = psi.flatten(psi.mul(psi.get(p.k - 1), psi.get(p.k + 1)));
    return RatFun(Poly::x() * den - cross, den);
}

std::pair<Scalar, Scalar> from_plus_convention(const Scalar& g2, const Scalar& g3) { return {-g2, -g3}; }

KnownMu known_mu(const FamilySpec& spec) {
    const RatFun z = RatFun::x();
    const RatFun g2(spec.g2);
    const RatFun g3(spec.g3);
    const RatFun half(Scalar::ratio(1, 2));
    KnownMu out;
    RatFun generator;
    switch (spec.case_id) {
        case 1:
            out.mu = RatFun();
            out.note = "rotation quotient";
            out.verified = true;
            return out;
        case 2:
            out.mu = RatFun(-1) / z;
            generator = monomial(2);
            break;
        case 3:
            out.mu = -z / (z * z - RatFun(4));
            generator = chebyshev(2, ChebyshevNorm::dilated);
            break;
        case 4:
            out.mu = -(RatFun(6) * z * z - g2 * half) / (RatFun(4) * z.pow(3) - g2 * z - g3);
            generator = lattes({spec.g2, spec.g3, 2});
            break;
        case 5:
            if (!spec.g3.is_zero()) throw Error("case 5 needs g3 = 0");
            out.mu = RatFun(-1) / (RatFun(4) * z) -
                     (RatFun(6) * z - g2 * half) / (RatFun(8) * z * z - RatFun(2) * g2 * z);
            break;
        case 6:
            if (!spec.g2.is_zero()) throw Error("case 6 needs g2 = 0");
            out.mu = RatFun(Scalar::ratio(-2, 3)) * z / (z * z + g3);
            break;
        case 7:
            if (!spec.g2.is_zero()) throw Error("case 7 needs g2 = 0");
            out.mu = RatFun(Scalar::ratio(-2, 9)) / z - RatFun(1) / (z - g3 * half);
            break;
        default:
            throw Error("unknown case id " + std::to_string(spec.case_id));
    }
    if (spec.case_id <= 4) {
        if (!eq_residual(GroupoidEq::g2(out.mu), generator).is_zero()) {
            throw Error("internal: tabulated coefficient fails its generator");
        }
        out.verified = true;
        out.note = "checked against " + generator.str();
    } else {
        out.note = "table entry, minus convention; no generator";
    }
    return out;
}

bool commutes(const RatFun& a, const RatFun& b) { return a.compose(b) == b.compose(a); }

}  // namespace denv
