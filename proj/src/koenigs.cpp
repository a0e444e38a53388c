#include "denv/koenigs.hpp"

namespace denv {

int GermSeries::order() const { return exact ? exact->order() : numeric ? numeric->order() : -1; }

BigFloat GermSeries::max_abs(int from, mpfr_prec_t prec) const {
    BigFloat best(0.0, prec);
    if (exact) {
        for (int k = from; k <= exact->order(); ++k) {
            const auto& c = (*exact)[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            BigFloat v = BigFloatC(c, prec).abs();
            if (v > best) best = v;
        }
    } else if (numeric) {
        for (int k = from; k <= numeric->order(); ++k) {
            BigFloat v = (*numeric)[static_cast<std::size_t>(k)].abs();
            if (v > best) best = v;
        }
    }
    return best;
}

std::vector<std::string> GermSeries::coefficient_strings(int digits) const {
    std::vector<std::string> out;
    if (exact) {
        for (const auto& c : exact->coeffs()) out.push_back(c.str());
    } else if (numeric) {
        for (const auto& c : numeric->coeffs()) out.push_back(c.str(digits));
    }
    return out;
}

std::vector<std::string> KoenigsSeries::coefficient_strings(int digits) const {
    std::vector<std::string> all = psi.coefficient_strings(digits);
    if (!all.empty()) all.erase(all.begin());
    return all;
}

namespace {

// a_k (lambda^k - lambda) = sum_{j>=2} r_j [w^k] u^j with u = w + a_2 w^2 + ...
template <class T>
Series<T> koenigs_core(const RatFun& r, const T& p, const T& lambda, int n) {
    using Tr = RingTraits<T>;
    const T zero = Tr::zero_like(p);
    const T one = Tr::from(Scalar(1), p);
    Series<T> shifted = Series<T>::variable(n, p);
    shifted[0] = p;
    const Series<T> taylor = compose(r, shifted);

    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<T>> pw(size, std::vector<T>(size, zero));
    Series<T> psi = Series<T>::zero(n, p);
    psi[0] = p;
    if (n >= 1) {
        psi[1] = one;
        pw[1][1] = one;
    }
    T lk = lambda;
    for (int k = 2; k <= n; ++k) {
        lk = lk * lambda;
        T acc = zero;
        for (int j = 2; j <= k; ++j) {
            T c = zero;
            for (int i = 1; i <= k - j + 1; ++i) {
                const T& prev = pw[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - i)];
                if (!Tr::is_zero(psi[static_cast<std::size_t>(i)]) && !Tr::is_zero(prev)) c += psi[i] * prev;
            }
            pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c;
            if (!Tr::is_zero(taylor[static_cast<std::size_t>(j)])) acc += taylor[j] * c;
        }
        psi[k] = acc / (lk - lambda);
        pw[1][static_cast<std::size_t>(k)] = psi[k];
    }
    return psi;
}

const Scalar& exact_point(const Series<Scalar>& s) { return s[0]; }

void require_finite_at_base(const RatFun& f, const KoenigsSeries& psi) {
    const char* msg = "coefficient has a pole at the base point; pick another point with repelling_point_avoiding";
    if (psi.psi.exact) {
        if (f.den().eval(exact_point(*psi.psi.exact)).is_zero()) throw Error(msg);
    } else {
        BigFloat tol(1.0, psi.precision);
        mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(psi.precision / 2), MPFR_RNDN);
        if (!(f.den().eval((*psi.psi.numeric)[0]).abs() > tol)) throw Error(msg);
    }
}

template <class T>
Series<T> power(const Series<T>& s, int e) {
    Series<T> out = Series<T>::constant(RingTraits<T>::from(Scalar(1), s.ref()), s.order());
    for (int i = 0; i < e; ++i) out = out * s;
    return out;
}

}  // namespace

KoenigsSeries koenigs_series(const RatFun& r, const FixedPointData& p, int order, mpfr_prec_t prec) {
    if (order < 1) throw Error("series order must be at least 1");
    if (p.exact && p.exact->is_infinity()) throw Error("base point must be finite; conjugate infinity away first");
    KoenigsSeries out;
    out.order = order;
    out.precision = prec;
    out.point = p.point_str();
    out.multiplier = p.multiplier_str();
    if (p.exact && p.multiplier) {
        const Scalar& z = p.exact->value();
        if (!(r.eval(PointP1(z)) == PointP1(z))) throw Error("base point is not fixed");
        const Scalar lambda = r.derivative().eval(z);
        if (lambda.is_zero()) throw Error("critical point: the multiplier vanishes");
        Scalar lk = lambda;
        for (int k = 2; k <= order; ++k) {
            lk *= lambda;
            if (lk == lambda) throw Error("resonant multiplier");
        }
        out.lambda = lambda;
        out.multiplier = lambda.str();
        out.psi.exact = koenigs_core(r, z, lambda, order);
        return out;
    }
    if (!p.numeric) throw Error("fixed point carries no value");
    const BigFloatC z = BigFloatC(p.numeric->re(), p.numeric->im());
    const BigFloatC lambda = r.derivative().eval(z);
    if (!(lambda.abs() > BigFloat(1.0, prec))) throw Error("not repelling");
    out.numeric_lambda = lambda;
    out.psi.numeric = koenigs_core(r, z, lambda, order);
    return out;
}

KoenigsSeries koenigs_series(const RatFun& r, const Scalar& p, int order) {
    FixedPointData d;
    d.exact = PointP1(p);
    d.multiplier = r.derivative().eval(p);
    return koenigs_series(r, d, order);
}

BigFloat linearization_residual(const RatFun& r, const KoenigsSeries& psi) {
    GermSeries diff;
    if (psi.psi.exact) {
        const auto& s = *psi.psi.exact;
        diff.exact = compose(r, s) - s.scale(*psi.lambda);
    } else {
        const auto& s = *psi.psi.numeric;
        diff.numeric = compose(r, s) - s.scale(*psi.numeric_lambda);
    }
    return diff.max_abs(0, psi.precision);
}

GermSeries pullback_mu_series(const RatFun& mu, const KoenigsSeries& psi) {
    require_finite_at_base(mu, psi);
    GermSeries out;
    const GroupoidEq e = GroupoidEq::g2(mu);
    if (psi.psi.exact) {
        out.exact = gauge_series(e, *psi.psi.exact);
    } else {
        out.numeric = gauge_series(e, *psi.psi.numeric);
    }
    return out;
}

GermSeries pullback_nu_series(const RatFun& nu, const KoenigsSeries& psi) {
    require_finite_at_base(nu, psi);
    GermSeries out;
    const GroupoidEq e = GroupoidEq::g3(nu);
    if (psi.psi.exact) {
        out.exact = gauge_series(e, *psi.psi.exact);
    } else {
        out.numeric = gauge_series(e, *psi.psi.numeric);
    }
    return out;
}

GermSeries scaling_defect(const GermSeries& bar, const KoenigsSeries& psi, int weight) {
    GermSeries out;
    if (bar.exact) {
        const Scalar f = psi.lambda->pow(weight);
        out.exact = bar.exact->scale(*psi.lambda) * f - *bar.exact;
    } else {
        const BigFloatC f = psi.numeric_lambda->pow(weight);
        out.numeric = bar.numeric->scale(*psi.numeric_lambda) * f - *bar.numeric;
    }
    return out;
}

GermSeries residual_pullback(const RatFun& rho, const KoenigsSeries& psi, int weight, int order) {
    require_finite_at_base(rho, psi);
    GermSeries out;
    if (psi.psi.exact) {
        const auto& s = *psi.psi.exact;
        out.exact = compose(rho, s.truncate(order)) * power(s.derivative().truncate(order), weight);
    } else {
        const auto& s = *psi.psi.numeric;
        out.numeric = compose(rho, s.truncate(order)) * power(s.derivative().truncate(order), weight);
    }
    return out;
}

Series<Scalar> germ_series(const GermData& g, int order) {
    if (order < 1) throw Error("series order must be at least 1");
    Series<Scalar> s = Series<Scalar>::zero(order, Scalar());
    switch (g.kind) {
        case GermKind::exp: {
            Scalar c = g.value;
            for (int k = 0; k <= order; ++k) {
                if (k > 0) c /= Scalar(k);
                s[k] = c;
            }
            return s;
        }
        case GermKind::cos2:
        case GermKind::wp: {
            s[0] = g.value;
            s[1] = g.slope;
            for (int k = 0; k + 2 <= order; ++k) {
                Scalar rhs;
                if (g.kind == GermKind::cos2) {
                    rhs = -s[k];
                } else {
                    for (int i = 0; i <= k; ++i) rhs += s[i] * s[k - i];
                    rhs *= Scalar(6);
                    if (k == 0) rhs -= g.g2 * Scalar::ratio(1, 2);
                }
                s[k + 2] = rhs / Scalar(static_cast<long>(k + 1) * (k + 2));
            }
            return s;
        }
        case GermKind::poly: {
            const Poly shifted = g.poly.shift(g.center);
            for (int k = 0; k <= std::min(order, shifted.degree()); ++k) s[k] = shifted.coeff(k);
            return s;
        }
    }
    return s;
}

Series<BigFloatC> germ_series_numeric(GermKind kind, const BigFloatC& center, int order) {
    if (order < 1) throw Error("series order must be at least 1");
    const mpfr_prec_t prec = center.precision();
    Series<BigFloatC> s = Series<BigFloatC>::zero(order, BigFloatC(prec));
    if (kind == GermKind::exp) {
        BigFloatC c = exp(center);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) c /= BigFloatC(Scalar(k), prec);
            s[k] = c;
        }
        return s;
    }
    if (kind != GermKind::cos2) throw Error("numeric germs are exp and cos2");
    const BigFloatC two(Scalar(2), prec);
    s[0] = two * cos(center);
    s[1] = -(two * sin(center));
    for (int k = 0; k + 2 <= order; ++k) {
        s[k + 2] = -s[k] / BigFloatC(Scalar(static_cast<long>(k + 1) * (k + 2)), prec);
    }
    return s;
}

namespace {

template <class T>
Series<T> deck_gamma(Series<T> a, Series<T> b) {
    if (RingTraits<T>::is_zero(b[1])) throw Error("critical point at the target center");
    a[0] = RingTraits<T>::zero_like(a.ref());
    b[0] = RingTraits<T>::zero_like(b.ref());
    return compose(reversion(b), a);
}

}  // namespace

DeckResult deck_transform_series(const GermData& at_w0, const GermData& at_w1, int order) {
    const Series<Scalar> a = germ_series(at_w0, order);
    const Series<Scalar> b = germ_series(at_w1, order);
    if (!(a[0] == b[0])) throw Error("germ values differ at the two centers");
    DeckResult out{GermSeries{}, BigFloat(0.0, kDefaultPrecision), BigFloat(0.0, kDefaultPrecision)};
    out.gamma.exact = deck_gamma(a, b);
    out.nonlinear = out.gamma.max_abs(2);
    return out;
}

DeckResult deck_transform_series_numeric(GermKind kind, const BigFloatC& w0, const BigFloatC& w1, int order) {
    const mpfr_prec_t prec = std::max(w0.precision(), w1.precision());
    const Series<BigFloatC> a = germ_series_numeric(kind, w0, order);
    const Series<BigFloatC> b = germ_series_numeric(kind, w1, order);
    DeckResult out{GermSeries{}, BigFloat(0.0, prec), (a[0] - b[0]).abs()};
    BigFloat tol(1.0, prec);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(prec / 2), MPFR_RNDN);
    if (out.value_gap > tol) throw Error("germ values differ at the two centers");
    out.gamma.numeric = deck_gamma(a, b);
    out.nonlinear = out.gamma.max_abs(2, prec);
    return out;
}

}  // namespace denv
