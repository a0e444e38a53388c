#include "denv/dynamics.hpp"

#include <algorithm>

namespace denv {

std::string FixedPointData::point_str() const {
    if (exact) return exact->str();
    return numeric ? numeric->str(20) : "?";
}

std::string FixedPointData::multiplier_str() const {
    if (multiplier) return multiplier->str();
    return numeric_multiplier ? numeric_multiplier->str(20) : "?";
}

namespace {

const RatFun& inversion() {
    static const RatFun inv(Poly(1), Poly::x());
    return inv;
}

Scalar multiplier_at(const RatFun& rn, const PointP1& p) {
    if (p.is_infinity()) return mobius_conjugate(rn, inversion()).derivative().eval(Scalar());
    return rn.derivative().eval(p.value());
}

BigFloatC rounded(const BigFloatC& z, mpfr_prec_t prec) {
    BigFloat re(prec), im(prec);
    mpfr_set(re.get(), z.re().get(), MPFR_RNDN);
    mpfr_set(im.get(), z.im().get(), MPFR_RNDN);
    return {std::move(re), std::move(im)};
}

BigFloatC widened(const BigFloatC& z, mpfr_prec_t prec) { return rounded(z, prec); }

bool numeric_less(const BigFloatC& a, const BigFloatC& b) {
    if (a.re() < b.re()) return true;
    if (b.re() < a.re()) return false;
    return a.im() < b.im();
}

}  // namespace

std::vector<FixedPointData> fixed_points(const RatFun& r, int period, const Field& field, mpfr_prec_t prec) {
    if (period < 1) throw Error("period must be at least 1");
    const RatFun rn = rf_iterate(r, period);
    const Poly f = rn.num() - Poly::x() * rn.den();
    if (f.is_zero()) throw Error("every point is fixed by this iterate");
    const int inf_mult = rn.degree() + 1 - f.degree();

    std::vector<FixedPointData> out;
    const RatFun drn = rn.derivative();
    const RootSet roots = find_roots(f, field, prec);
    for (const auto& [p, m] : roots.exact) {
        FixedPointData d;
        d.exact = PointP1(p);
        d.multiplier = multiplier_at(rn, p);
        d.period = period;
        d.multiplicity = m;
        d.repelling = d.multiplier->abs_greater_than_one();
        out.push_back(std::move(d));
    }
    if (inf_mult > 0) {
        FixedPointData d;
        d.exact = PointP1::infinity();
        d.multiplier = multiplier_at(rn, PointP1::infinity());
        d.period = period;
        d.multiplicity = inf_mult;
        d.repelling = d.multiplier->abs_greater_than_one();
        out.push_back(std::move(d));
    }
    std::vector<std::pair<BigFloatC, int>> numeric = roots.numeric;
    std::sort(numeric.begin(), numeric.end(), [](const auto& a, const auto& b) { return numeric_less(a.first, b.first); });
    // The multiplier is a tall high-degree evaluation: polish the root with guard bits first.
    const mpfr_prec_t work = prec + static_cast<mpfr_prec_t>(std::max(drn.num().height_bits(), drn.den().height_bits())) +
                             2 * rn.degree() + 32;
    const Poly sf = numeric.empty() ? Poly() : squarefree_part(f);
    const Poly dsf = sf.derivative();
    for (const auto& [z, m] : numeric) {
        BigFloatC zw = widened(z, work);
        for (mpfr_prec_t bits = prec; bits < 2 * work; bits *= 2) zw -= sf.eval(zw) / dsf.eval(zw);
        FixedPointData d;
        d.numeric = rounded(zw, prec);
        d.numeric_multiplier = rounded(drn.eval(zw), prec);
        d.period = period;
        d.multiplicity = m;
        d.repelling = d.numeric_multiplier->abs() > BigFloat(1.0, prec);
        out.push_back(std::move(d));
    }
    return out;
}

FixedPointData repelling_point_avoiding(const RatFun& r, const Divisor& avoid, const DynamicsCaps& caps) {
    if (r.degree() < 2) throw Error("repelling points need degree at least 2");
    const mpfr_prec_t prec = caps.precision;

    std::vector<BigFloatC> avoid_numeric;
    for (const auto& [f, m] : avoid.factors()) {
        for (auto& z : aberth_roots(f, prec)) avoid_numeric.push_back(std::move(z));
    }
    BigFloat near(1.0, prec);
    mpfr_mul_2si(near.get(), near.get(), -static_cast<long>(prec / 4), MPFR_RNDN);

    auto exact_orbit_ok = [&](const PointP1& p, int n) {
        PointP1 q = p;
        for (int i = 0; i < n; ++i) {
            if (q.is_infinity() || avoid.contains(q)) return false;
            q = r.eval(q);
        }
        return true;
    };
    auto numeric_orbit_ok = [&](const BigFloatC& p, int n) {
        BigFloatC q = p;
        for (int i = 0; i < n; ++i) {
            for (const auto& a : avoid_numeric) {
                if (!((q - a).abs() > near)) return false;
            }
            if (!(r.den().eval(q).abs() > near)) return false;
            q = r.eval(q);
        }
        return true;
    };

    std::optional<FixedPointData> numeric_choice;
    long degree_n = 1;
    for (int n = 1; n <= caps.period_cap; ++n) {
        degree_n *= r.degree();
        if (degree_n > caps.root_degree_cap) break;
        for (auto& d : fixed_points(r, n, caps.field, prec)) {
            if (!d.repelling) continue;
            if (d.exact) {
                if (exact_orbit_ok(*d.exact, n)) return d;
            } else if (!numeric_choice && numeric_orbit_ok(*d.numeric, n)) {
                numeric_choice = std::move(d);
            }
        }
    }
    if (numeric_choice) return *numeric_choice;
    throw Error("no exact-field repelling point found; retry numerically or raise cap");
}

Divisor critical_divisor(const RatFun& r) {
    const Poly& p = r.num();
    const Poly& q = r.den();
    const Poly w = p.derivative() * q - p * q.derivative();
    std::vector<Divisor::Factor> factors;
    if (w.degree() > 0) {
        for (auto& [f, m] : squarefree_decomposition(w)) factors.emplace_back(std::move(f), m);
    }
    const int inf_mult = r.degree() < 1 ? 0 : 2 * r.degree() - 2 - std::max(w.degree(), 0);
    return Divisor(std::move(factors), inf_mult);
}

std::size_t default_height_cap(const RatFun& r) {
    return 32 + 4 * std::max(r.num().height_bits(), r.den().height_bits());
}

ClosureResult postcritical_closure(const RatFun& r, const DynamicsCaps& caps) {
    if (r.degree() < 2) throw Error("postcritical closure needs degree at least 2");
    const std::size_t height_cap = caps.height_cap.value_or(default_height_cap(r));
    ClosureResult out;
    auto overflowed = [&](const Divisor& d) {
        if (d.support_size() > caps.orbit_cap) {
            out.overflow_reason = "postcritical support exceeds " + std::to_string(caps.orbit_cap) + " points";
            return true;
        }
        if (d.height_bits() > height_cap) {
            out.overflow_reason = "postcritical height exceeds " + std::to_string(height_cap) + " bits";
            return true;
        }
        return false;
    };

    Divisor d = divisor_pushforward(critical_divisor(r).support(), r);
    out.iterations = 1;
    while (true) {
        if (overflowed(d)) return out;
        Divisor next = d.unite(divisor_pushforward(d, r));
        ++out.iterations;
        if (next.same_support(d)) {
            out.divisor = d.support();
            return out;
        }
        d = std::move(next);
    }
}

Divisor exceptional_set(const RatFun& r) {
    if (r.degree() < 2) throw Error("exceptional set needs degree at least 2");
    const int full = r.degree() - 1;
    const Divisor crit = critical_divisor(r);
    std::vector<Divisor::Factor> total;
    for (const auto& [f, m] : crit.factors()) {
        if (m == full) total.emplace_back(f, 1);
    }
    Divisor s(std::move(total), crit.inf_mult() == full ? 1 : 0);
    while (!s.empty()) {
        Divisor next = s.intersect(divisor_pullback(s, r));
        if (next.same_support(s)) break;
        s = std::move(next);
    }
    return s;
}

}  // namespace denv
