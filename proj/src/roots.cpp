#include "denv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace denv {

namespace {

using cplx = std::complex<double>;

bool fits_double(const Poly& p) {
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        BigFloatC z(c, 64);
        const double l = std::max(z.re().log2_abs(), z.im().log2_abs());
        if (l > 900 || l < -900) return false;
    }
    return true;
}

std::vector<cplx> to_double(const Poly& p) {
    std::vector<cplx> out;
    for (const auto& c : p.coeffs()) {
        BigFloatC z(c, 64);
        out.emplace_back(z.re().to_double(), z.im().to_double());
    }
    return out;
}

// Fujiwara bound on the root moduli.
double root_radius(const std::vector<cplx>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    double r = 0;
    for (int k = 1; k <= n; ++k) {
        const double v = std::abs(c[n - k] / c[n]);
        if (v > 0) r = std::max(r, std::pow(v, 1.0 / k));
    }
    return std::max(2 * r, 1e-3);
}

std::vector<cplx> initial_guesses(const std::vector<cplx>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    const double r = root_radius(c);
    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(r, 2 * M_PI * k / n + 0.4);
    return z;
}

// p/p' at z. Outside the unit disk the reversed polynomial is used in 1/z so
// that tall, high-degree inputs do not overflow.
cplx newton_ratio(const std::vector<cplx>& c, const cplx& z) {
    const int n = static_cast<int>(c.size()) - 1;
    cplx v = 0, dv = 0;
    if (std::abs(z) <= 1) {
        v = c[n];
        for (int k = n - 1; k >= 0; --k) {
            dv = dv * z + v;
            v = v * z + c[k];
        }
        return v == cplx(0) ? cplx(0) : v / dv;
    }
    const cplx y = 1.0 / z;
    v = c[0];
    for (int k = 1; k <= n; ++k) {
        dv = dv * y + v;
        v = v * y + c[k];
    }
    if (v == cplx(0)) return 0;
    return z * v / (static_cast<double>(n) * v - y * dv);
}

// Aberth in double precision; the result only seeds the multiprecision pass.
void aberth_double(const std::vector<cplx>& c, std::vector<cplx>& z) {
    const int n = static_cast<int>(z.size());
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            const cplx ratio = newton_ratio(c, z[i]);
            if (ratio == cplx(0)) continue;
            cplx sum = 0;
            for (int j = 0; j < n; ++j) {
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            }
            const cplx w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-14) return;
    }
}

}  // namespace

std::vector<BigFloatC> aberth_roots(const Poly& p, mpfr_prec_t prec) {
    const int n = p.degree();
    if (n < 1) return {};
    // Guard bits absorb cancellation in Horner evaluation of tall polynomials.
    const mpfr_prec_t work = prec + static_cast<mpfr_prec_t>(p.height_bits()) + 2 * n + 32;
    std::vector<BigFloatC> c;
    for (const auto& s : p.coeffs()) c.emplace_back(s, work);
    auto round_out = [prec](const BigFloatC& z) {
        BigFloat re(prec), im(prec);
        mpfr_set(re.get(), z.re().get(), MPFR_RNDN);
        mpfr_set(im.get(), z.im().get(), MPFR_RNDN);
        return BigFloatC(std::move(re), std::move(im));
    };
    if (n == 1) return {round_out(-(c[0] / c[1]))};

    std::vector<BigFloatC> z;
    if (fits_double(p)) {
        auto cd = to_double(p);
        auto zd = initial_guesses(cd);
        aberth_double(cd, zd);
        for (const auto& v : zd) z.emplace_back(v.real(), v.imag(), work);
    } else {
        // Start on a circle of radius 2^(max log2 ratio + 1), staying in mpfr.
        double l = 0;
        const BigFloat lead = c[n].abs();
        for (int k = 0; k < n; ++k) {
            if (!c[k].is_zero()) l = std::max(l, (c[k].abs() / lead).log2_abs() / (n - k));
        }
        for (int k = 0; k < n; ++k) {
            const double t = 2 * M_PI * k / n + 0.4;
            BigFloat re(std::cos(t), work), im(std::sin(t), work);
            mpfr_mul_2si(re.get(), re.get(), static_cast<long>(l) + 1, MPFR_RNDN);
            mpfr_mul_2si(im.get(), im.get(), static_cast<long>(l) + 1, MPFR_RNDN);
            z.emplace_back(std::move(re), std::move(im));
        }
    }

    std::vector<BigFloat> mag;
    for (const auto& v : c) mag.push_back(v.abs());
    BigFloat tol(1.0, work);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(prec) - 8, MPFR_RNDN);
    BigFloat eps(1.0, work);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(work) + 2 * n + 16, MPFR_RNDN);
    const BigFloat one(1.0, work);
    const BigFloatC unit(one, BigFloat(work));
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<cplx> zd(static_cast<std::size_t>(n));
    std::vector<bool> usable(static_cast<std::size_t>(n), false);
    auto refresh = [&](int i) {
        zd[i] = cplx(z[i].re().to_double(), z[i].im().to_double());
        const double a = std::abs(zd[i]);
        usable[i] = std::isfinite(a) && a < 1e300 && (a == 0 || a > 1e-300);
    };
    for (int i = 0; i < n; ++i) refresh(i);
    const int max_iter = 100 + 4 * n;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool settled = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            BigFloatC v = c[n];
            BigFloatC dv(work);
            BigFloat bound = mag[n];
            const BigFloat az = z[i].abs();
            for (int k = n - 1; k >= 0; --k) {
                dv = dv * z[i] + v;
                v = v * z[i] + c[k];
                bound = bound * az + mag[k];
            }
            if (v.is_zero()) {
                done[i] = true;
                continue;
            }
            const BigFloatC ratio = v / dv;
            // The sum only enters at second order, so double precision is enough
            // except for nearly coincident pairs.
            BigFloatC sum(work);
            cplx fast = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx d = zd[i] - zd[j];
                if (usable[i] && usable[j] && std::abs(d) > 1e-9 * std::max(1.0, std::abs(zd[i]))) {
                    fast += 1.0 / d;
                } else {
                    sum += unit / (z[i] - z[j]);
                }
            }
            sum += BigFloatC(BigFloat(fast.real(), work), BigFloat(fast.imag(), work));
            const BigFloatC w = ratio / (unit - ratio * sum);
            z[i] -= w;
            refresh(i);
            BigFloat size = z[i].abs();
            if (size < one) size = one;
            if (!(w.abs() > tol * size)) {
                done[i] = true;
            } else if (!(v.abs() > eps * bound)) {
                // Backward error at rounding level; further steps cannot improve it.
                done[i] = true;
            } else {
                settled = false;
            }
        }
        if (settled) {
            std::vector<BigFloatC> out;
            for (const auto& v : z) out.push_back(round_out(v));
            return out;
        }
    }
    throw Error("root isolation did not converge at " + std::to_string(prec) + " bits; retry with precision " +
                std::to_string(2 * prec));
}

std::optional<mpq_class> recognize_rational(const BigFloat& x) {
    const mpfr_prec_t prec = x.precision();
    if (x.is_zero()) return mpq_class(0);
    BigFloat tol = x.abs();
    if (tol < BigFloat(1.0, prec)) tol = BigFloat(1.0, prec);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(3 * prec / 4), MPFR_RNDN);

    const mpq_class exact = x.to_rational();
    mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
    mpq_class y = exact;
    for (int step = 0; step < static_cast<int>(prec); ++step) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        if (mpz_sizeinbase(k.get_mpz_t(), 2) > static_cast<std::size_t>(prec / 3)) return std::nullopt;
        mpq_class cand(h, k);
        cand.canonicalize();
        BigFloat diff(mpq_class(exact - cand), prec);
        if (!(diff.abs() > tol)) return cand;
        mpq_class frac = y - mpq_class(a);
        if (sgn(frac) == 0) return cand;
        y = 1 / frac;
    }
    return std::nullopt;
}

namespace {

bool is_real(const BigFloatC& z) {
    BigFloat lim = z.abs();
    const mpfr_prec_t prec = z.precision();
    if (lim < BigFloat(1.0, prec)) lim = BigFloat(1.0, prec);
    mpfr_mul_2si(lim.get(), lim.get(), -static_cast<long>(prec / 2), MPFR_RNDN);
    return !(z.im().abs() > lim);
}

Poly conjugate(const Poly& p) {
    std::vector<Scalar> c;
    for (const auto& s : p.coeffs()) c.push_back(s.conjugate());
    return Poly(std::move(c));
}

bool has_alpha(const Poly& p) {
    return std::any_of(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& s) { return !s.is_rational(); });
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return mpq_class(n, d);
}

void add_candidate(std::vector<Scalar>& out, const Scalar& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

std::vector<Scalar> candidates(const std::vector<BigFloatC>& roots, const Field& field, mpfr_prec_t prec) {
    std::vector<Scalar> out;
    const long d = field.d;
    const BigFloat root_d = BigFloat(mpq_class(d < 0 ? -d : (d == 0 ? 1 : d)), prec).sqrt();
    for (const auto& z : roots) {
        if (d < 0) {
            auto a = recognize_rational(z.re());
            auto b = recognize_rational(z.im() / root_d);
            if (a && b) add_candidate(out, Scalar(*a, *b, d));
        } else if (is_real(z)) {
            if (auto a = recognize_rational(z.re())) add_candidate(out, Scalar(*a));
        }
    }
    if (d > 0) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (!is_real(roots[i])) continue;
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (!is_real(roots[j])) continue;
                auto s = recognize_rational((roots[i] + roots[j]).re());
                auto q = recognize_rational((roots[i] * roots[j]).re());
                if (!s || !q) continue;
                const mpq_class a = *s / 2;
                const mpq_class b2 = (a * a - *q) / d;
                auto b = rational_sqrt(b2);
                if (!b || sgn(*b) == 0) continue;
                add_candidate(out, Scalar(a, *b, d));
                add_candidate(out, Scalar(a, -*b, d));
            }
        }
    }
    return out;
}

}  // namespace

RootSet find_roots(const Poly& p, const Field& field, mpfr_prec_t prec) {
    RootSet out;
    if (p.degree() < 1) return out;
    prec = std::max(prec, kMinPrecision);
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        std::vector<BigFloatC> numeric = aberth_roots(f, prec);
        std::vector<BigFloatC> pool = numeric;
        if (field.d > 0 && has_alpha(f)) pool = aberth_roots(squarefree_part(f * conjugate(f)), prec);
        std::vector<bool> used(numeric.size(), false);
        for (const auto& c : candidates(pool, field, prec)) {
            if (!f.eval(c).is_zero()) continue;
            out.exact.emplace_back(c, m);
            const BigFloatC cz(c, prec);
            std::size_t best = numeric.size();
            BigFloat best_dist(prec);
            for (std::size_t i = 0; i < numeric.size(); ++i) {
                if (used[i]) continue;
                BigFloat dist = (numeric[i] - cz).abs();
                if (best == numeric.size() || dist < best_dist) {
                    best = i;
                    best_dist = dist;
                }
            }
            if (best < numeric.size()) used[best] = true;
        }
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            if (!used[i]) out.numeric.emplace_back(numeric[i], m);
        }
    }
    std::sort(out.exact.begin(), out.exact.end(),
              [](const auto& a, const auto& b) { return lexicographic(a.first, b.first) == std::strong_ordering::less; });
    return out;
}

}  // namespace denv
