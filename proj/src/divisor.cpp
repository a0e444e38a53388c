#include "denv/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace denv {

namespace {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto c = lexicographic(a.coeff(i), b.coeff(i));
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return false;
}

}  // namespace

std::vector<Poly> gcd_free_basis(const std::vector<Poly>& polys) {
    std::vector<Poly> basis;
    for (const auto& input : polys) {
        if (input.degree() <= 0) continue;
        Poly rest = squarefree_part(input);
        std::vector<Poly> next;
        for (auto& b : basis) {
            if (rest.degree() <= 0) {
                next.push_back(std::move(b));
                continue;
            }
            Poly g = gcd(b, rest);
            if (g.degree() <= 0) {
                next.push_back(std::move(b));
                continue;
            }
            Poly left = b.exact_div(g).monic();
            rest = rest.exact_div(g).monic();
            next.push_back(std::move(g));
            if (left.degree() > 0) next.push_back(std::move(left));
        }
        if (rest.degree() > 0) next.push_back(rest.monic());
        basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), poly_less);
    return basis;
}

int multiplicity(const Poly& g, const Poly& b) {
    if (g.is_zero()) throw Error("multiplicity in the zero polynomial");
    if (b.degree() <= 0) return 0;
    int m = 0;
    Poly cur = g;
    while (true) {
        auto [q, r] = cur.divmod(b);
        if (!r.is_zero()) return m;
        cur = std::move(q);
        ++m;
    }
}

Divisor::Divisor(std::vector<Factor> factors, int inf_mult) : inf_mult_(std::max(inf_mult, 0)) {
    std::vector<Poly> inputs;
    for (const auto& [p, m] : factors) {
        if (m > 0 && p.degree() > 0) inputs.push_back(p);
    }
    for (auto& b : gcd_free_basis(inputs)) {
        int mult = 0;
        for (const auto& [p, m] : factors) {
            if (m > 0 && p.degree() > 0 && b.divides(p)) mult = std::max(mult, m);
        }
        factors_.emplace_back(std::move(b), mult);
    }
}

Divisor Divisor::roots_of(const Poly& p, bool with_infinity) {
    std::vector<Factor> f;
    if (p.degree() > 0) f.emplace_back(p, 1);
    return Divisor(std::move(f), with_infinity ? 1 : 0);
}

Divisor Divisor::point(const PointP1& p) {
    if (p.is_infinity()) return infinity();
    return roots_of(Poly::linear_root(p.value()));
}

Poly Divisor::finite_support() const {
    Poly acc(Scalar(1));
    for (const auto& [p, m] : factors_) acc = acc * p;
    return acc;
}

int Divisor::support_size() const {
    int n = has_infinity() ? 1 : 0;
    for (const auto& [p, m] : factors_) n += p.degree();
    return n;
}

int Divisor::total_multiplicity() const {
    int n = inf_mult_;
    for (const auto& [p, m] : factors_) n += p.degree() * m;
    return n;
}

Divisor Divisor::support() const {
    Divisor d = *this;
    for (auto& f : d.factors_) f.second = 1;
    if (d.inf_mult_ > 0) d.inf_mult_ = 1;
    return d;
}

bool Divisor::contains(const PointP1& p) const {
    if (p.is_infinity()) return has_infinity();
    for (const auto& [f, m] : factors_) {
        if (f.eval(p.value()).is_zero()) return true;
    }
    return false;
}

bool Divisor::contains(const Divisor& other) const {
    if (other.has_infinity() && !has_infinity()) return false;
    const Poly mine = finite_support();
    for (const auto& [f, m] : other.factors_) {
        if (!f.divides(mine)) return false;
    }
    return true;
}

Divisor Divisor::unite(const Divisor& other) const {
    std::vector<Factor> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return Divisor(std::move(all), std::max(inf_mult_, other.inf_mult_));
}

Divisor Divisor::intersect(const Divisor& other) const {
    Poly g = gcd(finite_support(), other.finite_support());
    return roots_of(g, has_infinity() && other.has_infinity());
}

std::size_t Divisor::height_bits() const {
    std::size_t h = 0;
    for (const auto& [f, m] : factors_) h = std::max(h, f.height_bits());
    return h;
}

std::string Divisor::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [f, m] : factors_) {
        if (!first) os << ", ";
        first = false;
        os << f.str();
        if (m > 1) os << " ^" << m;
    }
    if (has_infinity()) {
        if (!first) os << ", ";
        os << "inf";
        if (inf_mult_ > 1) os << " ^" << inf_mult_;
    }
    os << "}";
    return os.str();
}

Poly interpolate(const std::vector<Scalar>& points, const std::vector<Scalar>& values) {
    // Newton divided differences.
    const std::size_t n = points.size();
    std::vector<Scalar> coef = values;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j]);
            if (i == j) break;
        }
    }
    Poly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * Poly::linear_root(points[i]);
        acc += Poly(coef[i]);
    }
    return acc;
}

Divisor divisor_pushforward(const Divisor& d, const RatFun& r) {
    const Poly& p = r.num();
    const Poly& q = r.den();
    const int m = std::max(p.degree(), q.degree());
    std::vector<Divisor::Factor> images;
    bool to_infinity = false;
    if (d.has_infinity() && r.eval(PointP1::infinity()).is_infinity()) to_infinity = true;

    for (const auto& [f, mult] : d.factors()) {
        Poly poles = gcd(f, q);
        if (poles.degree() > 0) to_infinity = true;
        Poly rest = f.exact_div(poles);
        if (rest.degree() <= 0) continue;
        if (r.is_constant()) {
            images.emplace_back(Poly::linear_root(r.num().coeff(0)), 1);
            continue;
        }
        // Res_x(rest, yQ - P) has degree deg(rest) in y; sample where deg_x(yQ - P) = m.
        const int n = rest.degree();
        std::vector<Scalar> ys, vals;
        const bool q_leads = q.degree() == m;
        const Scalar bad = q_leads ? p.coeff(m) / q.lc() : Scalar();
        for (long y = 0; static_cast<int>(ys.size()) <= n; ++y) {
            const Scalar sy(y);
            if (q_leads && sy == bad) continue;
            ys.push_back(sy);
            vals.push_back(resultant(rest, q * sy - p));
        }
        images.emplace_back(squarefree_part(interpolate(ys, vals)), 1);
    }
    if (d.has_infinity()) {
        PointP1 img = r.eval(PointP1::infinity());
        if (!img.is_infinity()) images.emplace_back(Poly::linear_root(img.value()), 1);
    }
    return Divisor(std::move(images), to_infinity ? 1 : 0);
}

Divisor divisor_pullback(const Divisor& d, const RatFun& r) {
    const Poly& p = r.num();
    const Poly& q = r.den();
    std::vector<Divisor::Factor> pre;
    const PointP1 at_inf = r.eval(PointP1::infinity());
    bool with_infinity = false;
    for (const auto& [f, mult] : d.factors()) {
        Poly h = homogenize(f, p, q, f.degree());
        if (h.degree() > 0) pre.emplace_back(squarefree_part(h), 1);
        if (!at_inf.is_infinity() && f.eval(at_inf.value()).is_zero()) with_infinity = true;
    }
    if (d.has_infinity()) {
        if (q.degree() > 0) pre.emplace_back(squarefree_part(q), 1);
        if (at_inf.is_infinity()) with_infinity = true;
    }
    return Divisor(std::move(pre), with_infinity ? 1 : 0);
}

}  // namespace denv
