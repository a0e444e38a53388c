#include "denv/jets.hpp"

#include <sstream>

#include "denv/series.hpp"

namespace denv {

namespace {

Scalar factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(mpq_class(f));
}

// Taylor coefficients y_i / i! of the jet, as a series without constant term.
Series<Scalar> taylor(const Jet& j) {
    Series<Scalar> s = Series<Scalar>::zero(j.order(), Scalar());
    for (int i = 1; i <= j.order(); ++i) s[i] = j.derivative(i) / factorial(i);
    return s;
}

std::vector<Scalar> derivatives_of(const Series<Scalar>& s) {
    std::vector<Scalar> d;
    for (int i = 1; i <= s.order(); ++i) d.push_back(s[i] * factorial(i));
    return d;
}

}  // namespace

Jet::Jet(Scalar source, Scalar target, std::vector<Scalar> derivatives)
    : x_(std::move(source)), y_(std::move(target)), d_(std::move(derivatives)) {
    if (d_.empty()) throw Error("jet order must be at least 1");
    if (d_.front().is_zero()) throw Error("jet with y1 = 0 is not invertible");
}

std::string Jet::str() const {
    std::ostringstream os;
    os << "(" << x_.str() << ", " << y_.str();
    for (const auto& v : d_) os << ", " << v.str();
    os << ")";
    return os.str();
}

Jet jet_compose(const Jet& j, const Jet& h) {
    if (j.target() != h.source()) throw Error("non-composable jets");
    if (j.order() != h.order()) throw Error("non-composable jets: orders differ");
    Series<Scalar> c = compose(taylor(h), taylor(j));
    return {j.source(), h.target(), derivatives_of(c)};
}

Jet jet_invert(const Jet& j) {
    return {j.target(), j.source(), derivatives_of(reversion(taylor(j)))};
}

Jet jet_identity(const Scalar& x, int order) {
    std::vector<Scalar> d(static_cast<std::size_t>(order));
    d.at(0) = Scalar(1);
    return {x, x, std::move(d)};
}

Jet jet_of_map(const RatFun& r, const PointP1& p, int order) {
    const char* msg = "jet undefined at this point (not invertible)";
    if (p.is_infinity()) throw Error(msg);
    if (r.den().eval(p.value()).is_zero()) throw Error(msg);
    Series<Scalar> s = Series<Scalar>::variable(order, Scalar());
    s[0] = p.value();
    Series<Scalar> t = compose(r, s);
    if (order < 1 || t[1].is_zero()) throw Error(msg);
    return {p.value(), t[0], derivatives_of(t)};
}

// ---------------------------------------------------------------------------

BiPoly BiPoly::in_x(const Poly& p) {
    BiPoly b;
    for (int i = 0; i <= p.degree(); ++i) b.add({i, 0}, p.coeff(i));
    return b;
}

BiPoly BiPoly::in_y(const Poly& p) {
    BiPoly b;
    for (int i = 0; i <= p.degree(); ++i) b.add({0, i}, p.coeff(i));
    return b;
}

BiPoly BiPoly::constant(const Scalar& c) {
    BiPoly b;
    b.add({0, 0}, c);
    return b;
}

void BiPoly::add(const Key& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(k, v);
    if (inserted) return;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.c_) r.add(k, v);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.c_) r.add(k, -v);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) r.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
    }
    return r;
}

BiPoly operator*(BiPoly a, const Scalar& s) {
    if (s.is_zero()) return {};
    for (auto& [k, v] : a.c_) v *= s;
    return a;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [k, v] : c_) {
        if (k.first > 0) r.add({k.first - 1, k.second}, v * Scalar(k.first));
    }
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [k, v] : c_) {
        if (k.second > 0) r.add({k.first, k.second - 1}, v * Scalar(k.second));
    }
    return r;
}

Scalar BiPoly::eval(const Scalar& x, const Scalar& y) const {
    Scalar acc;
    for (const auto& [k, v] : c_) acc += v * x.pow(k.first) * y.pow(k.second);
    return acc;
}

RatFun BiPoly::substitute(const RatFun& r) const {
    int top = 0;
    for (const auto& [k, v] : c_) top = std::max(top, k.second);
    std::vector<RatFun> powers{RatFun(1)};
    for (int j = 1; j <= top; ++j) powers.push_back(powers.back() * r);
    RatFun acc;
    for (const auto& [k, v] : c_) acc += RatFun(Poly::monomial(v, k.first)) * powers[static_cast<std::size_t>(k.second)];
    return acc;
}

// ---------------------------------------------------------------------------

DiffPoly::Monomial DiffPoly::trim(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

DiffPoly DiffPoly::coefficient_x(const RatFun& c) {
    DiffPoly d;
    if (c.is_zero()) return d;
    d.terms_[{}] = BiPoly::in_x(c.num());
    d.den_x_ = c.den();
    return d;
}

DiffPoly DiffPoly::coefficient_y(const RatFun& c) {
    DiffPoly d;
    if (c.is_zero()) return d;
    d.terms_[{}] = BiPoly::in_y(c.num());
    d.den_y_ = c.den();
    return d;
}

DiffPoly DiffPoly::constant(const Scalar& c) {
    DiffPoly d;
    if (!c.is_zero()) d.terms_[{}] = BiPoly::constant(c);
    return d;
}

DiffPoly DiffPoly::y(int i, int e) {
    if (i < 1) throw Error("jet coordinate index must be at least 1");
    if (e < 0 && i != 1) throw Error("only y1 may carry a negative exponent");
    DiffPoly d;
    Monomial m(static_cast<std::size_t>(i), 0);
    m.back() = e;
    d.terms_[trim(m)] = BiPoly::constant(Scalar(1));
    return d;
}

bool DiffPoly::is_zero() const { return terms_.empty(); }

int DiffPoly::order() const {
    int k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, static_cast<int>(m.size()));
    return k;
}

DiffPoly DiffPoly::over(const Poly& dx, const Poly& dy) const {
    const BiPoly fx = BiPoly::in_x(dx.exact_div(den_x_));
    const BiPoly fy = BiPoly::in_y(dy.exact_div(den_y_));
    const BiPoly f = fx * fy;
    DiffPoly r;
    r.den_x_ = dx;
    r.den_y_ = dy;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * f;
    return r;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Poly lx = lcm(a.den_x_, b.den_x_);
    const Poly ly = lcm(a.den_y_, b.den_y_);
    DiffPoly r = a.over(lx, ly);
    const DiffPoly s = b.over(lx, ly);
    for (const auto& [m, c] : s.terms_) {
        BiPoly sum = r.terms_[m] + c;
        if (sum.is_zero()) {
            r.terms_.erase(m);
        } else {
            r.terms_[m] = std::move(sum);
        }
    }
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + b * Scalar(-1); }

DiffPoly operator*(DiffPoly a, const Scalar& s) {
    if (s.is_zero()) return {};
    for (auto& [m, c] : a.terms_) c = c * s;
    return a;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.den_x_ = a.den_x_ * b.den_x_;
    r.den_y_ = a.den_y_ * b.den_y_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            DiffPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            m = DiffPoly::trim(std::move(m));
            BiPoly sum = r.terms_[m] + ca * cb;
            if (sum.is_zero()) {
                r.terms_.erase(m);
            } else {
                r.terms_[m] = std::move(sum);
            }
        }
    }
    return r;
}

Scalar DiffPoly::eval(const Jet& j) const {
    if (order() > j.order()) throw Error("jet order too small for this differential polynomial");
    const Scalar den = den_x_.eval(j.source()) * den_y_.eval(j.target());
    if (den.is_zero()) throw Error("differential polynomial has a pole at this jet");
    Scalar acc;
    for (const auto& [m, c] : terms_) {
        Scalar t = c.eval(j.source(), j.target());
        for (std::size_t i = 0; i < m.size(); ++i) t *= j.derivative(static_cast<int>(i) + 1).pow(m[i]);
        acc += t;
    }
    return acc / den;
}

RatFun DiffPoly::on_map(const RatFun& r) const {
    std::vector<RatFun> ders{r.derivative()};
    for (int i = 1; i < order(); ++i) ders.push_back(ders.back().derivative());
    RatFun acc;
    for (const auto& [m, c] : terms_) {
        RatFun t = c.substitute(r);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) t *= ders[i].pow(m[i]);
        }
        acc += t;
    }
    const RatFun den = RatFun(den_x_) * RatFun(den_y_).compose(r);
    return acc / den;
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[";
        bool f2 = true;
        for (const auto& [k, v] : c.terms()) {
            if (!f2) os << " + ";
            f2 = false;
            os << v.str();
            if (k.first > 0) os << "*x^" << k.first;
            if (k.second > 0) os << "*y^" << k.second;
        }
        os << "]";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) os << "*y" << i + 1 << "^" << m[i];
        }
    }
    os << " / ((" << den_x_.str("x") << ")*(" << den_y_.str("y") << "))";
    return os.str();
}

DiffPoly total_derivative(const DiffPoly& e) {
    DiffPoly r;
    if (e.is_zero()) return r;
    const Poly& dx = e.den_x_;
    const Poly& dy = e.den_y_;
    r.den_x_ = dx * dx;
    r.den_y_ = dy * dy;
    const BiPoly bx = BiPoly::in_x(dx);
    const BiPoly by = BiPoly::in_y(dy);
    const BiPoly bx1 = BiPoly::in_x(dx.derivative());
    const BiPoly by1 = BiPoly::in_y(dy.derivative());
    auto accumulate = [&r](DiffPoly::Monomial m, const BiPoly& c) {
        if (c.is_zero()) return;
        m = DiffPoly::trim(std::move(m));
        BiPoly sum = r.terms_[m] + c;
        if (sum.is_zero()) {
            r.terms_.erase(m);
        } else {
            r.terms_[m] = std::move(sum);
        }
    };
    for (const auto& [m, n] : e.terms_) {
        accumulate(m, (n.dx() * bx - n * bx1) * by);
        DiffPoly::Monomial my = m;
        if (my.empty()) my.push_back(0);
        my[0] += 1;
        accumulate(my, (n.dy() * by - n * by1) * bx);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            DiffPoly::Monomial mi = m;
            if (mi.size() < i + 2) mi.resize(i + 2, 0);
            mi[i] -= 1;
            mi[i + 1] += 1;
            accumulate(mi, n * bx * by * Scalar(m[i]));
        }
    }
    return r;
}

}  // namespace denv
