#include "denv/equations.hpp"

namespace denv {

GroupoidEq GroupoidEq::g1(int n, RatFun eta) {
    if (n == 0) throw Error("G1 needs a nonzero exponent");
    if (eta.is_zero()) throw Error("G1 needs a nonzero coefficient");
    return {Kind::g1, n, std::move(eta)};
}

int GroupoidEq::order() const {
    switch (kind) {
        case Kind::g1: return 1;
        case Kind::g2: return 2;
        case Kind::g3: return 3;
        case Kind::ginf: break;
    }
    return 0;
}

std::string GroupoidEq::str() const {
    switch (kind) {
        case Kind::g1: return "G1^" + std::to_string(n) + "(" + coeff.str() + ")";
        case Kind::g2: return "G2(" + coeff.str() + ")";
        case Kind::g3: return "G3(" + coeff.str() + ")";
        case Kind::ginf: break;
    }
    return "Ginf";
}

RatFun affine_coeff(const RatFun& r) {
    if (r.is_constant()) throw Error("affine coefficient of a constant map");
    const RatFun d1 = r.derivative();
    return d1.derivative() / d1;
}

RatFun schwarzian(const RatFun& r) {
    if (r.is_constant()) throw Error("schwarzian of a constant map");
    const RatFun d1 = r.derivative();
    const RatFun d2 = d1.derivative();
    const RatFun d3 = d2.derivative();
    const RatFun a = d2 / d1;
    return RatFun(2) * (d3 / d1) - RatFun(3) * a * a;
}

RatFun eq_residual(const GroupoidEq& e, const RatFun& r) {
    if (r.is_constant()) throw Error("residual of a constant map");
    switch (e.kind) {
        case GroupoidEq::Kind::g1:
            return e.coeff.compose(r) * r.derivative().pow(e.n) - e.coeff;
        case GroupoidEq::Kind::g2:
            return e.coeff.compose(r) * r.derivative() + affine_coeff(r) - e.coeff;
        case GroupoidEq::Kind::g3:
            return e.coeff.compose(r) * r.derivative().pow(2) + schwarzian(r) - e.coeff;
        case GroupoidEq::Kind::ginf:
            break;
    }
    return {};
}

GroupoidEq gauge_transform(const GroupoidEq& e, const RatFun& phi) {
    if (!is_mobius(phi)) throw Error("gauge transform needs an invertible (Moebius) map");
    const RatFun d1 = phi.derivative();
    switch (e.kind) {
        case GroupoidEq::Kind::g1:
            return GroupoidEq::g1(e.n, e.coeff.compose(phi) * d1.pow(e.n));
        case GroupoidEq::Kind::g2:
            return GroupoidEq::g2(e.coeff.compose(phi) * d1 + affine_coeff(phi));
        case GroupoidEq::Kind::g3:
            return GroupoidEq::g3(e.coeff.compose(phi) * d1.pow(2) + schwarzian(phi));
        case GroupoidEq::Kind::ginf:
            break;
    }
    return e;
}

GroupoidEq chart_transform(const GroupoidEq& e) {
    return gauge_transform(e, RatFun(Poly(1), Poly::x()));
}

RatFun cocycle_residual(int kind, const RatFun& f, const RatFun& g, int n, const RatFun& eta) {
    const RatFun gf = g.compose(f);
    const RatFun df = f.derivative();
    switch (kind) {
        case 1: {
            const RatFun tg = eta.compose(g) * g.derivative().pow(n);
            return eta.compose(gf) * gf.derivative().pow(n) - tg.compose(f) * df.pow(n);
        }
        case 2:
            return affine_coeff(gf) - affine_coeff(g).compose(f) * df - affine_coeff(f);
        case 3:
            return schwarzian(gf) - schwarzian(g).compose(f) * df.pow(2) - schwarzian(f);
        default:
            throw Error("cocycle kind must be 1, 2 or 3");
    }
}

DiffPoly to_diffpoly(const GroupoidEq& e) {
    switch (e.kind) {
        case GroupoidEq::Kind::g1:
            return DiffPoly::coefficient_y(e.coeff) * DiffPoly::y(1, e.n) - DiffPoly::coefficient_x(e.coeff);
        case GroupoidEq::Kind::g2:
            return DiffPoly::coefficient_y(e.coeff) * DiffPoly::y(1) + DiffPoly::y(2) * DiffPoly::y(1, -1) -
                   DiffPoly::coefficient_x(e.coeff);
        case GroupoidEq::Kind::g3: {
            const DiffPoly inv = DiffPoly::y(1, -1);
            return DiffPoly::coefficient_y(e.coeff) * DiffPoly::y(1, 2) + DiffPoly::y(3) * inv * Scalar(2) -
                   DiffPoly::y(2, 2) * inv * inv * Scalar(3) - DiffPoly::coefficient_x(e.coeff);
        }
        case GroupoidEq::Kind::ginf:
            break;
    }
    return {};
}

}  // namespace denv
