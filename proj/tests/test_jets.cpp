#include <doctest.h>

#include "denv/jets.hpp"
#include "support.hpp"

using namespace denv;
using namespace denv::test;

namespace {

Jet jet(std::initializer_list<Scalar> v) {
    std::vector<Scalar> all(v);
    return {all[0], all[1], std::vector<Scalar>(all.begin() + 2, all.end())};
}

Jet random_jet(Gen& g, const Scalar& source, int order) {
    std::vector<Scalar> d{g.nonzero_scalar()};
    for (int i = 1; i < order; ++i) d.push_back(g.scalar());
    return {source, g.scalar(), d};
}

DiffPoly random_diffpoly(Gen& g) {
    DiffPoly e;
    for (long t = 0, n = g.integer(1, 3); t < n; ++t) {
        DiffPoly term = DiffPoly::coefficient_x(RatFun(g.poly(static_cast<int>(g.integer(0, 2)), 3))) *
                        DiffPoly::coefficient_y(RatFun(g.poly(static_cast<int>(g.integer(0, 2)), 3)));
        if (g.integer(0, 2) == 0) term = term * DiffPoly::coefficient_y(RatFun(Poly(1), g.poly(1, 3)));
        term = term * DiffPoly::y(1, static_cast<int>(g.integer(-2, 2)));
        if (g.integer(0, 1)) term = term * DiffPoly::y(2, static_cast<int>(g.integer(1, 2)));
        if (g.integer(0, 2) == 0) term = term * DiffPoly::y(3);
        e = e + term;
    }
    return e;
}

}  // namespace

TEST_SUITE("jets") {

TEST_CASE("compose examples") {
    CHECK(jet_compose(jet({0, 1, 2, 3}), jet({1, 5, 7, 11})) == jet({0, 5, 14, 65}));
    const Jet j = jet({0, 1, 2, 3});
    CHECK(jet_compose(j, jet_identity(Scalar(1), 2)) == j);
    CHECK(jet_compose(jet({0, 0, 3}), jet({0, 0, q(5, 7)})) == jet({0, 0, q(15, 7)}));
    CHECK_THROWS_WITH_AS(jet_compose(jet({0, 1, 2}), jet({2, 1, 2})), "non-composable jets", Error);
}

TEST_CASE("invert examples") {
    CHECK(jet_invert(jet({0, 1, 2})) == jet({1, 0, q(1, 2)}));
    CHECK(jet_invert(jet({0, 1, 2, 3})) == jet({1, 0, q(1, 2), q(-3, 8)}));
    CHECK(jet_invert(jet_identity(Scalar(4), 5)) == jet_identity(Scalar(4), 5));
    CHECK_THROWS_AS(jet({0, 1, 0, 3}), Error);
}

TEST_CASE("identity examples") {
    CHECK(jet_identity(Scalar(0), 2) == jet({0, 0, 1, 0}));
    CHECK(jet_identity(Scalar(5), 1) == jet({5, 5, 1}));
    Gen g(11);
    for (int t = 0; t < 20; ++t) {
        const Jet j = random_jet(g, g.scalar(), 4);
        CHECK(jet_compose(jet_identity(j.source(), 4), j) == j);
    }
}

TEST_CASE("jet_of_map examples") {
    CHECK(jet_of_map(rat({0, 0, 1}), PointP1(Scalar(1)), 2) == jet({1, 1, 2, 2}));
    CHECK_THROWS_WITH_AS(jet_of_map(rat({0, 0, 1}), PointP1(Scalar(0)), 1),
                         "jet undefined at this point (not invertible)", Error);
    CHECK(jet_of_map(rat({-1, 0, 2}), PointP1(Scalar(-1)), 2) == jet({-1, 1, -4, 4}));
    CHECK_THROWS_AS(jet_of_map(rat({1}, {0, 1}), PointP1(Scalar(0)), 1), Error);
}

TEST_CASE("associativity, inverse and identity laws") {
    Gen g(12);
    for (int t = 0; t < 200; ++t) {
        const int k = static_cast<int>(g.integer(1, 6));
        const Jet a = random_jet(g, g.scalar(), k);
        const Jet b = random_jet(g, a.target(), k);
        const Jet c = random_jet(g, b.target(), k);
        CHECK(jet_compose(jet_compose(a, b), c) == jet_compose(a, jet_compose(b, c)));
        CHECK(jet_compose(a, jet_invert(a)) == jet_identity(a.source(), k));
        CHECK(jet_compose(jet_invert(a), a) == jet_identity(a.target(), k));
        CHECK(jet_compose(a, jet_identity(a.target(), k)) == a);
    }
}

TEST_CASE("chain consistency with maps") {
    Gen g(13);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
        const RatFun r = g.map(3), s = g.map(3);
        const Scalar p = g.scalar();
        try {
            const Jet js = jet_of_map(s, PointP1(p), 4);
            const Jet jr = jet_of_map(r, PointP1(js.target()), 4);
            CHECK(jet_of_map(r.compose(s), PointP1(p), 4) == jet_compose(js, jr));
            ++checked;
        } catch (const Error&) {
            // pole or critical point; draw again
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("total derivative examples") {
    CHECK(total_derivative(DiffPoly::y(1)) == DiffPoly::y(2));
    CHECK(total_derivative(DiffPoly::coefficient_x(RatFun::x())) == DiffPoly::constant(Scalar(1)));
    Gen g(14);
    for (int t = 0; t < 20; ++t) {
        const RatFun eta(g.poly(2), g.poly(1));
        const int n = static_cast<int>(g.integer(-3, 3));
        const DiffPoly e = DiffPoly::coefficient_y(eta) * DiffPoly::y(1, n);
        const DiffPoly expect = DiffPoly::coefficient_y(eta.derivative()) * DiffPoly::y(1, n + 1) +
                                DiffPoly::coefficient_y(eta) * DiffPoly::y(1, n - 1) * DiffPoly::y(2) * Scalar(n);
        CHECK(total_derivative(e) == expect);
    }
}

TEST_CASE("Leibniz rule") {
    Gen g(15);
    for (int t = 0; t < 60; ++t) {
        const DiffPoly e = random_diffpoly(g), f = random_diffpoly(g);
        CHECK(total_derivative(e * f) == total_derivative(e) * f + e * total_derivative(f));
        CHECK(total_derivative(e).order() <= e.order() + 1);
    }
}

TEST_CASE("evaluation compatibility") {
    Gen g(16);
    for (int t = 0; t < 40; ++t) {
        const DiffPoly e = random_diffpoly(g);
        const RatFun r = g.map(3);
        if (r.derivative().num().degree() < 0) continue;
        CHECK(total_derivative(e).on_map(r) == e.on_map(r).derivative());
        const Scalar p = g.scalar();
        try {
            const Jet j = jet_of_map(r, PointP1(p), 4);
            CHECK(e.eval(j) == e.on_map(r).eval(p));
        } catch (const Error&) {
            // p is a pole of r, of a coefficient, or critical
        }
    }
}

}  // TEST_SUITE
