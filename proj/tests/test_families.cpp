#include <doctest.h>

#include "denv/dynamics.hpp"
#include "denv/families.hpp"
#include "denv/solver.hpp"
#include "support.hpp"

using namespace denv;
using namespace denv::test;

namespace {

// Tangent-line doubling on y^2 = 4x^3 - g2 x - g3: slope m = (12x^2 - g2)/(2y),
// x(2P) = m^2/4 - 2x with y^2 replaced by the cubic.
RatFun doubling_oracle(const Scalar& g2, const Scalar& g3) {
    const RatFun x = RatFun::x();
    const RatFun cubic = RatFun(4) * x.pow(3) - RatFun(g2) * x - RatFun(g3);
    const RatFun slope_num = RatFun(12) * x.pow(2) - RatFun(g2);
    return slope_num.pow(2) / (RatFun(16) * cubic) - RatFun(2) * x;
}

LattesParams random_curve(Gen& g, int k) {
    while (true) {
        LattesParams p{g.scalar(4), g.scalar(4), k};
        if (!p.discriminant().is_zero()) return p;
    }
}

RatFun mu_of(int case_id, const Scalar& g2 = Scalar(), const Scalar& g3 = Scalar()) {
    return known_mu({case_id, g2, g3}).mu;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("monomial examples") {
    CHECK(monomial(2) == rat({0, 0, 1}));
    CHECK(monomial(-2) == rat({1}, {0, 0, 1}));
    CHECK(monomial(2).compose(monomial(3)) == monomial(6));
    CHECK_THROWS_AS(monomial(1), Error);
    CHECK_THROWS_AS(monomial(-1), Error);
    CHECK_THROWS_AS(monomial(0), Error);
}

TEST_CASE("chebyshev examples") {
    CHECK(chebyshev(2) == rat({-1, 0, 2}));
    CHECK(chebyshev(2, ChebyshevNorm::dilated) == rat({-2, 0, 1}));
    CHECK(chebyshev(4) == chebyshev(2).compose(chebyshev(2)));
    CHECK(chebyshev(4) == rat({1, 0, -8, 0, 8}));
    CHECK(chebyshev(3) == rat({0, -3, 0, 4}));
    CHECK(parse_chebyshev_norm("dilated") == ChebyshevNorm::dilated);
    CHECK_THROWS_AS(parse_chebyshev_norm("scaled"), Error);
    CHECK_THROWS_AS(chebyshev(1), Error);
}

TEST_CASE("chebyshev matches cos(kw) numerically") {
    const mpfr_prec_t prec = 128;
    for (int k = 2; k <= 7; ++k) {
        for (double w : {0.3, 1.1, 2.5}) {
            const BigFloatC c = cos(BigFloatC(w, 0.0, prec));
            const BigFloatC ck = cos(BigFloatC(w, 0.0, prec) * BigFloatC(k, 0.0, prec));
            CHECK((chebyshev(k).eval(c) - ck).abs().to_double() < 1e-30);
        }
    }
}

TEST_CASE("dilated chebyshev is the conjugate of the classical one") {
    const RatFun half = rat({0, 1}, {2});
    for (int k = 2; k <= 8; ++k) {
        CHECK(mobius_conjugate(chebyshev(k), half) == chebyshev(k, ChebyshevNorm::dilated));
        CHECK(chebyshev(k).degree() == k);
    }
}

TEST_CASE("lattes examples") {
    CHECK(lattes({Scalar(4), Scalar(0), 2}) == rat({1, 0, 2, 0, 1}, {0, -4, 0, 4}));
    Gen g(61);
    for (int t = 0; t < 20; ++t) {
        const LattesParams p = random_curve(g, 2);
        CHECK(lattes(p) == doubling_oracle(p.g2, p.g3));
        CHECK(lattes(p).degree() == 4);
        CHECK(lattes({p.g2, p.g3, 3}).degree() == 9);
    }
    CHECK_THROWS_WITH_AS(lattes({Scalar(3), Scalar(1), 2}), "singular cubic", Error);
    CHECK_THROWS_AS(lattes({Scalar(4), Scalar(0), 6}), Error);
    CHECK_THROWS_AS(lattes({Scalar(4), Scalar(0), 1}), Error);
}

TEST_CASE("lattes semigroup law and commutation") {
    const LattesParams base{Scalar(4), Scalar(0), 2};
    const RatFun l2 = lattes(base);
    const RatFun l3 = lattes({base.g2, base.g3, 3});
    CHECK(l2.compose(l2) == lattes({base.g2, base.g3, 4}));
    const RatFun l6 = lattes({base.g2, base.g3, 6}, 6);
    CHECK(l2.compose(l3) == l6);
    CHECK(l3.compose(l2) == l6);
    CHECK(commutes(l2, l3));
    Gen g(62);
    for (int t = 0; t < 3; ++t) {
        const LattesParams p = random_curve(g, 2);
        CHECK(lattes(p).compose(lattes(p)) == lattes({p.g2, p.g3, 4}));
    }
}

TEST_CASE("monomial and chebyshev semigroup laws") {
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            CHECK(monomial(a).compose(monomial(b)) == monomial(a * b));
            CHECK(monomial(-a).compose(monomial(b)) == monomial(-a * b));
            CHECK(chebyshev(a).compose(chebyshev(b)) == chebyshev(a * b));
            const auto d = ChebyshevNorm::dilated;
            CHECK(chebyshev(a, d).compose(chebyshev(b, d)) == chebyshev(a * b, d));
        }
    }
}

TEST_CASE("commutation") {
    CHECK(commutes(monomial(2), monomial(3)));
    CHECK(commutes(chebyshev(2), chebyshev(3)));
    CHECK_FALSE(commutes(rat({0, 0, 1}), rat({1, 0, 1})));
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            CHECK(commutes(monomial(a), monomial(b)));
            CHECK(commutes(chebyshev(a), chebyshev(b)));
            CHECK_FALSE(commutes(monomial(a), chebyshev(b)));
            CHECK_FALSE(commutes(monomial(a), chebyshev(b, ChebyshevNorm::dilated)));
        }
    }
}

TEST_CASE("known coefficient table") {
    CHECK(mu_of(1).is_zero());
    CHECK(mu_of(2) == rat({-1}, {0, 1}));
    CHECK(mu_of(3) == rat({0, -1}, {-4, 0, 1}));
    // Minus convention, g2 = 4, g3 = 0.
    CHECK(mu_of(4, Scalar(4), Scalar(0)) == rat({2, 0, -6}, {0, -4, 0, 4}));
    CHECK(known_mu({2, {}, {}}).verified);
    CHECK(known_mu({3, {}, {}}).verified);
    CHECK(known_mu({4, Scalar(4), Scalar(0)}).verified);
    for (int c : {5, 6, 7}) CHECK_FALSE(known_mu({c, Scalar(c == 5 ? 4 : 0), Scalar(c == 5 ? 0 : 2)}).verified);
    // Table entries, read in the minus convention.
    CHECK(mu_of(5, Scalar(4), Scalar(0)) == rat({-1}, {0, 4}) - rat({-2, 6}, {0, -8, 8}));
    CHECK(mu_of(6, Scalar(0), Scalar(3)) == RatFun(q(-2, 3)) * rat({0, 1}, {3, 0, 1}));
    CHECK(mu_of(7, Scalar(0), Scalar(4)) == rat({-2}, {0, 9}) - rat({1}, {-2, 1}));
    CHECK_THROWS_AS(known_mu({5, Scalar(4), Scalar(1)}), Error);
    CHECK_THROWS_AS(known_mu({6, Scalar(1), Scalar(1)}), Error);
    CHECK_THROWS_AS(known_mu({8, {}, {}}), Error);
    CHECK_THROWS_AS(known_mu({0, {}, {}}), Error);
    const auto [g2, g3] = from_plus_convention(Scalar(4), Scalar(-1));
    CHECK(g2 == Scalar(-4));
    CHECK(g3 == Scalar(1));
}

TEST_CASE("family members solve their equations") {
    for (int k = 2; k <= 6; ++k) {
        for (int s : {1, -1}) CHECK(eq_residual(GroupoidEq::g2(mu_of(2)), monomial(s * k)).is_zero());
        CHECK(eq_residual(GroupoidEq::g2(mu_of(3)), chebyshev(k, ChebyshevNorm::dilated)).is_zero());
        const RatFun classical_mu = gauge_transform(GroupoidEq::g2(mu_of(3)), rat({0, 2})).coeff;
        CHECK(eq_residual(GroupoidEq::g2(classical_mu), chebyshev(k)).is_zero());
    }
    Gen g(63);
    for (int t = 0; t < 10; ++t) {
        const LattesParams p = random_curve(g, 2 + t % 2);
        CHECK(eq_residual(GroupoidEq::g2(mu_of(4, p.g2, p.g3)), lattes(p)).is_zero());
    }
}

TEST_CASE("solver recovers the table entry for lattes") {
    const LattesParams p{Scalar(4), Scalar(0), 2};
    const SolveResult res = solve_g2(lattes(p));
    REQUIRE(res.found());
    CHECK(*res.space->particular == mu_of(4, p.g2, p.g3));
    CHECK(res.space->kernel.empty());
}

TEST_CASE("lattes postcritical set is the 2-torsion plus infinity") {
    Gen g(64);
    for (int t = 0; t < 8; ++t) {
        const LattesParams p = random_curve(g, 2);
        const ClosureResult pc = postcritical_closure(lattes(p));
        REQUIRE_FALSE(pc.overflow());
        const Poly cubic({-p.g3, -p.g2, Scalar(0), Scalar(4)});
        CHECK(pc.divisor->same_support(Divisor::roots_of(cubic, true)));
        CHECK(pc.divisor->support_size() == 4);
        CHECK(exceptional_set(lattes(p)).empty());
    }
}

}  // TEST_SUITE
