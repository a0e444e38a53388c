#include "denv/solver.hpp"

#include <algorithm>
#include <numeric>

#include "denv/linsolve.hpp"

namespace denv {

void SolveCaps::validate() const {
    if (max_den_deg < 1 || pole_mult < 1 || n_max < 1 || g1_search < 1 || dynamics.orbit_cap < 1 ||
        dynamics.period_cap < 1 || (extra_num_deg && *extra_num_deg < 0) ||
        (dynamics.height_cap && *dynamics.height_cap < 1)) {
        throw Error("caps must be at least 1");
    }
}

namespace {

Poly wronskian(const RatFun& r) {
    return r.num().derivative() * r.den() - r.num() * r.den().derivative();
}

bool is_integer(const Scalar& s) { return s.is_rational() && s.re_part().get_den() == 1; }

void set_column(kernels::Matrix& m, std::size_t col, const Poly& p) {
    for (int k = 0; k <= p.degree(); ++k) m(static_cast<std::size_t>(k), col) = p.coeff(k);
}

RatFun from_coeffs(const std::vector<Scalar>& n, const Poly& den) {
    return rf_normalize(Poly(n), den);
}

// Shared ansatz for G2 (weight 1) and G3 (weight 2): mu = N/Dc, and
//   N(R)/Dc(R) R'^w + C(R) - N/Dc = 0
// cleared to a polynomial identity linear in the coefficients of N.
SolveResult solve_weighted(const RatFun& r, const SolveCaps& caps, int weight) {
    caps.validate();
    SolveResult out;
    if (r.degree() < 1) throw Error("solving needs a nonconstant map");
    CandidateResult cand = candidate_pole_divisor(r, caps);
    if (!cand.divisor) {
        out.reason = cand.reason;
        return out;
    }
    const int mult = caps.pole_mult * weight;
    Poly dc(1);
    for (const auto& [f, m] : cand.divisor->factors()) dc = dc * f.pow(static_cast<unsigned>(mult));
    const int delta = dc.degree();
    out.den_degree = delta;
    if (delta > caps.max_den_deg) {
        out.reason = "candidate denominator degree " + std::to_string(delta) + " exceeds cap " +
                     std::to_string(caps.max_den_deg);
        return out;
    }
    const int k_top = delta + caps.extra_num_deg.value_or(delta);
    out.num_degree = k_top;

    const RatFun c = weight == 1 ? affine_coeff(r) : schwarzian(r);
    const Poly& p = r.num();
    const Poly& q = r.den();
    const Poly w = wronskian(r).pow(static_cast<unsigned>(weight));
    const Poly dt = homogenize(dc, p, q, delta);
    const Poly qe = q.pow(static_cast<unsigned>(k_top - delta + 2 * weight));
    const Poly common = dt * qe * c.den();
    const Poly lead = w * dc * c.den();
    const Poly rhs = -(c.num() * dt * qe * dc);

    std::vector<Poly> ppow{Poly(1)}, qpow{Poly(1)};
    for (int i = 1; i <= k_top; ++i) {
        ppow.push_back(ppow.back() * p);
        qpow.push_back(qpow.back() * q);
    }
    std::vector<Poly> cols;
    int rows = rhs.degree() + 1;
    for (int i = 0; i <= k_top; ++i) {
        cols.push_back(ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(k_top - i)] * lead -
                       Poly::monomial(Scalar(1), i) * common);
        rows = std::max(rows, cols.back().degree() + 1);
    }
    rows = std::max(rows, 1);
    kernels::Matrix a(static_cast<std::size_t>(rows), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) set_column(a, i, cols[i]);
    std::vector<Scalar> b(static_cast<std::size_t>(rows));
    for (int k = 0; k <= rhs.degree(); ++k) b[static_cast<std::size_t>(k)] = rhs.coeff(k);

    const LinearSolution sol = solve_linear(a, b);
    SolutionSpace space;
    if (sol.particular) {
        RatFun mu = from_coeffs(*sol.particular, dc);
        const GroupoidEq e = weight == 1 ? GroupoidEq::g2(mu) : GroupoidEq::g3(mu);
        if (!eq_residual(e, r).is_zero()) throw Error("internal: linear solution fails the residual check");
        space.particular = std::move(mu);
    }
    const RatFun dr = r.derivative().pow(weight);
    for (const auto& v : sol.kernel) {
        RatFun h = from_coeffs(v, dc);
        if (!(h.compose(r) * dr - h).is_zero()) throw Error("internal: kernel element fails the homogeneous check");
        space.kernel.push_back(std::move(h));
    }
    if (!space.particular) out.reason = "no solution within caps";
    out.space = std::move(space);
    return out;
}

// Exponent vector e -> prod f_i^{e_i}.
RatFun product_of_powers(const std::vector<Poly>& f, const std::vector<long>& e) {
    Poly num(1), den(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (e[i] > 0) num = num * f[i].pow(static_cast<unsigned>(e[i]));
        if (e[i] < 0) den = den * f[i].pow(static_cast<unsigned>(-e[i]));
    }
    return RatFun(num, den);
}

// All integer vectors in [-b, b]^m ordered by l1 norm, then lexicographically.
std::vector<std::vector<long>> small_vectors(std::size_t m, long b) {
    std::vector<std::vector<long>> out;
    std::vector<long> t(m, -b);
    while (true) {
        out.push_back(t);
        std::size_t i = 0;
        while (i < m && t[i] == b) t[i++] = -b;
        if (i == m) break;
        ++t[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        long nx = 0, ny = 0;
        for (long v : x) nx += std::labs(v);
        for (long v : y) ny += std::labs(v);
        if (nx != ny) return nx < ny;
        return x < y;
    });
    return out;
}

std::vector<Scalar> primitive_integer(std::vector<Scalar> v) {
    mpz_class l = 1;
    for (const auto& s : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re_part().get_den_mpz_t());
    for (auto& s : v) s *= Scalar(mpq_class(l));
    return v;
}

}  // namespace

CandidateResult candidate_pole_divisor(const RatFun& r, const SolveCaps& caps) {
    CandidateResult out;
    const int d = r.degree();
    if (d < 1) throw Error("candidate poles need a nonconstant map");
    if (d == 1) {
        const Poly fix = r.num() - Poly::x() * r.den();
        Divisor c = Divisor::roots_of(r.den(), true);
        if (!fix.is_zero()) c = c.unite(Divisor::roots_of(fix));
        out.divisor = c.support();
        return out;
    }
    ClosureResult pc = postcritical_closure(r, caps.dynamics);
    out.iterations = pc.iterations;
    if (pc.overflow()) {
        out.reason = "not PCF within cap: " + pc.overflow_reason;
        return out;
    }
    Divisor c = pc.divisor->unite(Divisor::roots_of(wronskian(r), true)).unite(Divisor::roots_of(r.den()));
    out.divisor = c.support();
    return out;
}

SolveResult solve_g2(const RatFun& r, const SolveCaps& caps) { return solve_weighted(r, caps, 1); }
SolveResult solve_g3(const RatFun& r, const SolveCaps& caps) { return solve_weighted(r, caps, 2); }

std::optional<G1Result> solve_g1(const RatFun& r, int n, const SolveCaps& caps) {
    caps.validate();
    if (n == 0) throw Error("G1 needs a nonzero exponent");
    if (r.degree() < 1) throw Error("solving needs a nonconstant map");
    CandidateResult cand = candidate_pole_divisor(r, caps);
    if (!cand.divisor) return std::nullopt;

    const Poly& p = r.num();
    const Poly& q = r.den();
    const Poly w = wronskian(r);
    std::vector<Poly> f, big_f;
    for (const auto& [g, m] : cand.divisor->factors()) {
        f.push_back(g);
        big_f.push_back(homogenize(g, p, q, g.degree()));
    }
    std::vector<Poly> pieces;
    auto add_pieces = [&pieces](const Poly& g) {
        if (g.degree() < 1) return;
        for (auto& [h, m] : squarefree_decomposition(g)) pieces.push_back(std::move(h));
    };
    for (std::size_t i = 0; i < f.size(); ++i) {
        add_pieces(f[i]);
        add_pieces(big_f[i]);
    }
    add_pieces(q);
    add_pieces(w);
    const std::vector<Poly> basis = gcd_free_basis(pieces);

    // Orders at each basis element: sum_i e_i (ord F_i - deg f_i ord Q - ord f_i) = -n (ord W - 2 ord Q).
    const std::size_t m = f.size();
    kernels::Matrix a(basis.size(), m);
    std::vector<Scalar> b(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const int oq = multiplicity(q, basis[j]);
        for (std::size_t i = 0; i < m; ++i) {
            a(j, i) = Scalar(multiplicity(big_f[i], basis[j]) - f[i].degree() * oq - multiplicity(f[i], basis[j]));
        }
        b[j] = Scalar(-static_cast<long>(n) * (multiplicity(w, basis[j]) - 2 * oq));
    }
    std::vector<Scalar> particular(m);
    std::vector<std::vector<Scalar>> kernel;
    if (m > 0) {
        const LinearSolution sol = solve_linear(a, b);
        if (!sol.particular) return std::nullopt;
        particular = *sol.particular;
        for (const auto& v : sol.kernel) kernel.push_back(primitive_integer(v));
    } else if (std::any_of(b.begin(), b.end(), [](const Scalar& s) { return !s.is_zero(); })) {
        return std::nullopt;
    }

    // c(e) from leading coefficients; valid because the orders balance exactly.
    std::vector<Scalar> lc_ratio;
    for (std::size_t i = 0; i < m; ++i) lc_ratio.push_back(big_f[i].lc() / q.lc().pow(f[i].degree()));
    const Scalar c_w = (w.lc() / q.lc().pow(2)).pow(n);
    auto constant_for = [&](const std::vector<long>& e) {
        Scalar c = c_w;
        for (std::size_t i = 0; i < m; ++i) c *= lc_ratio[i].pow(e[i]);
        return c;
    };

    std::optional<std::vector<long>> fallback;
    std::optional<std::vector<long>> chosen;
    const std::size_t dims = std::min<std::size_t>(kernel.size(), 3);
    const long radius = kernel.empty() ? 0 : caps.g1_search;
    for (const auto& t : small_vectors(dims, radius)) {
        std::vector<Scalar> e = particular;
        for (std::size_t l = 0; l < dims; ++l) {
            for (std::size_t i = 0; i < m; ++i) e[i] += kernel[l][i] * Scalar(t[l]);
        }
        if (!std::all_of(e.begin(), e.end(), is_integer)) continue;
        std::vector<long> ei;
        for (const auto& s : e) ei.push_back(s.re_part().get_num().get_si());
        if (!fallback) fallback = ei;
        if (constant_for(ei).is_one()) {
            chosen = ei;
            break;
        }
    }
    if (!chosen) chosen = fallback;
    if (!chosen) return std::nullopt;

    G1Result out;
    out.n = n;
    out.eta = product_of_powers(f, *chosen);
    const RatFun ratio = out.eta.compose(r) * r.derivative().pow(n) / out.eta;
    if (!ratio.is_constant()) throw Error("internal: G1 exponents do not balance");
    out.c = ratio.num().coeff(0);
    return out;
}

namespace {

std::vector<std::vector<Scalar>> as_vectors(const std::vector<RatFun>& fs) {
    Poly l(1);
    for (const auto& f : fs) l = lcm(l, f.den());
    std::vector<Poly> nums;
    int top = 0;
    for (const auto& f : fs) {
        nums.push_back(f.num() * l.exact_div(f.den()));
        top = std::max(top, nums.back().degree());
    }
    std::vector<std::vector<Scalar>> out;
    for (const auto& p : nums) {
        std::vector<Scalar> v(static_cast<std::size_t>(top) + 1);
        for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_of(const std::vector<RatFun>& fs) {
    if (fs.empty()) return 0;
    const auto vs = as_vectors(fs);
    kernels::Matrix m(vs.size(), vs.front().size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
    }
    return matrix_rank(std::move(m));
}

}  // namespace

bool same_solution_space(const SolutionSpace& a, const SolutionSpace& b) {
    const std::size_t ra = rank_of(a.kernel);
    std::vector<RatFun> both = a.kernel;
    both.insert(both.end(), b.kernel.begin(), b.kernel.end());
    if (rank_of(b.kernel) != ra || rank_of(both) != ra) return false;
    if (a.particular.has_value() != b.particular.has_value()) return false;
    if (!a.particular) return true;
    std::vector<RatFun> with_diff = a.kernel;
    with_diff.push_back(*a.particular - *b.particular);
    return rank_of(with_diff) == ra;
}

SolutionSpace gauge_space(const SolutionSpace& s, GroupoidEq::Kind kind, const RatFun& phi) {
    if (kind != GroupoidEq::Kind::g2 && kind != GroupoidEq::Kind::g3) {
        throw Error("solution spaces are defined for G2 and G3");
    }
    const int weight = kind == GroupoidEq::Kind::g2 ? 1 : 2;
    SolutionSpace out;
    if (s.particular) out.particular = gauge_transform(GroupoidEq{kind, 0, *s.particular}, phi).coeff;
    const RatFun dphi = phi.derivative().pow(weight);
    for (const auto& h : s.kernel) out.kernel.push_back(h.compose(phi) * dphi);
    return out;
}

ClassificationReport classify(const RatFun& r, const SolveCaps& caps) {
    caps.validate();
    if (r.degree() < 1) throw Error("classification needs a nonconstant map");
    ClassificationReport rep;
    rep.map = r;
    rep.degree = r.degree();
    rep.caps = caps;

    for (int k = 1; k <= caps.n_max; ++k) {
        for (int n : {k, -k}) {
            auto g = solve_g1(r, n, caps);
            if (!g) continue;
            if (g->strict() && !eq_residual(GroupoidEq::g1(n, g->eta), r).is_zero()) {
                throw Error("internal: G1 solution fails the residual check");
            }
            if (g->strict() && !rep.g1) rep.g1 = *g;
            rep.g1_attempts.push_back(std::move(*g));
        }
    }
    rep.g2 = solve_g2(r, caps);
    rep.g3 = solve_g3(r, caps);

    if (rep.g1) {
        rep.minimal_order = 1;
        rep.equation = GroupoidEq::g1(rep.g1->n, rep.g1->eta);
    } else if (rep.g2.found()) {
        rep.minimal_order = 2;
        rep.equation = GroupoidEq::g2(*rep.g2.space->particular);
    } else if (rep.g3.found()) {
        rep.minimal_order = 3;
        rep.equation = GroupoidEq::g3(*rep.g3.space->particular);
    }
    if (rep.equation && !eq_residual(*rep.equation, r).is_zero()) {
        throw Error("internal: reported equation fails the residual check");
    }

    rep.critical = critical_divisor(r).str();
    if (r.degree() >= 2) {
        const ClosureResult pc = postcritical_closure(r, caps.dynamics);
        rep.closure_iterations = pc.iterations;
        rep.postcritical = pc.overflow() ? "overflow: " + pc.overflow_reason : pc.divisor->str();
        const Divisor e = exceptional_set(r);
        rep.exceptional = e.str();
        const int es = e.support_size();
        if (!rep.nontrivial()) {
        } else if (es == 2) {
            rep.family_guess = "monomial-like";
        } else if (es == 1 && !pc.overflow() && pc.divisor->support_size() <= 3) {
            rep.family_guess = "chebyshev-like";
        } else if (es == 0 && !pc.overflow() && pc.divisor->support_size() == 4) {
            rep.family_guess = "lattes-like";
        }
    } else {
        rep.postcritical = "n/a";
        rep.exceptional = "n/a";
    }
    return rep;
}

}  // namespace denv
