#pragma once

#include <optional>
#include <string>
#include <vector>

#include "denv/dynamics.hpp"
#include "denv/equations.hpp"

namespace denv {

struct SolveCaps {
    int max_den_deg = 24;
    std::optional<int> extra_num_deg;  // defaults to the denominator degree
    int pole_mult = 1;                 // G2 pole order; G3 uses twice this
    int n_max = 6;                     // G1 exponents in [-n_max, n_max] \ {0}
    int g1_search = 6;                 // kernel coefficient radius for the G1 constant search
    DynamicsCaps dynamics;

    /// Throws on a cap below 1.
    void validate() const;
};

struct CandidateResult {
    std::optional<Divisor> divisor;
    int iterations = 0;
    std::string reason;  // set on overflow
};

/// Postcritical closure plus critical points, poles and infinity; for degree
/// one, poles, fixed points and infinity.
CandidateResult candidate_pole_divisor(const RatFun& r, const SolveCaps& caps = {});

/// Affine space particular + span(kernel) of coefficient functions.
struct SolutionSpace {
    std::optional<RatFun> particular;
    std::vector<RatFun> kernel;
};

struct SolveResult {
    std::optional<SolutionSpace> space;  // no value: nothing within caps
    std::string reason;
    int den_degree = 0;
    int num_degree = 0;
    bool found() const { return space && space->particular; }
};

SolveResult solve_g2(const RatFun& r, const SolveCaps& caps = {});
SolveResult solve_g3(const RatFun& r, const SolveCaps& caps = {});

struct G1Result {
    int n = 0;
    RatFun eta;
    Scalar c;  // eta(R) R'^n = c eta; strict when c == 1
    bool strict() const { return c.is_one(); }
};

std::optional<G1Result> solve_g1(const RatFun& r, int n, const SolveCaps& caps = {});

/// Equality of affine solution spaces via rank tests.
bool same_solution_space(const SolutionSpace& a, const SolutionSpace& b);
/// The image of a space under the gauge transform of its equation kind.
SolutionSpace gauge_space(const SolutionSpace& s, GroupoidEq::Kind kind, const RatFun& phi);

struct ClassificationReport {
    RatFun map;
    int degree = 0;
    SolveCaps caps;
    std::vector<G1Result> g1_attempts;   // one per n tried with a candidate
    std::optional<G1Result> g1;          // first strict solution
    SolveResult g2;
    SolveResult g3;
    int minimal_order = 0;               // 0: trivial within caps
    std::optional<GroupoidEq> equation;  // minimal-order equation
    std::string family_guess = "none";
    // Evidence.
    std::string critical;
    std::string postcritical;
    int closure_iterations = 0;
    std::string exceptional;

    bool nontrivial() const { return minimal_order > 0; }
    std::string verdict() const { return nontrivial() ? "nontrivial" : "trivial-within-caps"; }
};

ClassificationReport classify(const RatFun& r, const SolveCaps& caps = {});

}  // namespace denv
