#pragma once

#include <optional>
#include <string>
#include <vector>

#include "denv/dynamics.hpp"
#include "denv/equations.hpp"
#include "denv/series.hpp"

namespace denv {

/// A truncated series with exact or numeric coefficients.
struct GermSeries {
    std::optional<Series<Scalar>> exact;
    std::optional<Series<BigFloatC>> numeric;

    bool is_exact() const { return exact.has_value(); }
    int order() const;
    /// max |c_k| over k >= from; exactly zero iff those coefficients vanish in exact mode.
    BigFloat max_abs(int from = 0, mpfr_prec_t prec = kDefaultPrecision) const;
    std::vector<std::string> coefficient_strings(int digits = 20) const;
};

/// Psi(w) = p + w + sum_{k>=2} a_k w^k with R(Psi(w)) = Psi(lambda w).
struct KoenigsSeries {
    std::string point;
    std::string multiplier;
    int order = 0;
    mpfr_prec_t precision = kDefaultPrecision;
    std::optional<Scalar> lambda;               // exact mode
    std::optional<BigFloatC> numeric_lambda;    // numeric mode
    GermSeries psi;

    bool is_exact() const { return psi.is_exact(); }
    /// a_1..a_N.
    std::vector<std::string> coefficient_strings(int digits = 20) const;
};

inline constexpr int kDefaultKoenigsOrder = 32;

/// Exact when p and its multiplier are exact, numeric otherwise.
KoenigsSeries koenigs_series(const RatFun& r, const FixedPointData& p, int order = kDefaultKoenigsOrder,
                             mpfr_prec_t prec = kDefaultPrecision);
/// Convenience for an exact finite fixed point.
KoenigsSeries koenigs_series(const RatFun& r, const Scalar& p, int order = kDefaultKoenigsOrder);

/// Largest coefficient of R(Psi(w)) - Psi(lambda w).
BigFloat linearization_residual(const RatFun& r, const KoenigsSeries& psi);

/// (mu o Psi) Psi' + Psi''/Psi', to order N - 2.
GermSeries pullback_mu_series(const RatFun& mu, const KoenigsSeries& psi);
/// (nu o Psi) Psi'^2 + S(Psi), to order N - 3.
GermSeries pullback_nu_series(const RatFun& nu, const KoenigsSeries& psi);

/// bar(lambda w) lambda^weight - bar(w).
GermSeries scaling_defect(const GermSeries& bar, const KoenigsSeries& psi, int weight);
/// (rho o Psi) Psi'^weight truncated to `order`; equals the scaling defect when
/// rho is the G2 (weight 1) or G3 (weight 2) residual.
GermSeries residual_pullback(const RatFun& rho, const KoenigsSeries& psi, int weight, int order);

/// Germs known by an ODE and their value data at a center.
enum class GermKind { exp, cos2, wp, poly };

struct GermData {
    GermKind kind = GermKind::exp;
    Scalar value;      // Psi(center)
    Scalar slope;      // Psi'(center); cos2 and wp
    Scalar g2;         // wp: Psi'' = 6 Psi^2 - g2/2
    Poly poly;         // poly: Psi itself
    Scalar center;     // poly
};

/// Taylor series of the germ at its center to order N.
Series<Scalar> germ_series(const GermData& g, int order);
/// exp(w) or 2 cos(w) expanded at a complex center.
Series<BigFloatC> germ_series_numeric(GermKind kind, const BigFloatC& center, int order);

struct DeckResult {
    GermSeries gamma;     // w1 + gamma(t) is the image of w0 + t
    BigFloat nonlinear;   // max |gamma_k|, k >= 2
    BigFloat value_gap;   // |Psi(w0) - Psi(w1)|
};

/// gamma = (Psi at w1)^{-1} o (Psi at w0).
DeckResult deck_transform_series(const GermData& at_w0, const GermData& at_w1, int order);
DeckResult deck_transform_series_numeric(GermKind kind, const BigFloatC& w0, const BigFloatC& w1, int order);

}  // namespace denv
