#pragma once

#include <optional>
#include <string>
#include <vector>

#include "denv/divisor.hpp"
#include "denv/roots.hpp"

namespace denv {

struct DynamicsCaps {
    Field field;
    int orbit_cap = 64;                      // postcritical support size
    std::optional<std::size_t> height_cap;   // bits; default_height_cap(R) when unset
    int period_cap = 6;
    int root_degree_cap = 256;               // largest R^n degree searched for periodic points
    mpfr_prec_t precision = kDefaultPrecision;
};

/// A point of period dividing `period` with its cycle multiplier, either
/// exact over the base field or numeric.
struct FixedPointData {
    std::optional<PointP1> exact;
    std::optional<BigFloatC> numeric;
    std::optional<Scalar> multiplier;
    std::optional<BigFloatC> numeric_multiplier;
    int period = 1;
    int multiplicity = 1;
    bool repelling = false;

    bool is_exact() const { return exact.has_value(); }
    std::string point_str() const;
    std::string multiplier_str() const;
};

/// Solutions of R^n(x) = x on the projective line with multiplicity.
std::vector<FixedPointData> fixed_points(const RatFun& r, int period, const Field& field = {},
                                         mpfr_prec_t prec = kDefaultPrecision);

/// Repelling periodic point whose orbit avoids `avoid`; exact points are
/// preferred over numeric ones across all periods up to the cap.
FixedPointData repelling_point_avoiding(const RatFun& r, const Divisor& avoid, const DynamicsCaps& caps = {});

/// Zeros of the Wronskian P'Q - PQ' with multiplicity, plus infinity.
Divisor critical_divisor(const RatFun& r);

/// 32 + 4 h(R) bits.
std::size_t default_height_cap(const RatFun& r);

struct ClosureResult {
    std::optional<Divisor> divisor;  // empty on overflow
    int iterations = 0;              // pushforward steps performed
    std::string overflow_reason;
    bool overflow() const { return !divisor.has_value(); }
};

/// Smallest forward-invariant set containing the critical values, or an
/// overflow marker when support or height exceeds the caps.
ClosureResult postcritical_closure(const RatFun& r, const DynamicsCaps& caps = {});

/// Points with finite grand orbit (at most two).
Divisor exceptional_set(const RatFun& r);

}  // namespace denv
