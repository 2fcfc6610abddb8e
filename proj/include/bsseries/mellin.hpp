#pragma once

#include <array>
#include <vector>

#include "bsseries/errors.hpp"
#include "bsseries/market.hpp"

namespace bsseries {

// ============================================================================
// Mellin-Barnes machinery: the one-dimensional Cahen-Mellin integral, its
// residue series, and the two-dimensional contour representation of the call
// ============================================================================

/// Vertical-line contour placement and quadrature resolution.
///
/// The 1-D inversion uses the line Re(s) = c1; the 2-D representation uses
/// the pair (Re(t1), Re(t2)) = (c1, c2), which must lie in the convergence
/// polyhedron P: 2*c1 + c2 > 2 and 0 < c2 < 1.  Each line is truncated to
/// |Im| <= height and discretized with the trapezoid rule at spacing step.
struct ContourSpec {
    double c1 = 1.2;
    double c2 = 0.5;
    double height = 60.0;
    double step = 0.05;
};

/// True when (c1, c2) lies in P: 2*c1 + c2 > 2 and 0 < c2 < 1.
bool in_convergence_polyhedron(const ContourSpec& spec);

/// Cahen-Mellin integral: exp(-x) recovered as
///   (1 / 2*pi*i) * Integral_{c1 - i*inf}^{c1 + i*inf} Gamma(s) x^(-s) ds,
/// truncated to |Im(s)| <= height and evaluated with the trapezoid rule.
/// Gamma decays like exp(-pi/2 |Im s|) on vertical lines, so the default
/// spec reaches absolute error <= 1e-8 for x in [0.05, 10] with room to
/// spare.  Throws DomainError when x <= 0 or c1 <= 0, ConfigError when
/// height or step is not positive.
double cahen_mellin_inverse(double x, const ContourSpec& spec = {});

/// Partial sum of the residue series of the same integral: closing the
/// contour to the left collects the poles of Gamma at s = -k with residues
/// (-1)^k / k!, i.e. the Taylor series sum_{k<n} (-x)^k / k!.
/// terms must be >= 1 (ConfigError otherwise); terms >= 30 reaches 1e-10
/// absolute for x <= 5, and residue_series_exponential(0, n) == 1 exactly.
double residue_series_exponential(double x, int terms);

/// Two-dimensional Mellin-Barnes representation of the call price:
///
///   V = K*exp(-r*tau) / (4*pi^2) * Integral Integral Re[ F(t1, t2) ] dy1 dy2,
///   t1 = c1 + i*y1,  t2 = c2 + i*y2,
///   F  = exp(-i*pi*t2) * 2^(1/2 - t1)
///        * Gamma(t2) * Gamma(1 - t2) * Gamma(-2 + 2*t1 + t2) / Gamma(t1 + 1/2)
///        * X^(2 - 2*t1 - t2) * z^(2*t1 - 1),
///
/// where z = sigma*sqrt(tau) and X = z^2/2 - log_moneyness must be positive.
/// Both lines are truncated to |Im| <= height and evaluated with the tensor
/// trapezoid rule; the integrand is assembled in log space, so no
/// intermediate Gamma factor can overflow at any practical height.
///
/// Caution: the box-truncated tensor integral does not settle as height
/// grows.  exp(-i*pi*t2) contributes |exp(pi*y2)|, which exactly cancels the
/// decay of Gamma(t2)*Gamma(1-t2) for y2 > 0, and along the ridge
/// y2 = -2*y1 the remaining Gamma ratio grows like exp(pi/2 * |y1|).  The
/// truncated integral therefore grows exponentially with height instead of
/// converging; see the validation harness for the measured sweep.
///
/// Throws DegenerateError when sigma*sqrt(tau) == 0, DomainError when
/// (c1, c2) violates P or X <= 0, ConfigError on bad height/step.
double contour_price_2d(const MarketParams& params, const ContourSpec& spec = {});

/// Sum of the numerator Gamma argument coefficient rows minus the sum of the
/// denominator rows.  Each row lists the coefficients of (t1, ..., td) in one
/// Gamma argument (constants omitted: they do not affect growth).  The result
/// governs the large-|t| decay of the integrand along each axis.
/// Throws ConfigError when rows disagree in dimension.
std::vector<int> characteristic_vector_of(
    const std::vector<std::vector<int>>& numerator_args,
    const std::vector<std::vector<int>>& denominator_args);

/// Characteristic vector of the 2-D call integrand above: the rows are
/// Gamma(t2) -> (0, 1), Gamma(1 - t2) -> (0, -1), Gamma(-2 + 2t1 + t2) ->
/// (2, 1) in the numerator and Gamma(t1 + 1/2) -> (1, 0) in the denominator,
/// so the value is (1, 1).  Computed from those tables, not hard-coded.
std::array<int, 2> characteristic_vector();

}  // namespace bsseries
