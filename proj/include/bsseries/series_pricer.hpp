#pragma once

#include <optional>
#include <vector>

#include "bsseries/errors.hpp"
#include "bsseries/market.hpp"

namespace bsseries {

// ============================================================================
// Double-series call pricer
// ============================================================================
//
// The call price is expanded as a double power series in the two variables
// forward_gap = Z^2 - log_moneyness and Z = sigma*sqrt(tau)/sqrt(2):
//
//   V = (K*exp(-r*tau)/2) * Sum_{n>=0} Sum_{m>=1}
//         (-1)^n / (n! * Gamma(1 + (m-n)/2))
//         * forward_gap^n * Z^(m-n).
//
// Terms with m - n in {-2, -4, -6, ...} vanish identically (reciprocal
// Gamma poles), which is what makes the negative powers of Z harmless.
// The series converges fast near the money; far from it the inner sum over
// n needs roughly (forward_gap/Z)^2 / 2 terms before its alternating terms
// start decaying, so a fixed truncation has a limited accuracy envelope.
// build_term_grid records max |term| precisely so callers can see that
// conditioning at a glance.

/// Truncation bounds and optional adaptive stopping for the double series.
struct SeriesConfig {
    int max_n = 20;  ///< highest power of forward_gap, >= 0
    int max_m = 20;  ///< highest column index, >= 1
    /// When set (> 0): stop after the first m whose column sum and its
    /// predecessor's are both below tolerance in absolute value.
    std::optional<double> tolerance{};
};

/// Full record of a truncated series evaluation.
struct TermGrid {
    int max_n;            ///< inner truncation actually used
    int max_m;            ///< effective column truncation (adaptive stop or configured bound)
    /// terms[n][m-1] = the full (n, m) term including the K*exp(-r*tau)/2
    /// prefactor, for n in [0, max_n], m in [1, max_m].
    std::vector<std::vector<double>> terms;
    std::vector<double> column_sums;       ///< column_sums[m-1] = sum over n of terms[n][m-1]
    std::vector<double> cumulative_price;  ///< cumulative_price[m-1] = sum of the first m column sums
    double max_abs_term;  ///< largest |term| encountered: the conditioning diagnostic
};

/// One term of the double series:
///
///   (strike_discount/2) * (-1)^n * forward_gap^n * big_z^(m-n)
///        / (n! * Gamma(1 + (m-n)/2))
///
/// Returns exactly 0.0 where 1/Gamma sits on a pole (m - n in {-2, -4, ...}).
/// Negative powers of big_z are computed as one reciprocal of big_z^(n-m)
/// (exponentiation by squaring).  Throws DegenerateError when big_z == 0 and
/// m - n < 0; throws ConfigError on n < 0, m < 1, or strike_discount <= 0.
double series_term(const SeriesVariables& vars, double strike_discount,
                   int n, int m);

/// Evaluates the series column by column (m outermost, n innermost) and
/// records every term, the column sums, the running price, and max |term|.
///
/// With config.tolerance set, columns stop at the first m where
/// |column_sums[m]| < tolerance for two consecutive columns; the grid's
/// max_m then records the effective truncation.
/// Throws DegenerateError when sigma*sqrt(tau) == 0.
TermGrid build_term_grid(const MarketParams& params,
                         const SeriesConfig& config = {});

/// The truncated double-series price: the last entry of
/// build_term_grid(params, config).cumulative_price, bit for bit.
double price_series(const MarketParams& params, const SeriesConfig& config = {});

/// At-the-money-forward specialization.  Requires |log_moneyness| <= 1e-12
/// (else NotAtmError).  With forward_gap == Z^2 the general term collapses to
///
///   (spot/2) * (-1)^n * Z^(n+m) / (n! * Gamma(1 + (m-n)/2)),
///
/// a positive-power series evaluated directly (note K*exp(-r*tau) == S at
/// the money forward).  Truncation and adaptive stopping follow the same
/// semantics as build_term_grid; agrees with price_series to 1e-12 at equal
/// truncation.  The m = 1 column's n = 0 term, S*Z/Gamma(3/2)/2
/// = S*sigma*sqrt(tau)/sqrt(2*pi), is the leading-order price that the 0.4
/// rule of thumb approximates.
double price_atm_series(const MarketParams& params,
                        const SeriesConfig& config = {});

}  // namespace bsseries
