#pragma once

#include "bsseries/errors.hpp"

namespace bsseries {

// ============================================================================
// Market inputs and derived series variables
// ============================================================================

/// Inputs of a European call under flat rates and lognormal dynamics.
struct MarketParams {
    double spot;    ///< current underlying price S > 0
    double strike;  ///< strike K > 0
    double rate;    ///< continuously compounded risk-free rate r >= 0
    double vol;     ///< lognormal volatility sigma >= 0
    double tau;     ///< time to expiry in years, tau >= 0
};

/// Quantities every pricer in this library is written in terms of.
///
/// log_moneyness = log(S/K) + r*tau      (forward log-moneyness)
/// z             = sigma*sqrt(tau)       (total standard deviation)
/// big_z         = z / sqrt(2)
/// discount      = exp(-r*tau)
/// forward_gap   = big_z^2 - log_moneyness
struct SeriesVariables {
    double log_moneyness;
    double z;
    double big_z;
    double discount;
    double forward_gap;
};

/// Throws DomainError unless spot > 0, strike > 0, rate >= 0, vol >= 0,
/// tau >= 0 and all fields are finite.
void validate(const MarketParams& params);

/// Validates and maps market inputs to the derived variables above.
SeriesVariables derive_variables(const MarketParams& params);

}  // namespace bsseries
