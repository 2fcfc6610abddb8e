#include "bsseries/market.hpp"

#include <cmath>

namespace bsseries {

void validate(const MarketParams& params) {
    if (!std::isfinite(params.spot) || params.spot <= 0.0) {
        throw DomainError("market: spot must be finite and > 0");
    }
    if (!std::isfinite(params.strike) || params.strike <= 0.0) {
        throw DomainError("market: strike must be finite and > 0");
    }
    if (!std::isfinite(params.rate) || params.rate < 0.0) {
        throw DomainError("market: rate must be finite and >= 0");
    }
    if (!std::isfinite(params.vol) || params.vol < 0.0) {
        throw DomainError("market: vol must be finite and >= 0");
    }
    if (!std::isfinite(params.tau) || params.tau < 0.0) {
        throw DomainError("market: tau must be finite and >= 0");
    }
}

SeriesVariables derive_variables(const MarketParams& params) {
    validate(params);
    SeriesVariables vars{};
    vars.log_moneyness = std::log(params.spot / params.strike) + params.rate * params.tau;
    vars.z = params.vol * std::sqrt(params.tau);
    vars.big_z = vars.z / std::sqrt(2.0);
    vars.discount = std::exp(-params.rate * params.tau);
    vars.forward_gap = vars.big_z * vars.big_z - vars.log_moneyness;
    return vars;
}

}  // namespace bsseries
