#include "bsseries/series_pricer.hpp"

#include <cmath>
#include <cstdlib>

#include "bsseries/special_functions.hpp"

namespace bsseries {

namespace {

/// base^exponent for exponent >= 0 by binary exponentiation.
double power_int(double base, int exponent) {
    double result = 1.0;
    double factor = base;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1u) {
            result *= factor;
        }
        e >>= 1u;
        if (e != 0) {
            factor *= factor;
        }
    }
    return result;
}

void validate_config(const SeriesConfig& config) {
    if (config.max_n < 0) {
        throw ConfigError("series: max_n must be >= 0");
    }
    if (config.max_m < 1) {
        throw ConfigError("series: max_m must be >= 1");
    }
    if (config.tolerance && !(*config.tolerance > 0.0)) {
        throw ConfigError("series: tolerance must be > 0 when given");
    }
}

// Adaptive stop: two consecutive column sums below tolerance.
constexpr int kQuietColumnsToStop = 2;

}  // namespace

double series_term(const SeriesVariables& vars, double strike_discount,
                   int n, int m) {
    if (n < 0) {
        throw ConfigError("series_term: n must be >= 0");
    }
    if (m < 1) {
        throw ConfigError("series_term: m must be >= 1");
    }
    if (!(strike_discount > 0.0)) {
        throw ConfigError("series_term: strike_discount must be > 0");
    }
    const int power = m - n;
    if (vars.big_z == 0.0 && power < 0) {
        throw DegenerateError("series_term: negative power of big_z = 0");
    }
    // 1 / Gamma(1 + (m-n)/2): exactly 0 on the pole cells m - n in {-2, -4, ...}.
    const double recip_gamma = recip_gamma_half_integer(HalfInteger{2 + power});
    if (recip_gamma == 0.0) {
        return 0.0;
    }
    // 1 / n! through the same reciprocal-Gamma lattice keeps the term total:
    // it underflows to 0 instead of overflowing once n exceeds 170.
    const double recip_n_factorial =
        recip_gamma_half_integer(HalfInteger{2 * (n + 1)});
    if (recip_n_factorial == 0.0) {
        return 0.0;
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double gap_power = power_int(vars.forward_gap, n);
    const double z_power = (power >= 0) ? power_int(vars.big_z, power)
                                        : 1.0 / power_int(vars.big_z, -power);
    return 0.5 * strike_discount * sign * recip_gamma * recip_n_factorial *
           gap_power * z_power;
}

TermGrid build_term_grid(const MarketParams& params, const SeriesConfig& config) {
    validate_config(config);
    const SeriesVariables vars = derive_variables(params);
    if (vars.z == 0.0) {
        throw DegenerateError("build_term_grid: sigma*sqrt(tau) must be > 0");
    }
    const double strike_discount = params.strike * vars.discount;

    TermGrid grid{};
    grid.max_n = config.max_n;
    grid.terms.assign(static_cast<std::size_t>(config.max_n) + 1, {});
    grid.max_abs_term = 0.0;

    double running_price = 0.0;
    int quiet_columns = 0;
    int columns_built = 0;
    for (int m = 1; m <= config.max_m; ++m) {
        double column = 0.0;
        for (int n = 0; n <= config.max_n; ++n) {
            const double term = series_term(vars, strike_discount, n, m);
            grid.terms[static_cast<std::size_t>(n)].push_back(term);
            grid.max_abs_term = std::max(grid.max_abs_term, std::abs(term));
            column += term;
        }
        running_price += column;
        grid.column_sums.push_back(column);
        grid.cumulative_price.push_back(running_price);
        columns_built = m;
        if (config.tolerance) {
            quiet_columns = (std::abs(column) < *config.tolerance)
                                ? quiet_columns + 1
                                : 0;
            if (quiet_columns >= kQuietColumnsToStop) {
                break;
            }
        }
    }
    grid.max_m = columns_built;
    return grid;
}

double price_series(const MarketParams& params, const SeriesConfig& config) {
    return build_term_grid(params, config).cumulative_price.back();
}

double price_atm_series(const MarketParams& params, const SeriesConfig& config) {
    validate_config(config);
    const SeriesVariables vars = derive_variables(params);
    constexpr double kAtmGate = 1e-12;  // |log(S/K) + r*tau| must not exceed this
    if (std::abs(vars.log_moneyness) > kAtmGate) {
        throw NotAtmError(
            "price_atm_series: |log(S/K) + r*tau| exceeds 1e-12; "
            "use price_series away from the money-forward point");
    }
    if (vars.z == 0.0) {
        throw DegenerateError("price_atm_series: sigma*sqrt(tau) must be > 0");
    }

    double running_price = 0.0;
    int quiet_columns = 0;
    for (int m = 1; m <= config.max_m; ++m) {
        double column = 0.0;
        for (int n = 0; n <= config.max_n; ++n) {
            const double recip_gamma =
                recip_gamma_half_integer(HalfInteger{2 + (m - n)});
            if (recip_gamma == 0.0) {
                continue;
            }
            const double recip_n_factorial =
                recip_gamma_half_integer(HalfInteger{2 * (n + 1)});
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            column += 0.5 * params.spot * sign * recip_gamma *
                      recip_n_factorial * power_int(vars.big_z, n + m);
        }
        running_price += column;
        if (config.tolerance) {
            quiet_columns = (std::abs(column) < *config.tolerance)
                                ? quiet_columns + 1
                                : 0;
            if (quiet_columns >= kQuietColumnsToStop) {
                break;
            }
        }
    }
    return running_price;
}

}  // namespace bsseries
