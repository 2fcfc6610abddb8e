#include "bsseries/reference_pricers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bsseries/special_functions.hpp"

namespace bsseries {

namespace {

// Grading of the quadrature window: the Gaussian factor exp(-y^2 / 2 z^2)
// is below 2e-8 past 6 standard deviations, so the inner block [lower, 6z]
// carries essentially the whole integral and receives 80% of the panels.
constexpr double kInnerBlockSigmas = 6.0;
constexpr double kInnerPanelFraction = 0.8;

/// Composite Simpson over [a, b] with an even panel count, applied to the
/// discounted-payoff integrand.  expm1 keeps the payoff factor accurate
/// right at the kink, where y - y_star is tiny.
double simpson_block(double a, double b, int panels, double strike,
                     double y_star, double z) {
    const double inv_z = 1.0 / z;
    const double norm = strike / (z * std::sqrt(2.0 * std::numbers::pi));
    const auto integrand = [&](double y) {
        const double u = y * inv_z;
        return norm * std::expm1(y - y_star) * std::exp(-0.5 * u * u);
    };
    const double h = (b - a) / panels;
    double acc = integrand(a) + integrand(b);
    for (int j = 1; j < panels; ++j) {
        acc += (j % 2 == 1 ? 4.0 : 2.0) * integrand(a + h * j);
    }
    return acc * h / 3.0;
}

/// Largest even integer <= x, floored at 2.
int even_panels(double x) {
    int p = static_cast<int>(x);
    p -= p % 2;
    return std::max(p, 2);
}

}  // namespace

DPlusMinus d_plus_minus(const MarketParams& params) {
    const SeriesVariables vars = derive_variables(params);
    if (vars.z == 0.0) {
        throw DegenerateError("d_plus_minus: sigma*sqrt(tau) must be > 0");
    }
    const double d_plus = vars.log_moneyness / vars.z + 0.5 * vars.z;
    return {d_plus, d_plus - vars.z};
}

double closed_form_call(const MarketParams& params) {
    const SeriesVariables vars = derive_variables(params);
    if (vars.z == 0.0) {
        return std::max(params.spot - params.strike * vars.discount, 0.0);
    }
    const auto [d_plus, d_minus] = d_plus_minus(params);
    return params.spot * normal_cdf(d_plus) -
           params.strike * vars.discount * normal_cdf(d_minus);
}

double green_quadrature_call(const MarketParams& params,
                             const QuadratureConfig& config) {
    if (config.node_count < 3 || config.node_count % 2 == 0) {
        throw ConfigError("green_quadrature_call: node_count must be odd and >= 3");
    }
    if (!(config.half_width > 0.0)) {
        throw ConfigError("green_quadrature_call: half_width must be > 0");
    }
    const SeriesVariables vars = derive_variables(params);
    if (vars.z == 0.0) {
        throw DegenerateError("green_quadrature_call: sigma*sqrt(tau) must be > 0");
    }
    const double z = vars.z;
    const double window = config.half_width * z;
    const double y_star = 0.5 * z * z - vars.log_moneyness;
    if (y_star >= window) {
        return 0.0;  // the payoff region lies entirely beyond the window
    }
    const double lower = std::max(y_star, -window);
    const int total_panels = config.node_count - 1;

    const double split = kInnerBlockSigmas * z;
    double integral = 0.0;
    if (lower >= split || total_panels < 8) {
        integral = simpson_block(lower, window, total_panels, params.strike,
                                 y_star, z);
    } else {
        int inner = even_panels(kInnerPanelFraction * total_panels);
        inner = std::min(inner, total_panels - 2);
        const int outer = total_panels - inner;
        integral = simpson_block(lower, split, inner, params.strike, y_star, z) +
                   simpson_block(split, window, outer, params.strike, y_star, z);
    }
    return vars.discount * integral;
}

double brenner_subrahmanyam_atm(const MarketParams& params) {
    validate(params);
    constexpr double kBrennerFactor = 0.4;  // rounding of 1/sqrt(2*pi)
    return kBrennerFactor * params.spot * params.vol * std::sqrt(params.tau);
}

}  // namespace bsseries
