#include "bsseries/mellin.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "bsseries/special_functions.hpp"

namespace bsseries {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_resolution(const ContourSpec& spec) {
    if (!(spec.height > 0.0)) {
        throw ConfigError("contour: height must be > 0");
    }
    if (!(spec.step > 0.0)) {
        throw ConfigError("contour: step must be > 0");
    }
}

/// Number of positive lattice points: nodes are k*step for k in [-count, count].
int half_node_count(const ContourSpec& spec) {
    return static_cast<int>(spec.height / spec.step + 1e-9);
}

/// Trapezoid end weights: 1/2 at |k| == count, 1 inside.
double trapezoid_weight(int k, int count) {
    return (k == -count || k == count) ? 0.5 : 1.0;
}

}  // namespace

bool in_convergence_polyhedron(const ContourSpec& spec) {
    return 2.0 * spec.c1 + spec.c2 > 2.0 && spec.c2 > 0.0 && spec.c2 < 1.0;
}

double cahen_mellin_inverse(double x, const ContourSpec& spec) {
    if (!(x > 0.0)) {
        throw DomainError("cahen_mellin_inverse: x must be > 0");
    }
    if (!(spec.c1 > 0.0)) {
        throw DomainError("cahen_mellin_inverse: c1 must be > 0");
    }
    validate_resolution(spec);
    const double log_x = std::log(x);
    const int count = half_node_count(spec);
    double acc = 0.0;
    for (int k = -count; k <= count; ++k) {
        const std::complex<double> s{spec.c1, k * spec.step};
        const std::complex<double> value =
            complex_gamma(s) * std::exp(-s * log_x);
        acc += trapezoid_weight(k, count) * value.real();
    }
    return acc * spec.step / (2.0 * kPi);
}

double residue_series_exponential(double x, int terms) {
    if (terms < 1) {
        throw ConfigError("residue_series_exponential: terms must be >= 1");
    }
    // Residues of Gamma at s = -k give the Taylor terms (-x)^k / k!.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < terms; ++k) {
        term *= -x / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

double contour_price_2d(const MarketParams& params, const ContourSpec& spec) {
    validate_resolution(spec);
    if (!in_convergence_polyhedron(spec)) {
        throw DomainError(
            "contour_price_2d: (c1, c2) outside the convergence polyhedron "
            "2*c1 + c2 > 2, 0 < c2 < 1");
    }
    const SeriesVariables vars = derive_variables(params);
    if (vars.z == 0.0) {
        throw DegenerateError("contour_price_2d: sigma*sqrt(tau) must be > 0");
    }
    const double gap = 0.5 * vars.z * vars.z - vars.log_moneyness;
    if (!(gap > 0.0)) {
        throw DomainError(
            "contour_price_2d: requires z^2/2 - log_moneyness > 0");
    }
    const double log_gap = std::log(gap);
    const double log_z = std::log(vars.z);
    const double log_two = std::numbers::ln2;
    const int count = half_node_count(spec);
    const double h = spec.step;
    const std::complex<double> i_unit{0.0, 1.0};

    // Everything in log space.  The integrand splits as
    //   exp( A(t1) + B(t2) + C(2*t1 + t2) ),
    //   A = (1/2 - t1) log 2 - logGamma(t1 + 1/2) + (2 - 2 t1) log X
    //       + (2 t1 - 1) log z,
    //   B = -i pi t2 + logGamma(t2) + logGamma(1 - t2) - t2 log X,
    //   C = logGamma(-2 + 2 t1 + t2),
    // and the coupled argument of C moves on the one-dimensional lattice
    // (2 k1 + k2) * step, so C needs only O(count) Gamma evaluations.
    std::vector<std::complex<double>> axis1(2 * count + 1);
    std::vector<std::complex<double>> axis2(2 * count + 1);
    for (int k = -count; k <= count; ++k) {
        const std::complex<double> t1{spec.c1, k * h};
        const std::complex<double> t2{spec.c2, k * h};
        axis1[static_cast<std::size_t>(k + count)] =
            (0.5 - t1) * log_two - complex_log_gamma(t1 + 0.5) +
            (2.0 - 2.0 * t1) * log_gap + (2.0 * t1 - 1.0) * log_z;
        axis2[static_cast<std::size_t>(k + count)] =
            -i_unit * kPi * t2 + complex_log_gamma(t2) +
            complex_log_gamma(1.0 - t2) - t2 * log_gap;
    }
    const double coupled_real = -2.0 + 2.0 * spec.c1 + spec.c2;
    std::vector<std::complex<double>> coupled(6 * count + 1);
    for (int k = -3 * count; k <= 3 * count; ++k) {
        coupled[static_cast<std::size_t>(k + 3 * count)] =
            complex_log_gamma({coupled_real, k * h});
    }

    double acc = 0.0;
    for (int k1 = -count; k1 <= count; ++k1) {
        const std::complex<double> a = axis1[static_cast<std::size_t>(k1 + count)];
        const double w1 = trapezoid_weight(k1, count);
        for (int k2 = -count; k2 <= count; ++k2) {
            const std::complex<double> exponent =
                a + axis2[static_cast<std::size_t>(k2 + count)] +
                coupled[static_cast<std::size_t>(2 * k1 + k2 + 3 * count)];
            acc += w1 * trapezoid_weight(k2, count) *
                   std::exp(exponent).real();
        }
    }
    const double prefactor =
        params.strike * vars.discount / (4.0 * kPi * kPi);
    return prefactor * acc * h * h;
}

std::vector<int> characteristic_vector_of(
    const std::vector<std::vector<int>>& numerator_args,
    const std::vector<std::vector<int>>& denominator_args) {
    std::size_t dimension = 0;
    if (!numerator_args.empty()) {
        dimension = numerator_args.front().size();
    } else if (!denominator_args.empty()) {
        dimension = denominator_args.front().size();
    } else {
        throw ConfigError("characteristic_vector_of: no Gamma arguments given");
    }
    std::vector<int> delta(dimension, 0);
    const auto accumulate = [&](const std::vector<std::vector<int>>& rows,
                                int sign) {
        for (const auto& row : rows) {
            if (row.size() != dimension) {
                throw ConfigError(
                    "characteristic_vector_of: inconsistent row dimensions");
            }
            for (std::size_t d = 0; d < dimension; ++d) {
                delta[d] += sign * row[d];
            }
        }
    };
    accumulate(numerator_args, +1);
    accumulate(denominator_args, -1);
    return delta;
}

std::array<int, 2> characteristic_vector() {
    // Gamma argument coefficient rows of the 2-D call integrand.
    const std::vector<std::vector<int>> numerator{
        {0, 1},   // Gamma(t2)
        {0, -1},  // Gamma(1 - t2)
        {2, 1},   // Gamma(-2 + 2 t1 + t2)
    };
    const std::vector<std::vector<int>> denominator{
        {1, 0},  // Gamma(t1 + 1/2)
    };
    const std::vector<int> delta =
        characteristic_vector_of(numerator, denominator);
    return {delta[0], delta[1]};
}

}  // namespace bsseries
