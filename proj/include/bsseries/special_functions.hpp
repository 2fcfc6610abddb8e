#pragma once

#include <complex>

#include "bsseries/errors.hpp"

namespace bsseries {

// ============================================================================
// Special functions: reciprocal Gamma on the half-integer lattice, complex
// Gamma / log-Gamma, the normal CDF, and exact small factorials
// ============================================================================

/// A number of the form twice_value / 2, i.e. an integer or half-odd-integer.
///
/// Exact lattice arithmetic keeps pole detection free of floating-point
/// comparisons: a = twice_value/2 is a non-positive integer exactly when
/// twice_value is even and twice_value <= 0.
struct HalfInteger {
    int twice_value;  ///< the represented number is twice_value / 2

    constexpr double value() const { return 0.5 * twice_value; }
    constexpr bool is_integer() const { return twice_value % 2 == 0; }
    constexpr bool is_nonpositive_integer() const {
        return is_integer() && twice_value <= 0;
    }
};

/// 1 / Gamma(a) for half-integer a, total over the whole lattice.
///
/// Returns exactly 0.0 at the Gamma poles (a = 0, -1, -2, ...).  Positive
/// half-odd values are built from Gamma(1/2) = sqrt(pi) by the upward
/// recurrence, negative half-odd values from the downward one, and integer
/// values from the exact factorial product, so every result is a correctly
/// rounded product chain.  Relative error <= 1e-14 across |a| <= 60; for
/// very large positive a where Gamma overflows binary64, the reciprocal
/// underflows gracefully to 0.
double recip_gamma_half_integer(HalfInteger a);

/// Gamma(s) for complex s via a 15-term Lanczos approximation (g = 607/128,
/// the classic coefficient set computed by Godfrey), with the reflection
/// formula for Re(s) < 1/2.
///
/// Relative error <= 1e-12 for Re(s) in [-10, 10], |Im(s)| <= 100, away from
/// the poles.  Throws PoleError when s is exactly a non-positive real integer.
std::complex<double> complex_gamma(std::complex<double> s);

/// A logarithm of Gamma(s): exp(complex_log_gamma(s)) == complex_gamma(s) to
/// machine precision, but with no overflow for large |Im(s)| (the direct
/// Gamma underflows/overflows once |Im(s)| exceeds a few hundred).
///
/// The imaginary part is NOT reduced to a principal branch; the value is only
/// meaningful under exp(), which is all the contour integrators need.
/// Throws PoleError at the non-positive real integers.
std::complex<double> complex_log_gamma(std::complex<double> s);

/// Standard normal CDF, N(x) = erfc(-x / sqrt(2)) / 2.
/// Absolute error <= 1e-13 on [-8, 8]; N(x) + N(-x) == 1 to <= 1e-15.
double normal_cdf(double x);

/// n! as a double.  Exact for n <= 22 (the largest n whose factorial's odd
/// part still fits in the 53-bit significand), correctly rounded up to
/// n = 170, and throws std::overflow_error for n > 170 where the result
/// exceeds the binary64 range.
double factorial(int n);

}  // namespace bsseries
