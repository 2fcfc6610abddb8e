#pragma once

#include <stdexcept>
#include <string>

namespace bsseries {

// ============================================================================
// Error hierarchy
// ============================================================================
//
// Domain-level failures (bad market inputs, out-of-domain evaluation points)
// derive from std::domain_error; configuration mistakes (invalid truncations,
// node counts, contour parameters) derive from std::invalid_argument so that
// callers can distinguish "this input has no price" from "this request is
// malformed".

/// Invalid market data or evaluation point (e.g. non-positive spot/strike).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A quantity that must be strictly positive for the requested operation
/// collapsed to zero (e.g. sigma*sqrt(tau) = 0 in a kernel that needs it).
class DegenerateError : public DomainError {
public:
    explicit DegenerateError(const std::string& what) : DomainError(what) {}
};

/// Input is not at-the-money-forward where an ATM-only evaluation demands it.
class NotAtmError : public DomainError {
public:
    explicit NotAtmError(const std::string& what) : DomainError(what) {}
};

/// Gamma function evaluated exactly at a non-positive integer pole.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// Malformed configuration (truncation bounds, node counts, contour spec).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bsseries
