#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypsys {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double sq(double x) { return x * x; }

// Thrown when a Moebius map is evaluated at its pole.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a geometric construction cannot be realized
// (intersecting geodesics where a common perpendicular is required, etc.).
struct construction_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an enumeration exceeds its configured cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation cannot certify its result
// (e.g. a search bound too small to be conclusive).
struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// acosh with absorption of rounding just below 1: arguments in
// [1 - 1e-12, 1] clamp to 0, anything lower is a hard error.
inline double acosh_clamped(double x) {
    if (x >= 1.0) return std::acosh(x);
    if (x >= 1.0 - 1e-12) return 0.0;
    throw std::domain_error("acosh argument below 1: " + std::to_string(x));
}

// asin with the same absorption policy at |x| = 1.
inline double asin_clamped(double x) {
    if (std::fabs(x) <= 1.0) return std::asin(x);
    if (std::fabs(x) <= 1.0 + 1e-12) return x > 0 ? kPi / 2 : -kPi / 2;
    throw std::domain_error("asin argument beyond 1: " + std::to_string(x));
}

}  // namespace hypsys
