#pragma once

#include <cmath>
#include <stdexcept>

#include "hypsys/common.hpp"

// Closed-form hyperbolic trigonometry kernel: right triangles, general
// triangles, trirectangles (Lambert quadrilaterals) and quadrilaterals
// with two right angles. All angles in radians, all lengths hyperbolic.
// Double precision throughout; relative error stays below ~1e-12 for
// arguments of magnitude up to about 10.

namespace hypsys::hyptrig {

// cosh(2x) through the doubling identity 2 cosh^2 x - 1.
// Agrees with 2 sinh^2 x + 1 to a few ulp.
inline double cosh_double(double x) {
    return 2.0 * sq(std::cosh(x)) - 1.0;
}

// Hypotenuse of a right triangle with legs a, b: cosh c = cosh a cosh b.
inline double right_triangle_hypotenuse(double a, double b) {
    if (a < 0 || b < 0) throw std::domain_error("leg lengths must be non-negative");
    return acosh_clamped(std::cosh(a) * std::cosh(b));
}

// Angle opposite leg a in a right triangle with hypotenuse c:
// sinh a = sin(alpha) sinh c. Requires 0 < a < c.
inline double right_triangle_angle(double a, double c) {
    const double ratio = std::sinh(a) / std::sinh(c);
    if (ratio > 1.0 + 1e-12)
        throw std::domain_error("leg longer than hypotenuse");
    return asin_clamped(ratio);
}

// Companion relation cos(alpha) = cosh a sin(beta) for the same triangle,
// evaluated as stated (returns the cosine, not the angle).
inline double right_triangle_cos_angle(double a, double beta) {
    return std::cosh(a) * std::sin(beta);
}

// General hyperbolic cosine law:
// cosh c = -sinh a sinh b cos C + cosh a cosh b.
inline double triangle_cosine_law(double a, double b, double angle_c) {
    if (a <= 0 || b <= 0) throw std::domain_error("sides must be positive");
    if (angle_c <= 0 || angle_c >= kPi) throw std::domain_error("angle out of (0, pi)");
    return acosh_clamped(std::cosh(a) * std::cosh(b) -
                         std::sinh(a) * std::sinh(b) * std::cos(angle_c));
}

// Sine law: sinh a / sin A = sinh b / sin B, solved for b.
inline double triangle_sine_law(double a, double angle_a, double angle_b) {
    if (a <= 0) throw std::domain_error("side must be positive");
    if (angle_a <= 0 || angle_a >= kPi || angle_b <= 0 || angle_b >= kPi)
        throw std::domain_error("angles out of (0, pi)");
    return std::asinh(std::sinh(a) * std::sin(angle_b) / std::sin(angle_a));
}

// Trirectangle relations. Convention: three right angles, acute angle phi
// at the fourth vertex; alpha and beta are the sides adjacent to phi,
// a is the side opposite alpha and b the side opposite beta.

// cosh a = cosh(alpha) sin(phi)
inline double trirect_cosh_a(double alpha, double phi) {
    return std::cosh(alpha) * std::sin(phi);
}

// sinh(alpha) = sinh(a) cosh(beta)
inline double trirect_sinh_alpha(double a, double beta) {
    return std::sinh(a) * std::cosh(beta);
}

// sinh(alpha) = coth(b) cot(phi)
inline double trirect_sinh_alpha_cot(double b, double phi) {
    const double v = (1.0 / std::tanh(b)) * (1.0 / std::tan(phi));
    if (v < 0)
        throw std::domain_error("coth(b) cot(phi) negative: no such trirectangle");
    return v;
}

// Quadrilateral with right angles at both ends of the base d, lateral
// sides a and b, top side c: cosh c = cosh d cosh a cosh b - sinh a sinh b.
inline double birectangle_diagonal(double a, double b, double d) {
    if (a < 0 || b < 0 || d < 0) throw std::domain_error("sides must be non-negative");
    return acosh_clamped(std::cosh(d) * std::cosh(a) * std::cosh(b) -
                         std::sinh(a) * std::sinh(b));
}

// Same quadrilateral solved for the base from the top side and the two
// top angles: cosh d = sin(alpha) sin(beta) cosh c - cos(alpha) cos(beta).
// Fails when no such quadrilateral exists.
inline double birectangle_base(double c, double alpha, double beta) {
    if (c <= 0) throw std::domain_error("top side must be positive");
    if (alpha <= 0 || alpha > kPi / 2 || beta <= 0 || beta > kPi / 2)
        throw std::domain_error("angles out of (0, pi/2]");
    return acosh_clamped(std::sin(alpha) * std::sin(beta) * std::cosh(c) -
                         std::cos(alpha) * std::cos(beta));
}

}  // namespace hypsys::hyptrig
