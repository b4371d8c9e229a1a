#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "hypsys/common.hpp"

// Upper half-plane model {x + iy : y > 0} with metric (dx^2 + dy^2)/y^2.
// Orientation-preserving isometries act as real fractional-linear maps.

namespace hypsys::halfplane {

struct HPoint {
    double re;
    double im;

    HPoint(double re_, double im_) : re(re_), im(im_) {
        if (!(im > 1e-300) || !std::isfinite(re) || !std::isfinite(im))
            throw std::domain_error("HPoint requires finite coordinates with im > 0");
    }
};

inline double distance(const HPoint& p, const HPoint& q) {
    const double d2 = sq(p.re - q.re) + sq(p.im - q.im);
    return acosh_clamped(1.0 + d2 / (2.0 * p.im * q.im));
}

// 2x2 real matrix with positive determinant acting by z -> (az+b)/(cz+d).
struct MoebiusMap {
    Eigen::Matrix2d m;

    explicit MoebiusMap(const Eigen::Matrix2d& mat) : m(mat) {
        if (!(m.determinant() > 0))
            throw std::domain_error("MoebiusMap requires positive determinant");
    }
    MoebiusMap(double a, double b, double c, double d)
        : MoebiusMap((Eigen::Matrix2d() << a, b, c, d).finished()) {}

    static MoebiusMap identity() { return {1, 0, 0, 1}; }

    // Elliptic rotation by theta about the point i.
    static MoebiusMap rotation_about_i(double theta) {
        const double c = std::cos(theta / 2), s = std::sin(theta / 2);
        return {c, s, -s, c};
    }

    // Hyperbolic translation by t along the imaginary axis (i -> i e^t).
    static MoebiusMap axis_translation(double t) {
        return {std::exp(t / 2), 0, 0, std::exp(-t / 2)};
    }

    double det() const { return m.determinant(); }
    double trace() const { return m.trace(); }

    MoebiusMap normalized() const {
        return MoebiusMap(Eigen::Matrix2d(m / std::sqrt(m.determinant())));
    }

    MoebiusMap inverse() const {
        return {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)};
    }

    MoebiusMap operator*(const MoebiusMap& o) const {
        return MoebiusMap(Eigen::Matrix2d(m * o.m));
    }

    HPoint operator()(const HPoint& p) const {
        const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
        const double den = sq(c * p.re + d) + sq(c * p.im);
        if (den < 1e-280)
            throw pole_error("Moebius map evaluated at its pole");
        const double re = ((a * p.re + b) * (c * p.re + d) + a * c * sq(p.im)) / den;
        const double im = p.im * det() / den;
        if (!std::isfinite(re) || !(im > 1e-300))
            throw pole_error("Moebius image not representable");
        return {re, im};
    }

    // Action on the boundary R u {inf}; infinity encoded as +inf.
    double boundary(double x) const {
        const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
        if (std::isinf(x)) return c != 0.0 ? a / c : std::numeric_limits<double>::infinity();
        const double den = c * x + d;
        if (den == 0.0) return std::numeric_limits<double>::infinity();
        return (a * x + b) / den;
    }
};

inline HPoint apply(const MoebiusMap& m, const HPoint& p) { return m(p); }

// Geodesic: a half-circle orthogonal to the real axis, or a vertical line.
struct Geodesic {
    bool is_vertical;
    double c;  // circle center, or the foot of the vertical line
    double r;  // circle radius; 0 for vertical lines

    static Geodesic circle(double center, double radius) {
        if (!(radius > 0)) throw std::domain_error("geodesic radius must be positive");
        return {false, center, radius};
    }
    static Geodesic vertical(double foot) { return {true, foot, 0.0}; }
};

// Geodesic through two distinct points.
inline Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
    const double dx = q.re - p.re;
    if (std::fabs(dx) < 1e-14 * (1.0 + std::fabs(p.re) + std::fabs(q.re)))
        return Geodesic::vertical(0.5 * (p.re + q.re));
    const double c = (sq(q.re) + sq(q.im) - sq(p.re) - sq(p.im)) / (2.0 * dx);
    return Geodesic::circle(c, std::hypot(p.re - c, p.im));
}

// Geodesic through p with initial tangent at Euclidean angle phi.
// The model is conformal, so phi is also the hyperbolic direction.
inline Geodesic geodesic_at(const HPoint& p, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    if (std::fabs(c) < 1e-13) return Geodesic::vertical(p.re);
    const double center = p.re + p.im * s / c;
    return Geodesic::circle(center, std::hypot(p.re - center, p.im));
}

inline bool contains(const Geodesic& g, const HPoint& p, double tol = 1e-9) {
    if (g.is_vertical) return std::fabs(p.re - g.c) <= tol;
    return std::fabs(std::hypot(p.re - g.c, p.im) - g.r) <= tol;
}

// Initial tangent angle at p of the geodesic from p to q.
inline double direction_angle(const HPoint& p, const HPoint& q) {
    const Geodesic g = geodesic_through(p, q);
    if (g.is_vertical) return q.im > p.im ? kPi / 2 : -kPi / 2;
    // tangent to the circle at p, oriented towards q
    const double tp = std::atan2(p.im, p.re - g.c);
    const double tq = std::atan2(q.im, q.re - g.c);
    double ang = std::atan2(std::cos(tp), -std::sin(tp));  // d/dt of c + r e^{it}
    if (tq < tp) ang += kPi;                               // going clockwise instead
    if (ang > kPi) ang -= 2 * kPi;
    return ang;
}

// Unsigned angle at p between the geodesics towards q and towards r.
inline double angle_between(const HPoint& p, const HPoint& q, const HPoint& r) {
    double d = direction_angle(p, q) - direction_angle(p, r);
    d = std::fmod(std::fabs(d), 2 * kPi);
    return d > kPi ? 2 * kPi - d : d;
}

// Image of a geodesic under an isometry, computed via its ideal feet.
inline Geodesic apply(const MoebiusMap& m, const Geodesic& g) {
    const double inf = std::numeric_limits<double>::infinity();
    const double f1 = g.is_vertical ? g.c : g.c - g.r;
    const double f2 = g.is_vertical ? inf : g.c + g.r;
    const double u = m.boundary(f1);
    const double v = m.boundary(f2);
    if (std::isinf(u)) return Geodesic::vertical(v);
    if (std::isinf(v)) return Geodesic::vertical(u);
    return Geodesic::circle(0.5 * (u + v), 0.5 * std::fabs(u - v));
}

// Point on g at arclength parameter s. For circles s = 0 is the apex;
// increasing s moves towards the foot c + r.
inline HPoint point_at(const Geodesic& g, double s) {
    if (g.is_vertical) return {g.c, std::exp(s)};
    const double theta = 2.0 * std::atan(std::exp(-s));
    return {g.c + g.r * std::cos(theta), g.r * std::sin(theta)};
}

// Point reached from p after distance `dist` along the geodesic leaving p
// in direction phi.
inline HPoint walk(const HPoint& p, double phi, double dist) {
    const Geodesic g = geodesic_at(p, phi);
    if (g.is_vertical) {
        const double sgn = std::sin(phi) >= 0 ? 1.0 : -1.0;
        return {p.re, p.im * std::exp(sgn * dist)};
    }
    const double theta0 = std::atan2(p.im, p.re - g.c);
    const double s0 = -std::log(std::tan(theta0 / 2.0));
    // tangent angle of increasing arclength parameter (theta decreasing)
    const double fwd = std::atan2(-std::cos(theta0), std::sin(theta0));
    double diff = std::remainder(phi - fwd, 2 * kPi);
    const double sgn = std::fabs(diff) < kPi / 2 ? 1.0 : -1.0;
    return point_at(g, s0 + sgn * dist);
}

// Geodesic through a point of g, perpendicular to g.
inline Geodesic perpendicular_at(const Geodesic& g, const HPoint& p) {
    if (g.is_vertical) return Geodesic::circle(g.c, p.im);
    // direction along g at p, rotated by pi/2
    const double tp = std::atan2(p.im, p.re - g.c);
    const double ang = std::atan2(std::cos(tp), -std::sin(tp)) + kPi / 2;
    return geodesic_at(p, ang);
}

// Intersection point of two geodesics in the open half-plane.
inline HPoint intersection(const Geodesic& g1, const Geodesic& g2) {
    if (g1.is_vertical && g2.is_vertical)
        throw construction_error("vertical geodesics do not intersect");
    double x, y2;
    if (g1.is_vertical || g2.is_vertical) {
        const Geodesic& v = g1.is_vertical ? g1 : g2;
        const Geodesic& c = g1.is_vertical ? g2 : g1;
        x = v.c;
        y2 = sq(c.r) - sq(x - c.c);
    } else {
        if (std::fabs(g1.c - g2.c) < 1e-300)
            throw construction_error("concentric geodesics do not intersect");
        x = (sq(g1.r) - sq(g2.r) + sq(g2.c) - sq(g1.c)) / (2.0 * (g2.c - g1.c));
        y2 = sq(g1.r) - sq(x - g1.c);
    }
    if (!(y2 > 0))
        throw construction_error("geodesics do not intersect in the half-plane");
    return {x, std::sqrt(y2)};
}

// Distance from p to the full geodesic g (0 if p lies on g).
inline double point_to_geodesic_distance(const HPoint& p, const Geodesic& g) {
    if (g.is_vertical) return std::asinh(std::fabs(p.re - g.c) / p.im);
    // send g to the imaginary axis by z -> (z - (c-r)) / ((c+r) - z)
    const MoebiusMap m{1.0, -(g.c - g.r), -1.0, g.c + g.r};
    const HPoint w = m(p);
    return std::asinh(std::fabs(w.re) / w.im);
}

namespace detail {
// Feet of g2 after the map sending g1's feet to (0, inf); both results
// carry the same sign exactly when the geodesics are disjoint.
inline std::pair<double, double> normalized_feet(const Geodesic& g1, const Geodesic& g2) {
    if (g1.is_vertical && g2.is_vertical)
        throw construction_error("vertical geodesics are asymptotic at infinity");
    const double inf = std::numeric_limits<double>::infinity();
    const double p1 = g1.is_vertical ? g1.c : g1.c - g1.r;
    const double q1 = g1.is_vertical ? inf : g1.c + g1.r;
    const double p2 = g2.is_vertical ? g2.c : g2.c - g2.r;
    const double q2 = g2.is_vertical ? inf : g2.c + g2.r;
    auto send = [&](double x) -> double {
        // z -> (z - p1)/(q1 - z), det q1 - p1 > 0; q1 = inf degenerates to z - p1
        if (std::isinf(q1)) return std::isinf(x) ? inf : x - p1;
        if (std::isinf(x)) return -1.0;
        const double den = q1 - x;
        if (den == 0.0) return inf;
        return (x - p1) / den;
    };
    return {send(p2), send(q2)};
}
}  // namespace detail

// Length of the unique common perpendicular between disjoint geodesics.
inline double common_perpendicular_length(const Geodesic& g1, const Geodesic& g2) {
    auto [u, v] = detail::normalized_feet(g1, g2);
    if (std::isinf(u) || std::isinf(v))
        throw construction_error("geodesics share an ideal endpoint");
    if (u == 0.0 || v == 0.0)
        throw construction_error("geodesics are asymptotic");
    if (u * v < 0)
        throw construction_error("geodesics intersect");
    const double cosh_d = std::fabs(u + v) / std::fabs(u - v);
    return acosh_clamped(cosh_d);
}

// The common perpendicular itself.
inline Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
    if (g1.is_vertical && g2.is_vertical)
        throw construction_error("vertical geodesics are asymptotic at infinity");
    common_perpendicular_length(g1, g2);  // validates disjointness
    if (g1.is_vertical || g2.is_vertical) {
        const Geodesic& v = g1.is_vertical ? g1 : g2;
        const Geodesic& c = g1.is_vertical ? g2 : g1;
        const double r2 = sq(v.c - c.c) - sq(c.r);
        return Geodesic::circle(v.c, std::sqrt(r2));
    }
    if (std::fabs(g2.c - g1.c) < 1e-12 * (1.0 + std::fabs(g1.c)))
        return Geodesic::vertical(g1.c);  // concentric circles
    const double center = (sq(g2.c) - sq(g1.c) + sq(g1.r) - sq(g2.r)) / (2.0 * (g2.c - g1.c));
    const double r2 = sq(center - g1.c) - sq(g1.r);
    return Geodesic::circle(center, std::sqrt(r2));
}

// Intermediate data of the two-right-angle quadrilateral construction:
// top side from i to i e^c, lateral geodesics leaving at angles alpha and
// beta, normalized so the beta-side circle becomes a vertical line.
struct BirectangleTrace {
    Geodesic side_alpha;   // half-circle through i at angle alpha
    Geodesic side_beta;    // half-circle through i e^c at angle beta
    double f_prime;        // image of the beta-circle's far foot
    double c_prime;        // image of the alpha-circle's near foot
    double d_prime;        // image of the alpha-circle's far foot
    double p_center;       // center of the image half-circle
    double rho;            // its radius
    double base_length;    // the common perpendicular length
};

inline BirectangleTrace birectangle_base_trace(double c, double alpha, double beta) {
    if (c <= 0) throw std::domain_error("top side must be positive");
    if (alpha <= 0 || alpha > kPi / 2 || beta <= 0 || beta > kPi / 2)
        throw std::domain_error("angles out of (0, pi/2]");
    if (alpha > kPi / 2 - 1e-12 && beta > kPi / 2 - 1e-12)
        throw construction_error("both angles right: degenerate quadrilateral");
    const double ec = std::exp(c);
    const double a_center = 1.0 / std::tan(alpha);
    const double a_radius = 1.0 / std::sin(alpha);
    const double b_center = -ec / std::tan(beta);
    const double b_radius = ec / std::sin(beta);

    const double e_foot = b_center - b_radius;  // sent to infinity
    auto send = [&](double x) { return -1.0 / (x - e_foot); };
    BirectangleTrace t{Geodesic::circle(a_center, a_radius),
                       Geodesic::circle(b_center, b_radius),
                       send(b_center + b_radius),
                       send(a_center - a_radius),
                       send(a_center + a_radius),
                       0, 0, 0};
    t.p_center = 0.5 * (t.c_prime + t.d_prime);
    t.rho = 0.5 * std::fabs(t.c_prime - t.d_prime);
    const double cosh_d = std::fabs(t.f_prime - t.p_center) / t.rho;
    if (cosh_d < 1.0 - 1e-12)
        throw construction_error("lateral sides admit no common perpendicular");
    t.base_length = acosh_clamped(cosh_d);
    return t;
}

// Base of the two-right-angle quadrilateral computed purely by half-plane
// construction; independent of the closed form it validates.
inline double birectangle_base_oracle(double c, double alpha, double beta) {
    return birectangle_base_trace(c, alpha, beta).base_length;
}

}  // namespace hypsys::halfplane
