#pragma once

// Test-only oracles: sampling minimizers, golden-section search, numeric
// integration of the half-plane metric, and random constructions. These
// stay independent of the closed forms they are used to check.

#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "hypsys/halfplane.hpp"

namespace oracles {

using hypsys::halfplane::Geodesic;
using hypsys::halfplane::HPoint;
using hypsys::halfplane::MoebiusMap;

inline double golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double tol = 1e-11) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

inline double central_difference(const std::function<double(double)>& f,
                                 double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Golden section in extended precision, for argmin assertions tighter than
// the ~sqrt(eps) basin width of a double-precision C^2 minimum.
inline double golden_section_min_l(const std::function<long double(long double)>& f,
                                   double lo, double hi) {
    const long double phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double a = lo, b = hi;
    long double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    long double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-12L) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1; x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2; x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return static_cast<double>(0.5L * (a + b));
}

// Arc length of the geodesic segment from p to q, integrating
// sqrt(dx^2 + dy^2)/y along the connecting circle or vertical line
// with composite Simpson. Independent of the distance formula.
inline double integrate_metric(const HPoint& p, const HPoint& q, int panels = 20000) {
    const Geodesic g = hypsys::halfplane::geodesic_through(p, q);
    std::function<std::pair<double, double>(double)> curve;  // t -> (x, y)
    double t0, t1;
    if (g.is_vertical) {
        t0 = p.im; t1 = q.im;
        curve = [&](double t) { return std::make_pair(g.c, t); };
    } else {
        t0 = std::atan2(p.im, p.re - g.c);
        t1 = std::atan2(q.im, q.re - g.c);
        curve = [&](double t) {
            return std::make_pair(g.c + g.r * std::cos(t), g.r * std::sin(t));
        };
    }
    auto speed = [&](double t) {
        const double h = 1e-6;
        auto [x1, y1] = curve(t - h);
        auto [x2, y2] = curve(t + h);
        auto [x, y] = curve(t);
        return std::hypot((x2 - x1) / (2 * h), (y2 - y1) / (2 * h)) / y;
    };
    double sum = speed(t0) + speed(t1);
    const double dt = (t1 - t0) / panels;
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * speed(t0 + i * dt);
    return std::fabs(sum * dt / 3.0);
}

// Distance from p to g by minimizing over sampled points of g.
inline double sampled_point_to_geodesic(const HPoint& p, const Geodesic& g) {
    auto f = [&](double s) { return hypsys::halfplane::distance(p, point_at(g, s)); };
    double best_s = 0, best = f(0);
    for (double s = -30; s <= 30; s += 0.05) {
        const double v = f(s);
        if (v < best) { best = v; best_s = s; }
    }
    const double s = golden_section_min(f, best_s - 0.1, best_s + 0.1);
    return f(s);
}

// Distance between disjoint geodesics by nested minimization.
inline double sampled_geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
    auto inner = [&](double s) {
        return sampled_point_to_geodesic(point_at(g1, s), g2);
    };
    double best_s = 0, best = inner(0);
    for (double s = -20; s <= 20; s += 0.1) {
        const double v = inner(s);
        if (v < best) { best = v; best_s = s; }
    }
    const double s = golden_section_min(inner, best_s - 0.2, best_s + 0.2, 1e-10);
    return inner(s);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    HPoint point(double spread = 2.0) {
        return {uniform(-spread, spread), std::exp(uniform(-spread / 2, spread / 2))};
    }
    MoebiusMap moebius() {
        return MoebiusMap::rotation_about_i(uniform(0, 2 * hypsys::kPi)) *
               MoebiusMap::axis_translation(uniform(-1.5, 1.5)) *
               MoebiusMap::rotation_about_i(uniform(0, 2 * hypsys::kPi));
    }
};

}  // namespace oracles
