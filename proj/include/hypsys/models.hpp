#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypsys/common.hpp"
#include "hypsys/halfplane.hpp"
#include "hypsys/hyptrig.hpp"

// Polygon models of the genus-g surfaces with cyclic symmetry of order 4g
// and 4g+2:
//   P1     regular 4g-gon, angle sum 2pi, opposite edges identified
//   P2     regular (4g+2)-gon, angle sum 4pi, opposite edges identified
//   P2star dual domain of P2: two regular (2g+1)-gons glued along an edge
// The parameter pair (a, b) is the half central angle per edge and the
// half vertex angle of the relevant polygon.

namespace hypsys::models {

enum class ModelKind { P1, P2, P2Star };

inline const char* name(ModelKind k) {
    switch (k) {
        case ModelKind::P1: return "P1";
        case ModelKind::P2: return "P2";
        case ModelKind::P2Star: return "P2star";
    }
    return "?";
}

struct AnglePair {
    double a;
    double b;
    int genus;
    ModelKind kind;
};

inline AnglePair angles(ModelKind kind, int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be at least 2");
    switch (kind) {
        case ModelKind::P1: {
            const double v = kPi / (4.0 * genus);
            return {v, v, genus, kind};
        }
        case ModelKind::P2: {
            const double v = 2.0 * kPi / (4.0 * genus + 2.0);
            return {v / 2.0, v, genus, kind};
        }
        case ModelKind::P2Star: {
            const double v = 2.0 * kPi / (4.0 * genus + 2.0);
            return {v, v / 2.0, genus, kind};
        }
    }
    throw std::invalid_argument("unknown model kind");
}

// Vertex count of the polygon whose vertex A carries the diameter:
// the full polygon for P1 and P2, one (2g+1)-gon lobe for P2star.
inline int vertex_count(ModelKind kind, int genus) {
    switch (kind) {
        case ModelKind::P1: return 4 * genus;
        case ModelKind::P2: return 4 * genus + 2;
        case ModelKind::P2Star: return 2 * genus + 1;
    }
    return 0;
}

// Lengths around one corner of the model. O is the polygon center, A the
// vertex on the chosen diameter, D the midpoint of an edge at A, H the
// intersection of the diameter with the geodesic joining the midpoints of
// the two edges at A. half_systole is |DE|, half the candidate geodesic.
struct PolygonMetrics {
    double od, ad, oa, dh, de, ah;
    double half_systole;
    double cosh_od, cosh_ad, cosh_oa;
    double sinh_dh, cosh_dh, cosh_de, cosh_ah, sinh_ah;
};

inline PolygonMetrics metrics(const AnglePair& ap) {
    const double ca = std::cos(ap.a), sa = std::sin(ap.a);
    const double cb = std::cos(ap.b), sb = std::sin(ap.b);
    if (!(sq(ca) > sq(sb)))
        throw std::domain_error("degenerate polygon: cos^2 a <= sin^2 b");
    PolygonMetrics m{};
    m.cosh_od = cb / sa;
    m.cosh_ad = ca / sb;
    m.cosh_oa = (ca / sa) * (cb / sb);
    m.sinh_dh = std::sqrt(sq(ca) - sq(sb));
    m.cosh_dh = std::sqrt(sq(ca) + sq(cb));
    m.cosh_de = 2.0 * (sq(ca) - sq(sb)) + 1.0;
    m.cosh_ah = ca / (sb * m.cosh_dh);
    m.sinh_ah = (cb / sb) * std::sqrt((sq(ca) - sq(sb)) / (sq(ca) + sq(cb)));
    m.od = acosh_clamped(m.cosh_od);
    m.ad = acosh_clamped(m.cosh_ad);
    m.oa = acosh_clamped(m.cosh_oa);
    m.dh = std::asinh(m.sinh_dh);
    m.de = acosh_clamped(m.cosh_de);
    m.ah = acosh_clamped(m.cosh_ah);
    m.half_systole = m.de;
    return m;
}

// Length of the candidate shortest geodesic: 2 arccosh(1 + cos 2a + cos 2b).
inline double candidate_systole(ModelKind kind, int genus) {
    const AnglePair ap = angles(kind, genus);
    return 2.0 * acosh_clamped(1.0 + std::cos(2.0 * ap.a) + std::cos(2.0 * ap.b));
}

// cot a cot b, the cosh of the circumradius |OA|; must exceed 1.
inline double circumradius_check(const AnglePair& ap) {
    return (std::cos(ap.a) / std::sin(ap.a)) * (std::cos(ap.b) / std::sin(ap.b));
}

// ---------------------------------------------------------------------------
// Half-plane placement. The polygon center O sits at i, the diameter AA'
// runs along the imaginary axis, and A = i e^{R} with R the circumradius.
// Directions are measured at O: polar_point(0, r) is straight up the axis.
// ---------------------------------------------------------------------------

struct PolygonFrame {
    AnglePair ap;
    PolygonMetrics pm;
    int n;                  // vertex count of the polygon carrying A
    double circumradius;    // |OA|
    double apothem;         // |OD|
    double oh;              // |OH|
};

inline halfplane::HPoint polar_point(double direction, double r) {
    using halfplane::MoebiusMap;
    return MoebiusMap::rotation_about_i(direction)(halfplane::HPoint{0.0, std::exp(r)});
}

inline PolygonFrame frame(const AnglePair& ap) {
    PolygonFrame f{ap, metrics(ap), vertex_count(ap.kind, ap.genus), 0, 0, 0};
    f.circumradius = f.pm.oa;
    f.apothem = f.pm.od;
    f.oh = acosh_clamped(f.pm.cosh_od / f.pm.cosh_dh);
    return f;
}

// Vertex k, at direction 2ka from the diameter vertex A = vertex 0.
inline halfplane::HPoint vertex(const PolygonFrame& f, int k) {
    return polar_point(2.0 * k * f.ap.a, f.circumradius);
}

// Midpoint of side s (between vertices s and s+1).
inline halfplane::HPoint side_midpoint(const PolygonFrame& f, int s) {
    return polar_point((2.0 * s + 1.0) * f.ap.a, f.apothem);
}

// Full geodesic containing side s.
inline halfplane::Geodesic side_line(const PolygonFrame& f, int s) {
    return halfplane::geodesic_through(vertex(f, s), vertex(f, s + 1));
}

// The diameter AA' is the imaginary axis.
inline halfplane::Geodesic diameter(const PolygonFrame&) {
    return halfplane::Geodesic::vertical(0.0);
}

// Foot of the candidate geodesic on the diameter, between O and A.
inline halfplane::HPoint point_h(const PolygonFrame& f) {
    return {0.0, std::exp(f.oh)};
}

}  // namespace hypsys::models
