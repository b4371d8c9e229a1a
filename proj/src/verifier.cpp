#include "hypsys/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypsys/hyptrig.hpp"

namespace hypsys::verifier {

namespace hp = hypsys::halfplane;
using models::AnglePair;
using models::PolygonFrame;

const char* check_name(CheckId c) {
    switch (c) {
        case CheckId::VertexDiameter: return "VERTEX_DIAMETER";
        case CheckId::EdgeDiameter: return "EDGE_DIAMETER";
        case CheckId::OhEdgeAbj: return "OH_EDGE_ABJ";
        case CheckId::NonadjEdges: return "NONADJ_EDGES";
        case CheckId::B1C3Diameter: return "B1C3_DIAMETER";
        case CheckId::C1C2Diameter: return "C1C2_DIAMETER";
        case CheckId::CenterEdge: return "CENTER_EDGE";
        case CheckId::X2Diameter: return "X2_DIAMETER";
        case CheckId::X3Diameter: return "X3_DIAMETER";
        case CheckId::XX3Separation: return "X_X3_SEPARATION";
        case CheckId::FtMinimum: return "FT_MINIMUM";
        case CheckId::B1C4Perpendicular: return "B1C4_PERPENDICULAR";
    }
    return "?";
}

const char* check_cli_name(CheckId c) {
    switch (c) {
        case CheckId::VertexDiameter: return "vertex-diameter";
        case CheckId::EdgeDiameter: return "edge-diameter";
        case CheckId::OhEdgeAbj: return "oh-edge";
        case CheckId::NonadjEdges: return "nonadj-edges";
        case CheckId::B1C3Diameter: return "b1c3-diameter";
        case CheckId::C1C2Diameter: return "c1c2-diameter";
        case CheckId::CenterEdge: return "center-edge";
        case CheckId::X2Diameter: return "x2-diameter";
        case CheckId::X3Diameter: return "x3-diameter";
        case CheckId::XX3Separation: return "x-x3-separation";
        case CheckId::FtMinimum: return "ft-minimum";
        case CheckId::B1C4Perpendicular: return "b1c4-perpendicular";
    }
    return "?";
}

std::optional<CheckId> check_from_cli_name(const std::string& s) {
    for (const CheckId c : all_checks())
        if (s == check_cli_name(c)) return c;
    return std::nullopt;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Unasserted: return "UNASSERTED";
        case Status::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

const char* scale_name(Scale s) {
    switch (s) {
        case Scale::Cosh: return "cosh";
        case Scale::Sinh: return "sinh";
        case Scale::Length: return "length";
    }
    return "?";
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Greater: return "greater";
        case Relation::Less: return "less";
        case Relation::Equal: return "equal";
    }
    return "?";
}

std::vector<CheckId> all_checks() {
    std::vector<CheckId> v;
    for (int i = 0; i < kCheckCount; ++i) v.push_back(static_cast<CheckId>(i));
    return v;
}

int threshold_genus(CheckId c, ModelKind kind) {
    // columns: P1, P2, P2star; the narrowest range claimed per check
    static constexpr int table[kCheckCount][3] = {
        {4, 7, 3},  // VertexDiameter
        {3, 2, 4},  // EdgeDiameter
        {4, 7, 3},  // OhEdgeAbj
        {4, 7, 3},  // NonadjEdges
        {4, 7, 3},  // B1C3Diameter
        {4, 7, 3},  // C1C2Diameter
        {4, 4, 4},  // CenterEdge
        {4, 7, 3},  // X2Diameter
        {4, 7, 3},  // X3Diameter
        {4, 7, 4},  // XX3Separation
        {4, 7, 4},  // FtMinimum
        {4, 7, 3},  // B1C4Perpendicular
    };
    const int col = kind == ModelKind::P1 ? 0 : kind == ModelKind::P2 ? 1 : 2;
    return table[static_cast<int>(c)][col];
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

MarginRecord make_record(CheckId check, ModelKind kind, int genus, int index,
                         double lhs, double threshold, Scale scale,
                         Relation relation, double guard,
                         bool force_unasserted = false) {
    MarginRecord r;
    r.check = check;
    r.kind = kind;
    r.genus = genus;
    r.index = index;
    r.lhs = lhs;
    r.threshold = threshold;
    r.scale = scale;
    r.relation = relation;
    switch (relation) {
        case Relation::Greater: r.margin = lhs - threshold; break;
        case Relation::Less: r.margin = threshold - lhs; break;
        case Relation::Equal: r.margin = kEqualityTol - std::fabs(lhs - threshold); break;
    }
    const bool asserted = !force_unasserted && genus >= threshold_genus(check, kind);
    if (relation == Relation::Equal) {
        r.pass = r.margin > 0;
        r.status = !asserted ? Status::Unasserted : r.pass ? Status::Pass : Status::Fail;
    } else {
        r.pass = r.margin > guard;
        if (!asserted)
            r.status = Status::Unasserted;
        else if (r.margin > guard)
            r.status = Status::Pass;
        else if (r.margin < -guard)
            r.status = Status::Fail;
        else
            r.status = Status::Indeterminate;
    }
    return r;
}

MarginRecord error_record(CheckId check, ModelKind kind, int genus, int index) {
    MarginRecord r;
    r.check = check;
    r.kind = kind;
    r.genus = genus;
    r.index = index;
    r.lhs = r.threshold = r.margin = kNan;
    r.pass = false;
    r.status = genus >= threshold_genus(check, kind) ? Status::Fail : Status::Unasserted;
    return r;
}

struct Quantities {
    AnglePair ap;
    models::PolygonMetrics pm;
    double sin_a, cos_a, sin_b, cos_b;
    double cosh_h, sinh_h, h;
};

Quantities quantities(ModelKind kind, int genus) {
    Quantities q{models::angles(kind, genus), {}, 0, 0, 0, 0, 0, 0, 0};
    q.pm = models::metrics(q.ap);
    q.sin_a = std::sin(q.ap.a);
    q.cos_a = std::cos(q.ap.a);
    q.sin_b = std::sin(q.ap.b);
    q.cos_b = std::cos(q.ap.b);
    q.cosh_h = q.pm.cosh_de;
    q.sinh_h = std::sqrt(sq(q.cosh_h) - 1.0);
    q.h = q.pm.de;
    return q;
}

double x3_cosh(const AnglePair& ap) {
    const double cot_ab =
        (std::cos(ap.a) / std::sin(ap.a)) * (std::cos(ap.b) / std::sin(ap.b));
    return cot_ab * std::sin(4 * ap.a) * std::sin(4 * ap.b) -
           std::cos(4 * ap.a) * std::cos(4 * ap.b);
}

// The quadrilateral behind the f(t) analysis: top side |AO'| = circumradius
// with angles 4b at A and 4a at O' (roles of a and b swapped when b < a, so
// the larger half-angle sits at the top-left vertex). Realized explicitly in
// the half-plane to obtain the lateral sides.
struct FtConfig {
    double u;        // |A R1| along the diameter line
    double v;        // |O' R2| along the far diameter line
    double base;     // |R1 R2|
    double cosh_base;
    double tstar;    // (u - v)/2, the unconstrained minimizer of f
    double f_min;    // f(tstar)
};

double ft_f(const FtConfig& c, double t) {
    return c.cosh_base * std::cosh(c.u - t) * std::cosh(c.v + t) -
           std::sinh(c.u - t) * std::sinh(c.v + t);
}

// f carries a constant term of order cosh(u+v), so derivative signals need
// extended precision once the genus grows.
long double ft_f_l(const FtConfig& c, long double t) {
    return static_cast<long double>(c.cosh_base) * std::cosh(c.u - t) *
               std::cosh(c.v + t) -
           std::sinh(c.u - t) * std::sinh(c.v + t);
}

FtConfig ft_configuration(ModelKind kind, int genus) {
    const AnglePair ap = models::angles(kind, genus);
    const double aa = std::min(ap.a, ap.b), bb = std::max(ap.a, ap.b);
    const double alpha = 4 * bb, beta = 4 * aa;
    if (alpha >= kPi / 2)
        throw construction_error("top angle 4b not acute at this genus");
    const double c = acosh_clamped(models::circumradius_check(ap));
    const double ec = std::exp(c);
    const hp::Geodesic side1 =
        hp::Geodesic::circle(std::cos(alpha) / std::sin(alpha), 1.0 / std::sin(alpha));
    const hp::Geodesic side2 =
        hp::Geodesic::circle(-ec * std::cos(beta) / std::sin(beta), ec / std::sin(beta));
    const hp::Geodesic base = hp::common_perpendicular(side1, side2);
    const hp::HPoint r1 = hp::intersection(base, side1);
    const hp::HPoint r2 = hp::intersection(base, side2);
    FtConfig cfg{};
    cfg.u = hp::distance(hp::HPoint{0.0, 1.0}, r1);
    cfg.v = hp::distance(hp::HPoint{0.0, ec}, r2);
    cfg.base = hp::distance(r1, r2);
    cfg.cosh_base = std::cosh(cfg.base);
    // the realized base must match the closed form for the same quadrilateral
    if (std::fabs(cfg.cosh_base - x3_cosh(ap)) > 1e-8 * x3_cosh(ap))
        throw construction_error("quadrilateral base mismatch");
    cfg.tstar = (cfg.u - cfg.v) / 2.0;
    cfg.f_min = ft_f(cfg, cfg.tstar);
    return cfg;
}

// Extended precision keeps the flat basin of the C^2 minimum resolvable
// below 1e-9; in plain double the argmin is only determined to ~1e-8.
double golden_min_arg(const FtConfig& c, double lo, double hi) {
    const long double phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double a = lo, b = hi;
    long double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    long double f1 = ft_f_l(c, x1), f2 = ft_f_l(c, x2);
    while (b - a > 1e-12L) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1; x1 = b - phi * (b - a); f1 = ft_f_l(c, x1);
        } else {
            a = x1; x1 = x2; f1 = f2; x2 = a + phi * (b - a); f2 = ft_f_l(c, x2);
        }
    }
    return static_cast<double>(0.5L * (a + b));
}

}  // namespace

MarginRecord check_vertex_diameter(ModelKind kind, int genus, int k, double guard) {
    const Quantities q = quantities(kind, genus);
    const int n = models::vertex_count(kind, genus);
    if (k < 1 || k > n / 4)
        throw std::invalid_argument("vertex index out of 1..floor(n/4)");
    const double lhs =
        std::sqrt(sq(q.pm.cosh_oa) - 1.0) * std::sin(2.0 * k * q.ap.a);
    return make_record(CheckId::VertexDiameter, kind, genus, k, lhs, q.sinh_h,
                       Scale::Sinh, Relation::Greater, guard);
}

MarginRecord check_edge_diameter(ModelKind kind, int genus, int k, double guard) {
    const Quantities q = quantities(kind, genus);
    const double beta = (2.0 * k - 1.0) * q.ap.a;
    if (k < 1 || beta >= kPi)
        throw std::invalid_argument("edge ordinal out of range");
    const double lhs = q.cos_b * std::sin(beta) / q.sin_a;
    const bool obtuse = beta > kPi / 2 + 1e-12;
    Relation rel = Relation::Greater;
    if (k <= 2) rel = (k == 2 && kind == ModelKind::P2) ? Relation::Equal : Relation::Less;
    return make_record(CheckId::EdgeDiameter, kind, genus, k, lhs, q.cosh_h,
                       Scale::Cosh, rel, guard, obtuse);
}

MarginRecord check_oh_edge(ModelKind kind, int genus, int j, double guard) {
    if (j < 1 || j > 3) throw std::invalid_argument("edge index j must be 1..3");
    const Quantities q = quantities(kind, genus);
    const double lhs = std::sin((2.0 * j - 1.0) * q.ap.b) * q.pm.sinh_ah;
    return make_record(CheckId::OhEdgeAbj, kind, genus, j, lhs, q.sinh_h,
                       Scale::Sinh, j == 3 ? Relation::Greater : Relation::Less,
                       guard);
}

MarginRecord check_nonadjacent_edges(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    const double edge_cosh = 2.0 * sq(q.cos_a) / sq(q.sin_b) - 1.0;
    const double lhs =
        edge_cosh * sq(std::sin(2 * q.ap.b)) - sq(std::cos(2 * q.ap.b));
    return make_record(CheckId::NonadjEdges, kind, genus, 0, lhs, q.cosh_h,
                       Scale::Cosh, Relation::Greater, guard);
}

MarginRecord check_b1c3(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    const double edge_cosh = 2.0 * sq(q.cos_a) / sq(q.sin_b) - 1.0;
    const double lhs = q.sin_b * std::sin(4 * q.ap.b) * edge_cosh -
                       q.cos_b * std::cos(4 * q.ap.b);
    return make_record(CheckId::B1C3Diameter, kind, genus, 0, lhs, q.cosh_h,
                       Scale::Cosh, Relation::Greater, guard);
}

MarginRecord check_c1c2(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    const double lhs = q.pm.cosh_oa * std::sin(4 * q.ap.a) * std::sin(3 * q.ap.b) -
                       std::cos(4 * q.ap.a) * std::cos(3 * q.ap.b);
    return make_record(CheckId::C1C2Diameter, kind, genus, 0, lhs, q.cosh_h,
                       Scale::Cosh, Relation::Greater, guard);
}

MarginRecord check_center_edge(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    return make_record(CheckId::CenterEdge, kind, genus, 0, q.pm.cosh_od, q.cosh_h,
                       Scale::Cosh, Relation::Greater, guard);
}

MarginRecord check_x2(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    const double edge_cosh = 2.0 * sq(q.cos_a) / sq(q.sin_b) - 1.0;
    const double cosh_r12 = edge_cosh * std::sin(2 * q.ap.b) * q.sin_b -
                            std::cos(2 * q.ap.b) * q.cos_b;
    const double r12 = acosh_clamped(std::max(1.0, cosh_r12));
    return make_record(CheckId::X2Diameter, kind, genus, 0, 2.0 * r12, q.h,
                       Scale::Length, Relation::Greater, guard);
}

MarginRecord check_x3_diameter(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    return make_record(CheckId::X3Diameter, kind, genus, 0, x3_cosh(q.ap), q.cosh_h,
                       Scale::Cosh, Relation::Greater, guard);
}

MarginRecord check_x_x3_separation(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    const double aa = std::min(q.ap.a, q.ap.b), bb = std::max(q.ap.a, q.ap.b);
    const double cosh_r = x3_cosh(q.ap);
    if (cosh_r <= 1.0) return error_record(CheckId::XX3Separation, kind, genus, 0);
    const double cosh_half = std::sqrt((cosh_r + 1.0) / 2.0);
    const double sinh_half = std::sqrt((cosh_r - 1.0) / 2.0);
    const double cot_4b = std::cos(4 * bb) / std::sin(4 * bb);
    const double sinh_r1s1 = (cosh_half / sinh_half) * cot_4b;
    if (sinh_r1s1 < 0) return error_record(CheckId::XX3Separation, kind, genus, 0);
    const double r1s1 = std::asinh(sinh_r1s1);
    const double ao = acosh_clamped((std::cos(aa) / std::sin(aa)) *
                                    (std::cos(bb) / std::sin(bb)));
    const double cosh_r1y = std::cosh(r1s1 - ao / 2.0);
    const double yy0 = std::asinh(sinh_half * cosh_r1y);
    MarginRecord r = make_record(CheckId::XX3Separation, kind, genus, 0, yy0, q.h,
                                 Scale::Length, Relation::Greater, guard);
    // the minimum of the corner-distance profile sits at t* (derivative
    // changes sign there); verified by finite differences
    if (r.status == Status::Pass) {
        try {
            const FtConfig cfg = ft_configuration(kind, genus);
            const double d = 0.05;
            auto fd = [&](long double t) {
                return static_cast<double>(
                    (ft_f_l(cfg, t + 1e-6L) - ft_f_l(cfg, t - 1e-6L)) / 2e-6L);
            };
            if (!(fd(cfg.tstar - d) < 0 && fd(cfg.tstar + d) > 0)) {
                r.status = Status::Fail;
                r.pass = false;
            }
        } catch (const std::exception&) {
            r.status = Status::Fail;
            r.pass = false;
        }
    }
    return r;
}

MarginRecord check_ft_minimum(ModelKind kind, int genus, double guard) {
    const Quantities q = quantities(kind, genus);
    FtConfig cfg;
    try {
        cfg = ft_configuration(kind, genus);
    } catch (const std::exception&) {
        return error_record(CheckId::FtMinimum, kind, genus, 0);
    }
    const double cosh_2h = 2.0 * sq(q.cosh_h) - 1.0;
    MarginRecord r = make_record(CheckId::FtMinimum, kind, genus, 0, cfg.f_min,
                                 cosh_2h, Scale::Cosh, Relation::Greater, guard);
    bool aux_ok = true;
    // closed-form derivative vs central finite differences; the prefactor
    // is cosh|R1R2| + 1 (expanding the two product rules and collecting the
    // sinh of the angle-sum argument)
    for (const double off : {-0.8, -0.4, 0.4, 0.8, 1.2}) {
        const long double t = cfg.tstar + off;
        const long double step = 1e-5L * (1.0L + std::fabs(static_cast<double>(t)));
        const double fd = static_cast<double>(
            (ft_f_l(cfg, t + step) - ft_f_l(cfg, t - step)) / (2 * step));
        const double cf = (cfg.cosh_base + 1.0) *
                          std::sinh(2 * static_cast<double>(t) - cfg.u + cfg.v);
        if (std::fabs(fd - cf) > 1e-6 * std::fabs(cf)) aux_ok = false;
    }
    if (!aux_ok && r.status == Status::Pass) {
        r.status = Status::Fail;
        r.pass = false;
    }
    return r;
}

double ft_argmin_by_golden_section(ModelKind kind, int genus) {
    const FtConfig cfg = ft_configuration(kind, genus);
    return golden_min_arg(cfg, cfg.tstar - 2.0, cfg.tstar + 2.0);
}

double ft_stationary_point(ModelKind kind, int genus) {
    return ft_configuration(kind, genus).tstar;
}

std::vector<MarginRecord> check_b1c4_perpendicular(ModelKind kind, int genus,
                                                   double guard) {
    const PolygonFrame f = models::frame(models::angles(kind, genus));
    const double h = f.pm.de;
    std::vector<MarginRecord> out;
    try {
        const hp::Geodesic axis = models::diameter(f);
        const hp::HPoint center{0.0, 1.0};
        const hp::HPoint a_pt = models::vertex(f, 0);
        const hp::HPoint b1 = models::vertex(f, 1);
        // tiles around the vertex A have their centers at circumradius
        // distance, fanned in steps of the full corner angle 2b; every
        // diameter joins a vertex to the center of its own tile
        const double dir_ao = hp::direction_angle(a_pt, center);
        const double to_b1 = std::remainder(hp::direction_angle(a_pt, b1) - dir_ao, 2 * kPi);
        const double sgn = to_b1 > 0 ? 1.0 : -1.0;
        // a diameter bisects the corner of its own tile, so it leaves the
        // vertex at half a corner angle from the shared edge, rotated
        // towards that tile's center
        auto vertex_diameter = [&](const hp::HPoint& v, double center_dir) {
            const double dir_va = hp::direction_angle(v, a_pt);
            const hp::HPoint o_tile = hp::walk(a_pt, center_dir, f.circumradius);
            const double s =
                std::remainder(hp::direction_angle(v, o_tile) - dir_va, 2 * kPi) > 0
                    ? 1.0
                    : -1.0;
            return hp::geodesic_at(v, dir_va + s * f.ap.b);
        };
        const hp::Geodesic b1_diameter =
            vertex_diameter(b1, dir_ao + sgn * 2.0 * f.ap.b);
        out.push_back(make_record(CheckId::B1C4Perpendicular, kind, genus, 0,
                                  hp::common_perpendicular_length(axis, b1_diameter),
                                  h, Scale::Length, Relation::Equal, guard));
        out.push_back(make_record(CheckId::B1C4Perpendicular, kind, genus, 1,
                                  hp::point_to_geodesic_distance(models::point_h(f),
                                                                 b1_diameter),
                                  h, Scale::Length, Relation::Equal, guard));
        // second-ring diameter: through the endpoint of the next edge at A,
        // bisecting the corner of the tile one further step around
        const hp::HPoint b2 =
            hp::walk(a_pt, dir_ao + sgn * 3.0 * f.ap.b, 2.0 * f.pm.ad);
        const hp::Geodesic b2_diameter =
            vertex_diameter(b2, dir_ao + sgn * 4.0 * f.ap.b);
        out.push_back(make_record(CheckId::B1C4Perpendicular, kind, genus, 2,
                                  hp::common_perpendicular_length(axis, b2_diameter),
                                  h, Scale::Length, Relation::Greater, guard));
    } catch (const std::exception&) {
        out.push_back(error_record(CheckId::B1C4Perpendicular, kind, genus,
                                   static_cast<int>(out.size())));
    }
    return out;
}

namespace {

// Records contributed by one check at one genus, for sweeps: indexed checks
// report their claimed-near cells plus the binding far cell.
std::vector<MarginRecord> evaluate_check(CheckId c, ModelKind kind, int genus,
                                         double guard) {
    std::vector<MarginRecord> out;
    auto keep_binding = [&](MarginRecord&& rec, std::optional<MarginRecord>& slot) {
        if (!slot || rec.margin < slot->margin) slot = std::move(rec);
    };
    switch (c) {
        case CheckId::VertexDiameter: {
            const int n = models::vertex_count(kind, genus);
            std::optional<MarginRecord> binding;
            for (int k = 1; k <= n / 4; ++k)
                keep_binding(check_vertex_diameter(kind, genus, k, guard), binding);
            if (binding) out.push_back(*binding);
            break;
        }
        case CheckId::EdgeDiameter: {
            const AnglePair ap = models::angles(kind, genus);
            out.push_back(check_edge_diameter(kind, genus, 1, guard));
            out.push_back(check_edge_diameter(kind, genus, 2, guard));
            // edges past the perpendicular mirror onto already-enumerated
            // ones for the full polygons; only the dual-domain lobe has
            // genuinely distinct obtuse cells
            const double k_limit = kind == ModelKind::P2Star ? kPi : kPi / 2 + 1e-12;
            std::optional<MarginRecord> far, obtuse;
            for (int k = 3; (2.0 * k - 1.0) * ap.a < k_limit; ++k) {
                MarginRecord rec = check_edge_diameter(kind, genus, k, guard);
                if ((2.0 * k - 1.0) * ap.a > kPi / 2 + 1e-12)
                    keep_binding(std::move(rec), obtuse);
                else
                    keep_binding(std::move(rec), far);
            }
            if (far) out.push_back(*far);
            if (obtuse) out.push_back(*obtuse);
            break;
        }
        case CheckId::OhEdgeAbj:
            for (int j = 1; j <= 3; ++j)
                out.push_back(check_oh_edge(kind, genus, j, guard));
            break;
        case CheckId::NonadjEdges:
            out.push_back(check_nonadjacent_edges(kind, genus, guard));
            break;
        case CheckId::B1C3Diameter:
            out.push_back(check_b1c3(kind, genus, guard));
            break;
        case CheckId::C1C2Diameter:
            out.push_back(check_c1c2(kind, genus, guard));
            break;
        case CheckId::CenterEdge:
            out.push_back(check_center_edge(kind, genus, guard));
            break;
        case CheckId::X2Diameter:
            out.push_back(check_x2(kind, genus, guard));
            break;
        case CheckId::X3Diameter:
            out.push_back(check_x3_diameter(kind, genus, guard));
            break;
        case CheckId::XX3Separation:
            out.push_back(check_x_x3_separation(kind, genus, guard));
            break;
        case CheckId::FtMinimum:
            out.push_back(check_ft_minimum(kind, genus, guard));
            break;
        case CheckId::B1C4Perpendicular: {
            auto recs = check_b1c4_perpendicular(kind, genus, guard);
            out.insert(out.end(), recs.begin(), recs.end());
            break;
        }
    }
    return out;
}

}  // namespace

SweepReport sweep(const std::vector<CheckId>& checks, ModelKind kind,
                  int genus_lo, int genus_hi, double guard) {
    if (genus_lo < 2 || genus_hi > 1000000)
        throw std::invalid_argument("genus range must stay within [2, 1000000]");
    SweepReport report;
    std::vector<SweepSummary> summaries;
    for (const CheckId c : checks)
        summaries.push_back({c, kind, std::numeric_limits<double>::infinity(), 0, 0,
                             0, 0, 0});
    for (int g = genus_lo; g <= genus_hi; ++g) {
        for (size_t ci = 0; ci < checks.size(); ++ci) {
            std::vector<MarginRecord> recs;
            try {
                recs = evaluate_check(checks[ci], kind, g, guard);
            } catch (const std::exception&) {
                recs.push_back(error_record(checks[ci], kind, g, 0));
            }
            for (MarginRecord& r : recs) {
                SweepSummary& s = summaries[ci];
                if (r.status == Status::Unasserted) {
                    ++s.unasserted;
                } else {
                    ++s.asserted;
                    if (r.status != Status::Pass) {
                        ++s.failed;
                        report.all_pass = false;
                    }
                    if (!std::isnan(r.margin) && r.margin < s.min_margin) {
                        s.min_margin = r.margin;
                        s.argmin_genus = g;
                        s.argmin_index = r.index;
                    }
                }
                report.records.push_back(r);
            }
        }
    }
    report.summaries = std::move(summaries);
    return report;
}

}  // namespace hypsys::verifier
