#include "hypsys/svg.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hypsys/fuchsian.hpp"
#include "hypsys/halfplane.hpp"

namespace hypsys::svg {

namespace hp = hypsys::halfplane;
using cplx = std::complex<double>;

namespace {

cplx to_disk(const hp::HPoint& p) {
    const cplx z(p.re, p.im);
    const cplx i(0.0, 1.0);
    return (z - i) / (z + i);
}

struct Canvas {
    std::ostringstream body;

    std::pair<double, double> pix(const cplx& w) const {
        return {420.0 + 400.0 * w.real(), 420.0 - 400.0 * w.imag()};
    }

    void polyline(const std::vector<cplx>& pts, const char* color, double width) {
        body << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
             << width << "\" points=\"";
        char buf[64];
        for (const cplx& w : pts) {
            const auto [x, y] = pix(w);
            std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x, y);
            body << buf;
        }
        body << "\"/>\n";
    }

    void circle(const cplx& center, double radius, const char* color, double width) {
        const auto [x, y] = pix(center);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" "
                      "stroke=\"%s\" stroke-width=\"%.2f\"/>\n",
                      x, y, radius * 400.0, color, width);
        body << buf;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" "
               "height=\"840\" viewBox=\"0 0 840 840\">\n"
            << "<rect width=\"840\" height=\"840\" fill=\"white\"/>\n"
            << "<circle cx=\"420\" cy=\"420\" r=\"400\" fill=\"none\" "
               "stroke=\"#888\" stroke-width=\"1\"/>\n"
            << body.str() << "</svg>\n";
    }
};

std::vector<cplx> sample_segment(const hp::HPoint& p, const hp::HPoint& q, int n = 48) {
    const hp::Geodesic g = hp::geodesic_through(p, q);
    std::vector<cplx> pts;
    if (g.is_vertical) {
        const double a = std::log(p.im), b = std::log(q.im);
        for (int i = 0; i <= n; ++i) {
            const double t = a + (b - a) * i / n;
            pts.push_back(to_disk(hp::HPoint{g.c, std::exp(t)}));
        }
    } else {
        const double a = std::atan2(p.im, p.re - g.c);
        const double b = std::atan2(q.im, q.re - g.c);
        for (int i = 0; i <= n; ++i) {
            const double t = a + (b - a) * i / n;
            pts.push_back(to_disk(hp::HPoint{g.c + g.r * std::cos(t), g.r * std::sin(t)}));
        }
    }
    return pts;
}

// Euclidean circumcircle of the disk images of three points of a
// hyperbolic circle; Moebius maps send circles to circles.
std::pair<cplx, double> disk_circle(const hp::HPoint& center, double radius) {
    const double y = center.im;
    const cplx e_center(center.re, y * std::cosh(radius));
    const double e_radius = y * std::sinh(radius);
    const cplx a = to_disk(hp::HPoint{e_center.real() + e_radius, e_center.imag()});
    const cplx b = to_disk(hp::HPoint{e_center.real() - e_radius, e_center.imag()});
    const cplx c = to_disk(hp::HPoint{e_center.real(), e_center.imag() + e_radius});
    // circumcenter via perpendicular bisectors
    const double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag();
    const double cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                       (cx * cx + cy * cy) * (ay - by)) /
                      d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                       (cx * cx + cy * cy) * (bx - ax)) /
                      d;
    return {cplx(ux, uy), std::hypot(ax - ux, ay - uy)};
}

hp::HPoint reflect_across(const hp::Geodesic& g, const hp::HPoint& p) {
    if (g.is_vertical) return {2.0 * g.c - p.re, p.im};
    const cplx z(p.re, p.im);
    const cplx w = cplx(g.c, 0.0) + sq(g.r) / std::conj(z - cplx(g.c, 0.0));
    return {w.real(), w.imag()};
}

}  // namespace

void write_polygon_figure(models::ModelKind kind, int genus, const std::string& path) {
    const models::PolygonFrame f = models::frame(models::angles(kind, genus));
    Canvas canvas;
    const int n = f.n;
    // polygon edges
    for (int s = 0; s < n; ++s)
        canvas.polyline(sample_segment(models::vertex(f, s), models::vertex(f, s + 1)),
                        "black", 1.6);
    if (kind == models::ModelKind::P2Star) {
        // second lobe: mirror image across the shared edge
        const hp::Geodesic shared = models::side_line(f, genus);
        for (int s = 0; s < n; ++s)
            canvas.polyline(sample_segment(reflect_across(shared, models::vertex(f, s)),
                                           reflect_across(shared, models::vertex(f, s + 1))),
                            "black", 1.6);
        // diameter: A through the far lobe's opposite vertex
        canvas.polyline(sample_segment(models::vertex(f, 0),
                                       reflect_across(shared, models::vertex(f, 0))),
                        "#555", 1.0);
    } else {
        canvas.polyline(sample_segment(models::vertex(f, 0), models::vertex(f, n / 2)),
                        "#555", 1.0);
        // dual polygon: centers of the tiles around the diameter vertex
        const auto gs = fuchsian::build_generators(kind, genus);
        std::vector<hp::HPoint> centers;
        Eigen::Matrix2d u = Eigen::Matrix2d::Identity();
        int v = 0;
        const hp::HPoint o{0.0, 1.0};
        do {
            centers.push_back(hp::MoebiusMap(u)(o));
            u = u * gs.gens[v].m;
            u /= std::sqrt(u.determinant());
            v = (v + n / 2 + 1) % n;
        } while (v != 0 && static_cast<int>(centers.size()) < 2 * n);
        for (std::size_t i = 0; i < centers.size(); ++i)
            canvas.polyline(sample_segment(centers[i], centers[(i + 1) % centers.size()]),
                            "green", 1.2);
    }
    // candidate geodesic through the edge midpoints next to the diameter
    const auto d_pt = models::side_midpoint(f, -1);
    const auto e_pt = models::side_midpoint(f, 0);
    canvas.polyline(sample_segment(d_pt, e_pt), "red", 2.0);
    if (kind == models::ModelKind::P2Star) {
        const hp::Geodesic shared = models::side_line(f, genus);
        canvas.polyline(sample_segment(reflect_across(shared, d_pt),
                                       reflect_across(shared, e_pt)),
                        "red", 2.0);
    } else {
        const auto dp = models::side_midpoint(f, n / 2 - 1);
        const auto ep = models::side_midpoint(f, n / 2);
        canvas.polyline(sample_segment(dp, ep), "red", 2.0);
    }
    canvas.save(path);
}

void write_ball_figure(models::ModelKind kind, int genus, const std::string& path) {
    if (kind == models::ModelKind::P2Star)
        throw std::invalid_argument("ball figure is drawn for P1 and P2 only");
    const models::PolygonFrame f = models::frame(models::angles(kind, genus));
    const auto gs = fuchsian::build_generators(kind, genus);
    Canvas canvas;
    const int n = f.n;
    for (int s = 0; s < n; ++s)
        canvas.polyline(sample_segment(models::vertex(f, s), models::vertex(f, s + 1)),
                        "black", 1.6);
    canvas.polyline(sample_segment(models::vertex(f, 0), models::vertex(f, n / 2)),
                    "#555", 1.0);
    const double h = f.pm.de;
    const hp::HPoint x = models::point_h(f);
    const auto [c0, r0] = disk_circle(x, h);
    canvas.circle(c0, r0, "blue", 1.6);
    // translates whose balls reach back towards the polygon
    const double bound = std::min(2.0 * f.oh + 2.0 * h + 0.6,
                                  4.0 * f.circumradius + 8.0);
    const auto en = fuchsian::enumerate_short_elements(gs, bound);
    int drawn = 0;
    for (const auto& e : en.elements) {
        if (e.displacement < 1e-9) continue;
        const hp::HPoint gx = e.matrix(x);
        if (hp::distance(x, gx) > 2.0 * h + 0.4) continue;
        const auto [c, r] = disk_circle(gx, h);
        canvas.circle(c, r, "#3a7", 1.2);
        if (++drawn > 64) break;
    }
    canvas.save(path);
}

}  // namespace hypsys::svg
