#include "hypsys/fuchsian.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>

namespace hypsys::fuchsian {

namespace hp = hypsys::halfplane;

namespace {

constexpr double kKeyGrid = 1e-5;
const hp::HPoint kBase{0.0, 1.0};

Eigen::Matrix2d canonical(Eigen::Matrix2d m) {
    m /= std::sqrt(m.determinant());
    const double tr = m.trace();
    if (tr < -1e-9) return -m;
    if (tr <= 1e-9) {
        for (int i = 0; i < 4; ++i) {
            const double e = m(i / 2, i % 2);
            if (std::fabs(e) > 1e-9) return e < 0 ? Eigen::Matrix2d(-m) : m;
        }
    }
    return m;
}

struct Key {
    std::array<int64_t, 4> v;
    bool operator==(const Key& o) const { return v == o.v; }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (const int64_t x : k.v)
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

Key key_of(const Eigen::Matrix2d& m) {
    return {{std::llround(m(0, 0) / kKeyGrid), std::llround(m(0, 1) / kKeyGrid),
             std::llround(m(1, 0) / kKeyGrid), std::llround(m(1, 1) / kKeyGrid)}};
}

// Dedup set for group elements. Distinct elements of a cocompact group are
// separated far beyond the grid; lookups additionally probe the neighbor
// cell for entries sitting near a rounding boundary, so accumulated
// round-off cannot split one element into two keys.
class MatrixSet {
public:
    bool contains(const Eigen::Matrix2d& m) const {
        const Key base = key_of(m);
        std::array<int64_t, 4> alt{};
        int alt_mask = 0;
        for (int i = 0; i < 4; ++i) {
            const double r = m(i / 2, i % 2) / kKeyGrid;
            const double frac = r - std::floor(r);
            if (std::fabs(frac - 0.5) < 1e-3) {
                alt[i] = frac < 0.5 ? base.v[i] + 1 : base.v[i] - 1;
                alt_mask |= 1 << i;
            }
        }
        int sub = alt_mask;
        while (true) {
            Key k = base;
            for (int i = 0; i < 4; ++i)
                if (sub & (1 << i)) k.v[i] = alt[i];
            if (map_.count(k)) return true;
            if (sub == 0) break;
            sub = (sub - 1) & alt_mask;
        }
        return false;
    }

    void insert(const Eigen::Matrix2d& m) { map_.emplace(key_of(m), 0); }
    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<Key, int, KeyHash> map_;
};

double displacement_of(const Eigen::Matrix2d& m) {
    const double den = sq(m(1, 1)) + sq(m(1, 0));
    const double im = m.determinant() / den;
    const double re = (m(0, 1) * m(1, 1) + m(0, 0) * m(1, 0)) / den;
    return acosh_clamped(1.0 + (sq(re) + sq(im - 1.0)) / (2.0 * im));
}

struct Node {
    Eigen::Matrix2d m;
    double disp;
    int32_t parent;
    int16_t gen;
};

std::vector<uint16_t> word_of(const std::vector<Node>& nodes, int32_t idx) {
    std::vector<uint16_t> w;
    while (idx > 0) {
        w.push_back(static_cast<uint16_t>(nodes[idx].gen));
        idx = nodes[idx].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// BFS over non-backtracking words, finding every element with displacement
// at most `radius`. Any prefix of such an element corresponds to a tile
// touched by the connecting geodesic, hence stays within
// radius + circumradius; that is the pruning threshold.
std::vector<Node> enumerate_ball(const GeneratorSet& gs, double radius,
                                 const EnumerationCaps& caps, std::size_t& visited) {
    const double prune = radius + gs.circumradius + 0.2;
    const int n = gs.n_sides;
    MatrixSet seen;
    std::vector<Node> nodes;
    nodes.push_back({Eigen::Matrix2d::Identity(), 0.0, -1, -1});
    seen.insert(nodes[0].m);
    std::deque<int32_t> queue{0};
    while (!queue.empty()) {
        const int32_t cur = queue.front();
        queue.pop_front();
        const int16_t last = nodes[cur].gen;
        for (int16_t g = 0; g < n; ++g) {
            if (last >= 0 && g == (last + n / 2) % n) continue;  // backtrack
            const Eigen::Matrix2d m = canonical(nodes[cur].m * gs.gens[g].m);
            if (seen.contains(m)) continue;
            const double disp = displacement_of(m);
            if (disp > prune) continue;
            seen.insert(m);
            if (seen.size() > caps.max_visited)
                throw resource_error("enumeration exceeded max_visited cap");
            nodes.push_back({m, disp, cur, g});
            queue.push_back(static_cast<int32_t>(nodes.size() - 1));
        }
    }
    visited = std::max(visited, seen.size());
    return nodes;
}

std::pair<double, double> axis_feet(const Eigen::Matrix2d& m) {
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const double inf = std::numeric_limits<double>::infinity();
    if (std::fabs(c) < 1e-14) return {b / (d - a), inf};
    const double root = std::sqrt(std::max(0.0, sq(a + d) - 4.0));
    double p = (a - d - root) / (2 * c);
    double q = (a - d + root) / (2 * c);
    if (p > q) std::swap(p, q);
    return {p, q};
}

// Long words accumulate rounding that shifts traces near the 1e-7 dedup
// window, so near-minimal elements are re-derived from their words with
// generators built in extended precision.
using Mat2L = Eigen::Matrix<long double, 2, 2>;

std::vector<Mat2L> build_generators_l(ModelKind kind, int genus) {
    const long double pi_l = std::acos(-1.0L);
    const int n = kind == ModelKind::P1 ? 4 * genus : 4 * genus + 2;
    const long double a = kind == ModelKind::P1 ? pi_l / (4 * genus)
                                                : pi_l / (4 * genus + 2);
    const long double b = kind == ModelKind::P1 ? a : 2 * a;
    const long double apothem = std::acosh(std::cos(b) / std::sin(a));
    std::vector<Mat2L> gens;
    gens.reserve(n);
    for (int s = 0; s < n; ++s) {
        const long double theta = (2 * s + 1) * a;
        Mat2L rot, tr;
        rot << std::cos(theta / 2), std::sin(theta / 2), -std::sin(theta / 2),
            std::cos(theta / 2);
        tr << std::exp(apothem), 0.0L, 0.0L, std::exp(-apothem);
        gens.push_back(rot * tr * rot.transpose());
    }
    return gens;
}

Mat2L refine_from_word(const std::vector<Mat2L>& gens_l,
                       const std::vector<uint16_t>& word) {
    Mat2L m = Mat2L::Identity();
    for (const uint16_t g : word) m = m * gens_l[g];
    m /= std::sqrt(m.determinant());
    return m;
}

}  // namespace

GeneratorSet build_generators(ModelKind kind, int genus) {
    if (kind == ModelKind::P2Star)
        throw std::invalid_argument(
            "the dual domain shares P2's surface group; build P2 instead");
    const models::PolygonFrame f = models::frame(models::angles(kind, genus));
    GeneratorSet gs{kind, genus, f.n, {}, f.circumradius, f.apothem};
    gs.gens.reserve(f.n);
    for (int s = 0; s < f.n; ++s) {
        const double theta = (2.0 * s + 1.0) * f.ap.a;
        const MoebiusMap rot = MoebiusMap::rotation_about_i(theta);
        gs.gens.push_back(rot * MoebiusMap::axis_translation(2.0 * f.apothem) *
                          rot.inverse());
    }
    // each pairing must carry the opposite side onto its own side,
    // endpoints reversed
    const int n = f.n;
    for (int s = 0; s < n; ++s) {
        const auto far0 = models::vertex(f, (s + n / 2) % n);
        const auto far1 = models::vertex(f, (s + n / 2 + 1) % n);
        const double r1 = hp::distance(gs.gens[s](far0), models::vertex(f, s + 1));
        const double r2 = hp::distance(gs.gens[s](far1), models::vertex(f, s));
        if (r1 > 1e-8 || r2 > 1e-8)
            throw construction_error("side pairing misses its endpoints");
    }
    // vertex cycles close with holonomy +-identity and full angle 2 pi
    const int classes = kind == ModelKind::P1 ? 1 : 2;
    const int expect = kind == ModelKind::P1 ? 4 * genus : 2 * genus + 1;
    for (int c = 0; c < classes; ++c) {
        const VertexCycle vc = vertex_cycle(gs, c);
        if (vc.corners != expect || vc.residual > 1e-9 ||
            std::fabs(vc.angle_sum - 2 * kPi) > 1e-9)
            throw construction_error("vertex cycle fails to close");
    }
    return gs;
}

VertexCycle vertex_cycle(const GeneratorSet& gs, int start_corner) {
    const int n = gs.n_sides;
    const double corner_angle = 2.0 * models::angles(gs.kind, gs.genus).b;
    Eigen::Matrix2d u = Eigen::Matrix2d::Identity();
    int v = start_corner;
    VertexCycle vc;
    do {
        u = u * gs.gens[v].m;
        u /= std::sqrt(u.determinant());
        v = (v + n / 2 + 1) % n;
        ++vc.corners;
        vc.angle_sum += corner_angle;
        if (vc.corners > 2 * n + 2) break;
    } while (v != start_corner);
    vc.residual = std::min((u - Eigen::Matrix2d::Identity()).norm(),
                           (u + Eigen::Matrix2d::Identity()).norm());
    return vc;
}

double default_displacement_bound(ModelKind kind, int genus) {
    const models::AnglePair ap = models::angles(kind, genus);
    const double circum = acosh_clamped(models::circumradius_check(ap));
    return models::candidate_systole(kind, genus) + 2.0 * circum + 0.5;
}

EnumerationResult enumerate_short_elements(const GeneratorSet& gs, double bound,
                                           const EnumerationCaps& caps) {
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    if (bound > 4.0 * gs.circumradius + 8.0)
        throw std::invalid_argument("bound exceeds the resource guard");
    EnumerationResult result;
    result.bound = bound;
    std::size_t visited = 0;

    if (bound <= 2.0 * gs.circumradius + 1.0) {
        const std::vector<Node> nodes = enumerate_ball(gs, bound, caps, visited);
        for (int32_t i = 0; i < static_cast<int32_t>(nodes.size()); ++i) {
            if (nodes[i].disp > bound) continue;
            result.elements.push_back({word_of(nodes, i), MoebiusMap(nodes[i].m),
                                       nodes[i].disp,
                                       std::fabs(nodes[i].m.trace())});
        }
    } else {
        // two phases: any gamma with d(o, gamma o) <= bound splits at the
        // geodesic midpoint as u * v with both factors in the ball of
        // radius bound/2 + circumradius
        const double r1 = bound / 2.0 + gs.circumradius + 0.2;
        const std::vector<Node> s = enumerate_ball(gs, r1, caps, visited);
        std::vector<int32_t> in_s;
        for (int32_t i = 0; i < static_cast<int32_t>(s.size()); ++i)
            if (s[i].disp <= r1) in_s.push_back(i);
        MatrixSet out_seen;
        for (const int32_t ui : in_s) {
            for (const int32_t vi : in_s) {
                const Eigen::Matrix2d m = canonical(s[ui].m * s[vi].m);
                const double disp = displacement_of(m);
                if (disp > bound) continue;
                if (out_seen.contains(m)) continue;
                out_seen.insert(m);
                if (out_seen.size() > caps.max_visited)
                    throw resource_error("enumeration exceeded max_visited cap");
                auto w = word_of(s, ui);
                const auto w2 = word_of(s, vi);
                w.insert(w.end(), w2.begin(), w2.end());
                result.elements.push_back(
                    {std::move(w), MoebiusMap(m), disp, std::fabs(m.trace())});
            }
        }
        visited = std::max(visited, out_seen.size());
    }

    std::sort(result.elements.begin(), result.elements.end(),
              [](const GroupElement& x, const GroupElement& y) {
                  if (x.displacement != y.displacement)
                      return x.displacement < y.displacement;
                  for (int i = 0; i < 4; ++i) {
                      const double a = x.matrix.m(i / 2, i % 2);
                      const double b = y.matrix.m(i / 2, i % 2);
                      if (a != b) return a < b;
                  }
                  return false;
              });
    result.visited = visited;
    return result;
}

OracleResult oracle_systole(ModelKind kind, int genus,
                            std::optional<double> displacement_bound,
                            const EnumerationCaps& caps) {
    const auto t0 = std::chrono::steady_clock::now();
    const GeneratorSet gs = build_generators(kind, genus);
    const double candidate = models::candidate_systole(kind, genus);
    const double bound =
        displacement_bound.value_or(default_displacement_bound(kind, genus));
    if (bound < candidate + 2.0 * gs.circumradius - 1e-9)
        throw inconclusive_error(
            "displacement bound too small to certify the systole");
    const EnumerationResult en = enumerate_short_elements(gs, bound, caps);

    double l_coarse = std::numeric_limits<double>::infinity();
    for (const GroupElement& e : en.elements)
        if (e.hyperbolic()) l_coarse = std::min(l_coarse, e.translation_length());
    if (!std::isfinite(l_coarse))
        throw inconclusive_error("no hyperbolic element within the bound");

    // refine every near-minimal element from its word in extended precision
    const std::vector<Mat2L> gens_l = build_generators_l(kind, genus);
    struct Refined {
        Eigen::Matrix2d m;
        double length;
    };
    std::vector<Refined> minimal;
    long double l_min_l = std::numeric_limits<long double>::infinity();
    for (const GroupElement& e : en.elements) {
        if (!e.hyperbolic() || e.translation_length() > l_coarse + 1e-4) continue;
        const Mat2L ml = refine_from_word(gens_l, e.word);
        const long double tr = std::fabs(ml.trace());
        if (tr <= 2.0L) continue;
        const long double len = 2.0L * std::acosh(tr / 2.0L);
        l_min_l = std::min(l_min_l, len);
        minimal.push_back({ml.cast<double>(), static_cast<double>(len)});
    }
    const double l_min = static_cast<double>(l_min_l);

    // distinct axes of minimal elements crossing the base polygon
    struct Axis {
        double p, q;    // raw feet, q possibly +inf
        double cp, cq;  // compactified fingerprint, sorted
    };
    std::vector<Axis> axes;
    const double tol = 1e-7;
    auto fingerprint = [](double p, double q) {
        double cp = std::atan(p), cq = std::atan(q);
        if (cp > cq) std::swap(cp, cq);
        return std::make_pair(cp, cq);
    };
    auto locate = [&](double p, double q) -> int {
        const auto [cp, cq] = fingerprint(p, q);
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (std::fabs(axes[i].cp - cp) < tol && std::fabs(axes[i].cq - cq) < tol)
                return static_cast<int>(i);
        return -1;
    };
    for (const Refined& e : minimal) {
        if (e.length > l_min + 1e-7) continue;
        const auto [p, q] = axis_feet(e.m);
        const hp::Geodesic axis = std::isinf(q)
                                      ? hp::Geodesic::vertical(p)
                                      : hp::Geodesic::circle((p + q) / 2, (q - p) / 2);
        if (hp::point_to_geodesic_distance(kBase, axis) > gs.circumradius + 1e-6)
            continue;
        if (locate(p, q) < 0) {
            const auto [cp, cq] = fingerprint(p, q);
            axes.push_back({p, q, cp, cq});
        }
    }

    // merge axes related by one side pairing: consecutive crossings of a
    // closed geodesic through the polygon differ by a generator
    std::vector<int> parent(axes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < axes.size(); ++i) {
        for (const MoebiusMap& g : gs.gens) {
            const double gp = g.boundary(axes[i].p);
            const double gq = g.boundary(axes[i].q);
            const int j = locate(gp, gq);
            if (j >= 0 && find(j) != find(static_cast<int>(i)))
                parent[find(j)] = find(static_cast<int>(i));
        }
    }
    int multiplicity = 0;
    for (std::size_t i = 0; i < axes.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++multiplicity;

    OracleResult res;
    res.systole = l_min;
    res.candidate = candidate;
    res.multiplicity = multiplicity;
    res.element_count = en.elements.size();
    res.visited = en.visited;
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ProbeResult ball_embedding_probe(ModelKind kind, int genus, int samples,
                                 const EnumerationCaps& caps) {
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    const GeneratorSet gs = build_generators(kind, genus);
    const models::PolygonFrame f = models::frame(models::angles(kind, genus));
    const EnumerationResult en =
        enumerate_short_elements(gs, default_displacement_bound(kind, genus), caps);

    std::vector<double> arcs;
    for (int i = 0; i < samples; ++i)
        arcs.push_back(f.circumradius * i / (samples - 1.0));
    arcs.push_back(f.oh);  // include H exactly
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    ProbeResult pr;
    pr.oh = f.oh;
    pr.min_half = std::numeric_limits<double>::infinity();
    for (const double s : arcs) {
        const hp::HPoint x{0.0, std::exp(s)};
        double best = std::numeric_limits<double>::infinity();
        for (const GroupElement& e : en.elements) {
            if (e.displacement < 1e-9) continue;  // identity
            best = std::min(best, hp::distance(x, e.matrix(x)) / 2.0);
        }
        pr.samples.push_back({s, best});
        if (best < pr.min_half) {
            pr.min_half = best;
            pr.argmin_arc = s;
        }
        if (s == 0.0) pr.at_o = best;
        if (std::fabs(s - f.oh) < 1e-15) pr.at_h = best;
    }
    return pr;
}

}  // namespace hypsys::fuchsian
