#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hypsys/models.hpp"
#include "oracles.hpp"

using namespace hypsys;
using namespace hypsys::models;

TEST_CASE("angle parameters per model") {
    CHECK_THROWS_AS(angles(ModelKind::P1, 1), std::invalid_argument);
    const auto p1 = angles(ModelKind::P1, 4);
    CHECK(p1.a == doctest::Approx(kPi / 16).epsilon(1e-15));
    CHECK(p1.b == doctest::Approx(kPi / 16).epsilon(1e-15));
    const auto p2 = angles(ModelKind::P2, 7);
    CHECK(p2.a == doctest::Approx(kPi / 30).epsilon(1e-15));
    CHECK(p2.b == doctest::Approx(kPi / 15).epsilon(1e-15));
    const auto p2s = angles(ModelKind::P2Star, 7);
    CHECK(p2s.a == doctest::Approx(kPi / 15).epsilon(1e-15));
    CHECK(p2s.b == doctest::Approx(kPi / 30).epsilon(1e-15));
}

TEST_CASE("interior angle sums") {
    for (int g = 2; g <= 12; ++g) {
        const auto p1 = angles(ModelKind::P1, g);
        CHECK(4 * g * 2 * p1.b == doctest::Approx(2 * kPi).epsilon(1e-13));
        const auto p2 = angles(ModelKind::P2, g);
        CHECK((4 * g + 2) * 2 * p2.b == doctest::Approx(4 * kPi).epsilon(1e-13));
        // each lobe of the dual domain is a (2g+1)-gon with angle sum pi
        const auto p2s = angles(ModelKind::P2Star, g);
        CHECK((2 * g + 1) * 2 * p2s.b == doctest::Approx(kPi).epsilon(1e-13));
    }
}

TEST_CASE("length dictionary identities") {
    for (int g : {2, 3, 4, 7, 10, 64, 1000, 100000, 1000000}) {
        for (auto kind : {ModelKind::P1, ModelKind::P2, ModelKind::P2Star}) {
            const auto ap = angles(kind, g);
            const auto m = metrics(ap);
            CHECK(m.cosh_oa == doctest::Approx(m.cosh_od * m.cosh_ad).epsilon(1e-12));
            CHECK(m.cosh_de == doctest::Approx(2 * sq(m.sinh_dh) + 1).epsilon(1e-12));
            CHECK(m.cosh_ad == doctest::Approx(m.cosh_ah * m.cosh_dh).epsilon(1e-12));
            // the squares grow like 1/b^2, so compare at their own scale
            CHECK(std::fabs(sq(m.cosh_ah) - sq(m.sinh_ah) - 1.0) <=
                  1e-13 * sq(m.cosh_ah));
            CHECK(m.half_systole == doctest::Approx(m.de).epsilon(1e-15));
        }
    }
    // symmetric configuration when a = b
    const auto m = metrics(angles(ModelKind::P1, 5));
    CHECK(m.od == doctest::Approx(m.ad).epsilon(1e-14));
}

TEST_CASE("candidate systole closed forms") {
    // P1 g=4 matches 1 + 2 cos(pi/8)
    const auto m = metrics(angles(ModelKind::P1, 4));
    CHECK(m.cosh_de == doctest::Approx(2.8477590650).epsilon(1e-10));
    CHECK(candidate_systole(ModelKind::P1, 4) ==
          doctest::Approx(3.41464123).epsilon(2e-9));
    CHECK(candidate_systole(ModelKind::P2, 7) ==
          doctest::Approx(3.44730852).epsilon(2e-9));
    const double de_p2_7 = acosh_clamped(1 + std::cos(kPi / 15) + std::cos(2 * kPi / 15));
    CHECK(candidate_systole(ModelKind::P2, 7) == doctest::Approx(2 * de_p2_7).epsilon(1e-14));
    CHECK(metrics(angles(ModelKind::P2, 7)).de == doctest::Approx(de_p2_7).epsilon(1e-13));
    for (int g = 2; g <= 10000; g = g < 40 ? g + 1 : g * 3) {
        CHECK(candidate_systole(ModelKind::P1, g) ==
              doctest::Approx(2 * std::acosh(1 + 2 * std::cos(kPi / (2.0 * g))))
                  .epsilon(1e-12));
        CHECK(candidate_systole(ModelKind::P2, g) ==
              doctest::Approx(2 * std::acosh(1 + std::cos(kPi / (2.0 * g + 1)) +
                                             std::cos(2 * kPi / (2.0 * g + 1))))
                  .epsilon(1e-12));
        // dual domain shares the candidate with P2
        CHECK(candidate_systole(ModelKind::P2Star, g) ==
              doctest::Approx(candidate_systole(ModelKind::P2, g)).epsilon(1e-14));
    }
}

TEST_CASE("circumradius") {
    CHECK(circumradius_check(angles(ModelKind::P1, 4)) ==
          doctest::Approx(sq(1.0 / std::tan(kPi / 16))).epsilon(1e-12));
    CHECK(circumradius_check(angles(ModelKind::P1, 4)) == doctest::Approx(25.2741).epsilon(1e-5));
    double prev1 = 1.0, prev2 = 1.0;
    for (int g = 2; g <= 200; ++g) {
        const double c1 = circumradius_check(angles(ModelKind::P1, g));
        const double c2 = circumradius_check(angles(ModelKind::P2, g));
        CHECK(c1 > prev1);
        CHECK(c2 > prev2);
        prev1 = c1;
        prev2 = c2;
    }
}

TEST_CASE("half-plane frame") {
    using halfplane::distance;
    for (auto kind : {ModelKind::P1, ModelKind::P2, ModelKind::P2Star}) {
        const int g = kind == ModelKind::P2 ? 7 : 4;
        const auto f = frame(angles(kind, g));
        const halfplane::HPoint center{0.0, 1.0};
        // vertices sit on the circumradius, side midpoints on the apothem
        CHECK(distance(center, vertex(f, 0)) == doctest::Approx(f.circumradius).epsilon(1e-12));
        CHECK(distance(center, vertex(f, 3)) == doctest::Approx(f.circumradius).epsilon(1e-12));
        CHECK(distance(center, side_midpoint(f, 0)) ==
              doctest::Approx(f.apothem).epsilon(1e-12));
        // the side line passes through the midpoint at the right distance
        CHECK(halfplane::point_to_geodesic_distance(side_midpoint(f, 0), side_line(f, 0)) <
              1e-10);
        // edge midpoints adjacent to the diameter span the candidate geodesic
        const auto d_pt = side_midpoint(f, -1);
        const auto e_pt = side_midpoint(f, 0);
        CHECK(distance(d_pt, e_pt) == doctest::Approx(f.pm.de).epsilon(1e-11));
        // which crosses the diameter at H, perpendicularly, at its midpoint
        const auto seg = halfplane::geodesic_through(d_pt, e_pt);
        const auto h = halfplane::intersection(seg, diameter(f));
        CHECK(distance(h, point_h(f)) < 1e-11);
        CHECK(distance(h, d_pt) == doctest::Approx(f.pm.de / 2).epsilon(1e-10));
        CHECK(f.oh == doctest::Approx(f.circumradius - f.pm.ah).epsilon(1e-11));
        // vertex 0 is A on the axis above H
        CHECK(vertex(f, 0).re == doctest::Approx(0.0).epsilon(1e-12));
        // edge length is 2|AD|
        CHECK(distance(vertex(f, 0), vertex(f, 1)) ==
              doctest::Approx(2 * f.pm.ad).epsilon(1e-11));
    }
}
