#include "avb/convex.hpp"
#include "avb/ellipsoid.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace avb;
using namespace avb::convex;

namespace {
const double pi = 3.14159265358979323846;
}

TEST_CASE("gauges of the standard bodies") {
    CHECK(gauge(ConvexBody::lp_ball(2, inf_p), {3.0, -1.0}) == doctest::Approx(3.0));
    CHECK(gauge(ConvexBody::lp_ball(2, 2.0), {0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(gauge(ConvexBody::cube(2), {0.5, 0.5}) == doctest::Approx(0.5));
    CHECK(gauge(ConvexBody::cross_polytope(2), {0.5, 0.25}) == doctest::Approx(0.75));
    RatMat q(2, 2);
    q(0, 0) = 4;
    q(1, 1) = 1;
    CHECK(gauge(ConvexBody::ellipsoid(q), {1.0, 0.0}) == doctest::Approx(2.0));
}

TEST_CASE("polar representations") {
    auto p1 = polar(ConvexBody::lp_ball(3, 1.0));
    CHECK(p1.kind == RepKind::LpBall);
    CHECK(std::isinf(p1.p));

    auto pc = polar(ConvexBody::cube(2));  // cube° = cross-polytope
    CHECK(gauge(pc, {1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(gauge(pc, {0.5, 0.5}) == doctest::Approx(1.0));

    RatMat q(2, 2);
    q(0, 0) = 4;
    q(1, 1) = 1;
    auto pe = polar(ConvexBody::ellipsoid(q));
    CHECK(to_double(pe.Q(0, 0)) == doctest::Approx(0.25));
    CHECK(to_double(pe.Q(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("polar is an involution on gauges") {
    std::mt19937_64 rng(5);
    for (const auto& c : {ConvexBody::cube(2), ConvexBody::cross_polytope(3),
                          ConvexBody::lp_ball(2, 3.0)}) {
        auto cc = polar(polar(c));
        for (int k = 0; k < 200; ++k) {
            std::vector<double> x(c.n);
            for (auto& xi : x) xi = double(rng() % 2001) / 1000.0 - 1.0;
            CHECK(gauge(cc, x) == doctest::Approx(gauge(c, x)).epsilon(1e-7));
        }
    }
}

TEST_CASE("closed-form volumes") {
    CHECK(volume(ConvexBody::lp_ball(2, 2.0)) == doctest::Approx(pi));
    CHECK(volume(ConvexBody::lp_ball(3, 1.0)) == doctest::Approx(4.0 / 3.0));
    CHECK(volume(ConvexBody::cube(2)) == doctest::Approx(4.0));
    CHECK(volume(ConvexBody::cross_polytope(3)) == doctest::Approx(4.0 / 3.0));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0));
}

TEST_CASE("Monte Carlo volume agrees with closed forms") {
    for (const auto& c : {ConvexBody::cube(2), ConvexBody::lp_ball(2, 2.0),
                          ConvexBody::lp_ball(3, 3.0)}) {
        auto mc = volume_mc(c, 200000, 11);
        CHECK(std::fabs(mc.estimate - volume(c)) <= 3.5 * mc.stderror);
    }
}

TEST_CASE("Monte Carlo volume is deterministic under the seed") {
    auto a = volume_mc(ConvexBody::lp_ball(2, 2.0), 10000, 3);
    auto b = volume_mc(ConvexBody::lp_ball(2, 2.0), 10000, 3);
    CHECK(a.estimate == b.estimate);
}

TEST_CASE("Mahler products and the Santalo/Mahler bracket") {
    CHECK(mahler_product(ConvexBody::lp_ball(2, 2.0)) == doctest::Approx(pi * pi));
    CHECK(mahler_product(ConvexBody::cube(2)) == doctest::Approx(8.0));
    CHECK(mahler_product(ConvexBody::lp_ball(3, 2.0)) ==
          doctest::Approx(std::pow(4.0 * pi / 3.0, 2)));

    CHECK(santalo_mahler_check(ConvexBody::cube(2)).pass);
    auto ball = santalo_mahler_check(ConvexBody::lp_ball(2, 2.0));
    CHECK(ball.pass);
    CHECK(ball.lhs == doctest::Approx(ball.rhs));  // equality case
}

TEST_CASE("Mahler product is unimodular-invariant") {
    RatMat t(2, 2);
    t(0, 0) = 1;
    t(0, 1) = 3;
    t(1, 0) = 0;
    t(1, 1) = 1;
    auto c = ConvexBody::cube(2);
    CHECK(mahler_product(linear_image(c, t)) ==
          doctest::Approx(mahler_product(c)).epsilon(1e-6));
}

TEST_CASE("John and Lowner ellipsoids of the standard bodies") {
    auto j = john_ellipsoid(ConvexBody::cube(3));
    CHECK(j.log_volume == doctest::Approx(std::log(unit_ball_volume(3))).epsilon(1e-6));

    auto jc = john_ellipsoid(ConvexBody::cross_polytope(2));  // ball radius 1/√2
    CHECK(jc.log_volume == doctest::Approx(std::log(pi / 2.0)).epsilon(1e-6));

    auto l = lowner_ellipsoid(ConvexBody::cube(2));  // ball radius √2
    CHECK(l.log_volume == doctest::Approx(std::log(2.0 * pi)).epsilon(1e-6));

    RatMat q(2, 2);
    q(0, 0) = 4;
    q(1, 1) = 1;
    auto je = john_ellipsoid(ConvexBody::ellipsoid(q));
    CHECK(je.log_volume == doctest::Approx(std::log(pi / 2.0)).epsilon(1e-9));
}

TEST_CASE("volume ratios sit inside the square-root bracket") {
    CHECK(volume_ratio(ConvexBody::lp_ball(2, 2.0)) == doctest::Approx(1.0));
    CHECK(volume_ratio(ConvexBody::cube(2)) ==
          doctest::Approx(std::sqrt(4.0 / pi)).epsilon(1e-5));
    for (std::size_t n = 2; n <= 3; ++n)
        for (const auto& c : {ConvexBody::cube(n), ConvexBody::cross_polytope(n)}) {
            double v = volume_ratio(c), vt = vr_tilde(c);
            CHECK(v >= 1.0 - 1e-9);
            CHECK(v <= std::sqrt(double(n)) + 1e-6);
            CHECK(vt >= 1.0 - 1e-9);
            CHECK(vt <= std::sqrt(double(n)) + 1e-6);
        }
}

TEST_CASE("Banach-Mazur distance bracket") {
    RatMat q(2, 2);
    q(0, 0) = 4;
    q(1, 1) = 1;
    auto [le, ue] = bm_distance_bound(ConvexBody::ellipsoid(q));
    CHECK(le == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(ue == doctest::Approx(1.0).epsilon(1e-6));
    auto [lc, uc] = bm_distance_bound(ConvexBody::cube(2));
    CHECK(lc <= uc + 1e-12);
    CHECK(uc <= std::sqrt(2.0) + 1e-6);
}

TEST_CASE("direct-sum volume ratio matches the Gamma formula") {
    auto r1 = direct_sum_volume_check(ConvexBody::cube(1), ConvexBody::cube(1), 1.0);
    CHECK(r1.pass);
    CHECK(r1.lhs == doctest::Approx(0.5).epsilon(1e-2));  // Γ(2)Γ(2)/Γ(3)
    auto r2 = direct_sum_volume_check(ConvexBody::cube(2), ConvexBody::cube(2), inf_p);
    CHECK(r2.pass);
    auto r3 = direct_sum_volume_check(ConvexBody::lp_ball(1, 2.0),
                                      ConvexBody::lp_ball(2, 2.0), 2.0);
    CHECK(r3.pass);
    CHECK(r3.lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-2));
}

TEST_CASE("exact polytope volume on rational point sets") {
    // unit square scaled by 3 in x: volume 12
    std::vector<RatVec> pts = {{Rat(3), Rat(1)}, {Rat(3), Rat(-1)}, {Rat(-3), Rat(1)},
                               {Rat(-3), Rat(-1)}};
    CHECK(polytope_volume(pts, 2) == Rat(12));
}
