#include "avb/io.hpp"
#include "avb/report.hpp"

#include <doctest.h>

using namespace avb;

TEST_CASE("gram bundle text round-trip is byte-exact") {
    RatMat a(2, 2);
    a(0, 0) = Rat(1, 2);
    a(0, 1) = Rat(-3, 7);
    a(1, 1) = 1;
    RatMat g(2, 2);
    g(0, 0) = Rat(5, 3);
    g(0, 1) = g(1, 0) = Rat(1, 3);
    g(1, 1) = 2;
    auto b = bundles::AdelicBundle::with_gram(a, g);
    auto text = io::to_text(b);
    auto b2 = io::parse_bundle(text);
    CHECK(b2.n == b.n);
    CHECK(b2.finite.A == b.finite.A);
    CHECK(b2.arch.G == b.arch.G);
    CHECK(io::to_text(b2) == text);
}

TEST_CASE("body bundle round-trips for every representation kind") {
    auto a = RatMat::identity(2);
    std::vector<bundles::AdelicBundle> cases;
    cases.push_back(bundles::AdelicBundle::with_body(a, convex::ConvexBody::cube(2)));
    cases.push_back(
        bundles::AdelicBundle::with_body(a, convex::ConvexBody::cross_polytope(2)));
    cases.push_back(
        bundles::AdelicBundle::with_body(a, convex::ConvexBody::lp_ball(2, 3.0)));
    cases.push_back(bundles::AdelicBundle::with_body(
        a, convex::ConvexBody::lp_ball(2, convex::inf_p)));
    RatMat q(2, 2);
    q(0, 0) = 4;
    q(1, 1) = 1;
    cases.push_back(bundles::AdelicBundle::with_body(a, convex::ConvexBody::ellipsoid(q)));
    for (const auto& b : cases) {
        auto text = io::to_text(b);
        auto b2 = io::parse_bundle(text);
        CHECK(io::to_text(b2) == text);
        CHECK(bundles::degree(b2) == doctest::Approx(bundles::degree(b)));
    }
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(io::parse_bundle(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_bundle("rank: 2\narch.kind: gram\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_bundle("rank: 2\nfinite.matrix: 1 0 0 1\narch.kind: nope\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        io::parse_bundle("rank: 2\nfinite.matrix: 1 0 0\narch.kind: gram\narch.gram: 1 "
                         "0 0 1\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(io::parse_bundle("bogus: 1\n"), std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
    auto b = io::parse_bundle(
        "# a comment\nrank: 1\n\nfinite.matrix: 2/3  # trailing\narch.kind: gram\n"
        "arch.gram: 1\n");
    CHECK(b.n == 1);
    CHECK(b.finite.A(0, 0) == Rat(2, 3));
}

TEST_CASE("polygon csv and svg") {
    slopes::CanonicalPolygon pg;
    pg.n = 2;
    pg.vertices = {0.0, 0.0, -0.69314718055994531};
    pg.slopes = {0.0, -0.69314718055994531};
    pg.achievers.resize(3);
    auto csv = io::polygon_csv(pg);
    CHECK(csv == "rank,value\n0,0\n1,0\n2,-0.69314718056\n");
    auto svg = io::polygon_svg(pg);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("rank") != std::string::npos);
    CHECK(svg.find("P(rank)") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("twelve significant digit formatting and json lines") {
    CHECK(fmt12(0.23104906018664842) == "0.231049060187");
    CHECK(fmt12(0.0) == "0");
    auto r = CheckReport::equality("x", "inst", 1.0, 1.0);
    r.seed = 5;
    CHECK(to_json_line(r) ==
          "{\"name\":\"x\",\"instance\":\"inst\",\"lhs\":1,\"rhs\":1,\"slack\":-0,"
          "\"pass\":true,\"seed\":5}");
}
