// Origin-symmetric convex bodies: gauges, polars, exact and Monte Carlo
// volumes, Mahler products.
#pragma once

#include "avb/rat.hpp"
#include "avb/report.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace avb::convex {

enum class RepKind { HPoly, VPoly, LpBall, Ellipsoid };

struct Facet {
    RatVec normal;
    Rat offset;  // {x : ⟨normal, x⟩ ≤ offset}, offset > 0
};

struct ConvexBody {
    std::size_t n = 0;
    RepKind kind = RepKind::LpBall;
    std::vector<Facet> facets;       // HPoly, closed under negation
    std::vector<RatVec> vertices;    // VPoly, closed under negation
    double p = 2.0;                  // LpBall, in [1, ∞]
    RatMat Q;                        // Ellipsoid {x : xᵀQx ≤ 1}, positive definite

    // Factories validate invariants and complete ± pairs.
    static ConvexBody hpoly(std::size_t n, std::vector<Facet> facets);
    static ConvexBody vpoly(std::size_t n, std::vector<RatVec> vertices);
    static ConvexBody lp_ball(std::size_t n, double p);
    static ConvexBody ellipsoid(RatMat q);
    static ConvexBody cube(std::size_t n);            // [-1,1]^n as HPoly
    static ConvexBody cross_polytope(std::size_t n);  // conv(±e_i) as VPoly
};

constexpr double inf_p = std::numeric_limits<double>::infinity();

double gauge(const ConvexBody& c, const std::vector<double>& x);
Rat gauge_rat(const ConvexBody& c, const RatVec& x);  // HPoly only (exact)
// Exact facet representation; converts VPoly via brute-force hull enumeration.
std::vector<Facet> facet_rep(const ConvexBody& c);
// Exact vertex representation of a polytope body.
std::vector<RatVec> vertex_rep(const ConvexBody& c);

ConvexBody polar(const ConvexBody& c);
// Image of a polytope body under an invertible rational matrix.
ConvexBody linear_image(const ConvexBody& c, const RatMat& t);

double volume(const ConvexBody& c);
// Exact rational volume of the convex hull of a full-dimensional point set.
Rat polytope_volume(const std::vector<RatVec>& pts, std::size_t n);
double lp_ball_volume(std::size_t n, double p);
// Volume of the complex ℓ^p ball in C^n ≅ R^{2n} under the 2dxdy measure.
double lp_ball_volume_complex(std::size_t n, double p);
double unit_ball_volume(std::size_t n);  // vol(b_n^2)

struct McEstimate {
    double estimate = 0.0;
    double stderror = 0.0;
};
McEstimate volume_mc(const ConvexBody& c, std::size_t samples, std::uint64_t seed);

double mahler_product(const ConvexBody& c);
CheckReport santalo_mahler_check(const ConvexBody& c);
CheckReport direct_sum_volume_check(const ConvexBody& c1, const ConvexBody& c2,
                                    double p, std::uint64_t seed = 1);

}  // namespace avb::convex
