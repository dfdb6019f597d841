// John (maximum-volume inscribed) and Löwner (minimum-volume enclosing)
// ellipsoids of symmetric convex bodies, volume ratios, and the certified
// Banach–Mazur bracket.
#pragma once

#include "avb/convex.hpp"

#include <Eigen/Dense>

namespace avb::convex {

struct EllipsoidResult {
    Eigen::MatrixXd Q;  // ellipsoid {x : xᵀQx ≤ 1}
    double log_volume = 0.0;
    double certificate_gap = 0.0;  // relative optimality gap of the log-det program
};

EllipsoidResult john_ellipsoid(const ConvexBody& c, double tol = 1e-7);
EllipsoidResult lowner_ellipsoid(const ConvexBody& c, double tol = 1e-7);

double volume_ratio(const ConvexBody& c);  // (vol C / vol J(C))^{1/n} ∈ [1, √n]
double vr_tilde(const ConvexBody& c);      // (vol L(C) / vol C)^{1/n} ∈ [1, √n]

// Certified bounds on the multiplicative distance from C to the round ball.
std::pair<double, double> bm_distance_bound(const ConvexBody& c);

}  // namespace avb::convex
