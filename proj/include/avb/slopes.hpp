// Slopes of adelic bundles: the canonical concave polygon of sub-bundle
// degrees, maximal/minimal slopes, the canonical filtration, semistability,
// and the slope identities that are exact in the hermitian case.
//
// All searches run in lattice coordinates: the bundle (A, G) becomes Z^n with
// the rational Gram Q = AᵀGA, and the rank-r optimum is the shortest
// decomposable vector of the r-th compound Gram on Λ^r Z^n.
#pragma once

#include "avb/bundle.hpp"

#include <utility>
#include <vector>

namespace avb::slopes {

using bundles::AdelicBundle;

struct CanonicalPolygon {
    std::size_t n = 0;
    std::vector<double> vertices;  // P(0), …, P(n); P(0) = 0
    std::vector<double> slopes;    // μ_1 ≥ … ≥ μ_n
    // achievers[r]: saturated integer bases (columns, lattice coordinates) of
    // every rank-r sublattice attaining P(r); singleton lists at r = 0 and n.
    std::vector<std::vector<std::vector<IntVec>>> achievers;
    bool certified = false;

    double value_at(double x) const;  // piecewise-linear interpolation
};

struct HNStep {
    std::size_t rank = 0;
    double degree = 0.0;
    std::vector<IntVec> basis;  // lattice coordinates; empty at rank 0
};

struct HNFiltration {
    std::vector<HNStep> steps;  // {0} = E_0 ⊂ E_1 ⊂ … ⊂ E_g = E
};

// deg(B)/rank; −inf sentinel on the zero bundle.
double slope(const AdelicBundle& b);

// Exact polygon of a hermitian bundle (rank ≤ 8). The enumeration radius is
// radius_factor × (best decomposable seed from an HKZ basis); `certified` is
// true when the search provably covered every candidate below the optimum,
// after up to three automatic ×1.5 radius escalations.
CanonicalPolygon canonical_polygon(const AdelicBundle& b, double radius_factor = 1.0);

// Independent brute-force oracle (rank ≤ 3): enumerates every saturated
// sublattice spanned by short vectors. Used to cross-check canonical_polygon.
CanonicalPolygon polygon_exhaustive(const AdelicBundle& b);

struct PolygonBracket {
    CanonicalPolygon lower;   // polygon of the inscribed-ellipsoid bundle
    CanonicalPolygon upper;   // lower shifted by x·log_delta_upper
    CanonicalPolygon outer;   // polygon of the enclosing-ellipsoid bundle
    double log_delta_upper = 0.0;
};
// Body-metric bracket: lower(x) ≤ P_B(x) ≤ lower(x) + x·log_delta_upper.
PolygonBracket polygon_bracket(const AdelicBundle& b, double radius_factor = 1.0);

// Certified factor d with  C ⊆ d·(inscribed ellipsoid of C).
double body_sandwich_factor(const convex::ConvexBody& c);

double mu_max(const AdelicBundle& b);  // hermitian: μ_1 of the polygon
double mu_min(const AdelicBundle& b);  // hermitian: −μ_max(dual)
// Body metrics: certified [lower, upper] brackets (collapsed when hermitian).
std::pair<double, double> mu_max_bracket(const AdelicBundle& b);
std::pair<double, double> mu_min_bracket(const AdelicBundle& b);

// Unique chain of achievers at the polygon's break ranks. Requires a
// certified polygon; non-unique or non-nested achievers are hard errors.
HNFiltration hn_filtration(const AdelicBundle& b, double radius_factor = 1.0);

bool is_semistable(const AdelicBundle& b);

// μ_i(dual) = −μ_{n−i+1}(B), all i, hermitian.
CheckReport mu_i_duality_check(const AdelicBundle& b);
// μ_i equals the min-max of quotient slopes over the polygon's achiever pairs.
CheckReport minimax_check(const AdelicBundle& b, std::size_t i);
// Tensoring with a line shifts the polygon affinely by r·deg(line).
CheckReport tensor_line_shift_check(const AdelicBundle& b, const AdelicBundle& line);

}  // namespace avb::slopes
