// Adelic vector bundles over Q: one rational lattice fixing every finite
// place plus one archimedean metric (hermitian Gram or convex body), with
// degree, duality, sums, powers, sub/quotient metrics, heights, and the
// scalar-extension comparison to Q(i).
#pragma once

#include "avb/convex.hpp"
#include "avb/ellipsoid.hpp"
#include "avb/places.hpp"
#include "avb/report.hpp"

#include <optional>

namespace avb::bundles {

struct FiniteStructure {
    RatMat A;  // columns span the lattice A·Z^n ⊂ Q^n; det A ≠ 0
};

enum class MetricKind { Hermitian, Body };

struct ArchMetric {
    MetricKind kind = MetricKind::Hermitian;
    RatMat G;                             // Hermitian: positive-definite Gram
    std::optional<convex::ConvexBody> body;  // Body: unit ball
};

struct AdelicBundle {
    std::size_t n = 0;
    FiniteStructure finite;
    ArchMetric arch;

    bool hermitian() const { return arch.kind == MetricKind::Hermitian; }

    static AdelicBundle with_gram(RatMat a, RatMat g);
    static AdelicBundle with_body(RatMat a, convex::ConvexBody c);
    static AdelicBundle standard(std::size_t n);  // A = I, G = I
};

struct HeightValue {
    double value = 0.0;
    Rat finite_part;       // exact product of the finite-place norms
    double arch_part = 0;  // log of the archimedean norm
};

// ‖x‖_p = max_i |(A⁻¹x)_i|_p, exact.
Rat finite_norm(const AdelicBundle& b, const RatVec& x, std::uint64_t p);

double degree(const AdelicBundle& b);
double degree_normalized(const AdelicBundle& b);  // over Q: same value

struct LpDegree {
    double printed;       // the closed Γ-form evaluated verbatim
    double definitional;  // volume-ratio value of (Q^n, lp) per place pattern
};
// Closed-form degree of (k^n, |·|_p) for a field with r1 real and r2 complex
// places, next to the value the degree definition itself produces.
LpDegree degree_lp_formula(std::size_t n, double p, int r1, int r2);

double euler_characteristic(const AdelicBundle& b);

AdelicBundle dual(const AdelicBundle& b);
AdelicBundle direct_sum_p(const AdelicBundle& b1, const AdelicBundle& b2, double p);
AdelicBundle tensor_g2(const AdelicBundle& b1, const AdelicBundle& b2);
AdelicBundle exterior(const AdelicBundle& b, std::size_t r);
AdelicBundle symmetric(const AdelicBundle& b, std::size_t ell);
// Sub-bundle on the span of rational columns s (restricted lattice + metric),
// expressed in the coordinates of its own saturated lattice basis.
AdelicBundle sub(const AdelicBundle& b, const std::vector<RatVec>& s);
AdelicBundle quotient(const AdelicBundle& b, const std::vector<RatVec>& s);
// Ambient lattice basis (columns in Q^n) of the saturated sub-lattice used by
// sub(); exposed so callers can relate sub-bundle coordinates to the ambient.
std::vector<RatVec> sub_lattice_basis(const AdelicBundle& b, const std::vector<RatVec>& s);
// Place-wise scaling: lattice ↦ r·lattice, archimedean norm ↦ t·norm.
// The degree drops by n·(log|r| + log t), exactly in the hermitian case.
AdelicBundle scale(const AdelicBundle& b, const Rat& r, const Rat& t);

AdelicBundle john_bundle(const AdelicBundle& b, double tol = 1e-7);
AdelicBundle lowner_bundle(const AdelicBundle& b, double tol = 1e-7);

HeightValue height_vector(const AdelicBundle& b, const RatVec& x);

struct MapHeight {
    double value = 0.0;
    bool is_upper_bound = false;  // true when a body metric forced a sandwich bound
};
MapHeight height_map(const AdelicBundle& b1, const AdelicBundle& b2, const RatMat& m);

CheckReport scalar_extension_check(const AdelicBundle& b, std::uint64_t seed = 1);

// Primitive lattice vectors of height ≤ a (finite by the Northcott property).
std::vector<RatVec> vectors_of_height_at_most(const AdelicBundle& b, double a);

}  // namespace avb::bundles
