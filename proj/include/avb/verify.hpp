// Cross-module theorem checks: height/degree identities for isomorphisms,
// the slope inequalities for injective, surjective and general linear maps,
// tensor additivity, and reproducible seeded suites over generated instances.
#pragma once

#include "avb/bundle.hpp"

#include <string>
#include <vector>

namespace avb::verify {

using bundles::AdelicBundle;

// deg B1 = deg B2 + h(M) for an isomorphism of rank-1 bundles.
CheckReport check_line_isomorphism(const AdelicBundle& b1, const AdelicBundle& b2,
                                   const RatMat& m);

// deg B1 = deg B2 + h(det M) on the determinant lines (hermitian).
CheckReport check_iso_determinant(const AdelicBundle& b1, const AdelicBundle& b2,
                                  const RatMat& m);

// M injective ⇒ μ_max(B1) ≤ μ_max(B2) + h(M); body metrics use the sound
// bracket ends (lower on the left, upper on the right).
CheckReport check_slope_injective(const AdelicBundle& b1, const AdelicBundle& b2,
                                  const RatMat& m);

struct FiltrationStep {
    AdelicBundle quotient;  // G_i
    RatMat map;             // φ_i as a matrix on the ambient source
    std::size_t dim = 0;    // dim(E_i / E_{i+1})
};
// slope(B) ≤ Σ (dim_i/n)·(μ_max(G_i) + h(φ_i)) + log vr(B); the heights are
// taken on the full source, an upper bound for the induced sub-bundle maps.
CheckReport check_slope_method(const AdelicBundle& b, const std::vector<FiltrationStep>& steps);

// μ_{i+dim ker M}(B1) ≤ μ_i(B2) + i·logΔ(B2) + (i+dim ker)·logΔ(B1) + h(M).
CheckReport check_prop66(const AdelicBundle& b1, const AdelicBundle& b2, const RatMat& m,
                         std::size_t i);

// M surjective onto B2 of rank m ⇒
// μ_max(B2) ≤ deg(B2) − (m−1)·μ_min(B1) + (m−1)·h(M) + m·log(Δ(B1)Δ(B2)).
CheckReport check_corollary_surjective(const AdelicBundle& b1, const AdelicBundle& b2,
                                       const RatMat& m);

// slope(B_1 ⊗ … ⊗ B_k) = Σ slope(B_i), exact for hermitian tensor metrics.
CheckReport check_tensor_slope(const std::vector<AdelicBundle>& bs);

// Suites: "hermitian-exact" (equalities and exact inequalities on integral
// Gram instances, n ≤ 4) and "body-brackets" (sound-direction checks on
// polytope bundles, n ≤ 3). Deterministic under (seed, count).
std::vector<CheckReport> run_suite(const std::string& name, std::size_t count,
                                   std::uint64_t seed);

}  // namespace avb::verify
