// Symmetric-power combinatorics and slope statements: the geometric mean
// γ_{n,ℓ} of multinomial coefficients, the det S^ℓ identity, operator-norm
// bounds for inverses, and the symmetric-power slope/μ_max comparisons.
#pragma once

#include "avb/bundle.hpp"

namespace avb::sympow {

using bundles::AdelicBundle;

struct GammaValue {
    std::size_t n = 0, ell = 0;
    double log_value = 0.0;  // log γ_{n,ℓ} ≥ 0
};

// log γ = binom(ℓ+n−1,n−1)^{-1} Σ_{|i|=ℓ} log(ℓ!/i!); exact integer
// factorials for ℓ ≤ 20, log-Γ beyond. Guard: binom(ℓ+n−1,n−1) ≤ 10^7.
GammaValue gamma_nl(std::size_t n, std::size_t ell);

// n-th harmonic number (appears in the ℓ→∞ asymptotics of log γ/ℓ).
double harmonic(std::size_t n);

// det S^ℓ(M) = (det M)^{binom(ℓ+n−1,n)}, exactly over the rationals.
CheckReport det_sympow_identity_check(const RatMat& m, std::size_t ell);

// ‖M⁻¹‖ ≤ ‖M‖^{n−1}/|det M| at a finite place (max-entry norm, p = 2) and at
// the archimedean place (Hilbert–Schmidt norm).
CheckReport inverse_norm_bound_check(const RatMat& m);

// slope(S^ℓ B) = ℓ·slope(B) + ½·log γ_{n,ℓ}  (hermitian, exact).
CheckReport sympow_slope_check(const AdelicBundle& b, std::size_t ell);

// 0 ≤ μ_max(S^ℓ B) − ℓ·μ_max(B) ≤ 2ℓn·log n  (hermitian).
CheckReport sympow_mumax_check(const AdelicBundle& b, std::size_t ell);

// A short-basis witness with Σ h(e_i) + deg(B) ≤ (n/2)·log n + ε.
CheckReport siegel_check(const AdelicBundle& b);

}  // namespace avb::sympow
