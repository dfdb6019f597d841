// Successive minima of an adelic bundle's lattice under the archimedean
// gauge, the doubled-covolume product bound, and the slope–minima comparison.
//
// The computed values are exact lattice minima (archimedean scaling only) and
// therefore certified upper bounds for the fully adelic definition; every
// inequality consumes them only in the direction that stays sound.
#pragma once

#include "avb/bundle.hpp"

namespace avb::minima {

using bundles::AdelicBundle;

struct MinimaResult {
    std::vector<double> lambdas;     // λ_1 ≤ … ≤ λ_n
    std::vector<Rat> lambda2_exact;  // λ_i² when the gauge is rational (hermitian)
    std::vector<IntVec> witnesses;   // independent, lattice coordinates (ambient = A·z)
    std::string semantics_flag = "lattice-minima upper bound for the adelic definition";
};

MinimaResult successive_minima(const AdelicBundle& b);

// Πλ_i ≤ 2^n·(covol/vol B)·vr^n together with the companion lower bound
// Πλ_i·(vol B/covol) ≥ 2^n/n!  (rational field, one real place).
CheckReport minkowski_second_check(const AdelicBundle& b);

// −i·logΔ ≤ μ_i + log λ_i ≤ (i/n)·C(n) + i·logΔ with C(n) = log(2^n/vol b_n²).
// Body metrics assert only the upper side (λ is an upper bound); the lower
// side is reported informationally.
CheckReport minima_comparison_check(const AdelicBundle& b);

double comparison_constant(std::size_t n);  // C(n) = log(2^n / vol b_n²)

// Experimental: single-prime lattice rescalings a_p ∈ {p^{-1}, p}, p ≤ 7,
// compensated by |a_p|_p, probing for a strictly smaller adelic minimum.
// Findings are reported in the note, never asserted.
CheckReport finite_rescaling_probe(const AdelicBundle& b);

}  // namespace avb::minima
