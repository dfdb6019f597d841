// Normalized absolute values of Q and adelic bookkeeping.
#pragma once

#include "avb/rat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace avb::places {

enum class Kind { Finite, Real, Complex };

struct Place {
    Kind kind = Kind::Real;
    std::uint64_t p = 0;  // residue prime, Finite only

    static Place finite(std::uint64_t prime);
    static Place real() { return {Kind::Real, 0}; }
    static Place complex() { return {Kind::Complex, 0}; }

    // Local degree: 1 for finite and real places, 2 for the complex place.
    int local_degree() const { return kind == Kind::Complex ? 2 : 1; }
};

// Finitely supported idele: unstored finite components are 1.
struct Idele {
    std::map<std::uint64_t, Rat> finite;  // prime -> |a_p|_p, a power of p
    double arch = 1.0;
};

bool is_prime(std::uint64_t n);

// p-adic valuation of a nonzero rational.
long valuation(const Rat& x, std::uint64_t p);

// |x|_v. Finite places: exactly p^{-v_p(x)}; throws std::domain_error on x = 0.
Rat abs_value_exact(const Rat& x, const Place& v);  // finite places only
double abs_value(const Rat& x, const Place& v);

// Primes dividing numerator or denominator.
std::vector<std::uint64_t> prime_support(const Rat& x);

// Verifies ∏_v |x|_v^{n_v} = 1 with exact rational arithmetic over the finite
// support. Throws on x = 0; returns true always (by construction of Q).
bool product_formula_check(const Rat& x);

double adelic_abs(const Idele& a);

}  // namespace avb::places
