// Integer-lattice algorithms on exact rational Gram matrices: LLL, complete
// short-vector enumeration, shortest vectors, HKZ reduction.
//
// Vectors are integer coordinate columns of Z^k; the geometry lives entirely
// in the positive-definite Gram matrix Q (xᵀQy).
#pragma once

#include "avb/rat.hpp"

namespace avb::lattice {

Rat norm2(const RatMat& q, const IntVec& x);

// Unimodular columns U with U·e_1 = v (v must be primitive).
std::vector<IntVec> complete_basis(const IntVec& v);

// LLL-reduced basis of Z^k as integer columns (delta = 0.99).
std::vector<IntVec> lll(const RatMat& q);

// All nonzero x with xᵀQx ≤ bound, one per ± pair, exact final filter.
// Enumeration runs in floating point with a safety margin; membership in the
// returned list is decided by exact rational comparison.
std::vector<IntVec> enumerate_up_to(const RatMat& q, const Rat& bound);

IntVec shortest_vector(const RatMat& q);

// HKZ-reduced basis: b_1 is a shortest vector, recursively in the projection.
std::vector<IntVec> hkz(const RatMat& q);

// Gram matrix UᵀQU of integer columns u under Q.
RatMat gram_of(const RatMat& q, const std::vector<IntVec>& u);

}  // namespace avb::lattice
