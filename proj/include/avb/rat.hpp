// Exact rational scalars and small dense linear algebra.
//
// All lattice and Gram data in this library are exact rationals; floating
// point appears only after a final logarithm or inside iterative solvers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace avb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Parses "num", "num/den" or a plain integer string. Throws on malformed input.
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);

using RatVec = std::vector<Rat>;

struct RatMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMat identity(std::size_t n);
    bool operator==(const RatMat& o) const = default;
};

RatMat mat_mul(const RatMat& x, const RatMat& y);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat transpose(const RatMat& m);
Rat det(RatMat m);                 // Gaussian elimination, exact
RatMat inverse(const RatMat& m);   // throws std::domain_error if singular
RatVec solve(const RatMat& m, const RatVec& b);
std::size_t rank(RatMat m);
// Basis of the right kernel {x : m x = 0}, as columns.
std::vector<RatVec> kernel(RatMat m);
RatMat kron(const RatMat& x, const RatMat& y);
RatMat block_diag(const RatMat& x, const RatMat& y);
// Compound matrix of r-minors in lexicographic row/column subset order.
RatMat compound(const RatMat& m, std::size_t r);

// Lexicographically ordered r-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r);

Rat dot(const RatVec& x, const RatVec& y);
// xᵀ M y for symmetric M.
Rat quad_form(const RatMat& m, const RatVec& x, const RatVec& y);

// True iff m is symmetric and all leading principal minors are positive.
bool is_positive_definite(const RatMat& m);

// --- integer lattices ------------------------------------------------------

using IntVec = std::vector<Int>;

// Column echelon reduction by unimodular column operations: transforms `cols`
// in place to column echelon form H and, when `u` is non-null, records the
// unimodular transform as columns with  M·U = H  (M = original columns).
void col_hnf_transform(std::vector<IntVec>& cols, std::vector<IntVec>* u);

// Column-style Hermite normal form of the integer matrix whose columns are
// `gens`; returns a basis (as columns) of the generated sublattice of Z^n.
std::vector<IntVec> hnf_basis(std::vector<IntVec> gens, std::size_t n);

// Basis of the saturation (span ∩ Z^n) of the sublattice generated by `gens`.
std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n);

Int binomial(std::size_t n, std::size_t k);
Int factorial(std::size_t n);

}  // namespace avb
