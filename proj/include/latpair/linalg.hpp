#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latpair/matrix.hpp"
#include "latpair/poly.hpp"

namespace latpair {

// ---------------------------------------------------------------------------
// Normal forms.  Column convention throughout: the columns of a basis matrix
// are the lattice / module generators, so all normal forms act by column
// operations (right multiplication by unimodular matrices).
// ---------------------------------------------------------------------------

struct HnfResult {
    IntMat h; // H = M * U, lower-triangular column Hermite form, zero columns trailing
    IntMat u; // unimodular
};

/// Column-style Hermite normal form.  Pivots have positive sign, entries to
/// the left of a pivot in its row are reduced into [0, pivot).
HnfResult hnf(const IntMat& m);

struct SnfResult {
    std::vector<Int> d; // nonzero invariant factors, d1 | d2 | ... , all > 0
    IntMat u, v;        // unimodular, u * M * v = diag(d, 0...)
};

SnfResult snf(const IntMat& m);

// ---------------------------------------------------------------------------
// Rational linear algebra.
// ---------------------------------------------------------------------------

/// Basis of {x : Mx = 0}; columns cleared to primitive integer vectors.
RatMat rational_kernel(const RatMat& m);

/// Column space basis in reduced column echelon form (unique canonical form).
RatMat column_echelon(const RatMat& m);

long rank(const RatMat& m);

Rat det(const RatMat& m);
Int det(const IntMat& m);

/// Inverse of a nonsingular square matrix.
RatMat inverse(const RatMat& m);

/// One solution x of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

/// Solutions of A X = B columnwise, or nullopt if any column is inconsistent.
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);

/// Scale each column to a primitive integer vector (content 1, first nonzero
/// entry positive).  Zero columns are dropped.
RatMat primitive_columns(const RatMat& m);

// ---------------------------------------------------------------------------
// Characteristic polynomials of lattice endomorphisms.
// ---------------------------------------------------------------------------

/// det(tI - M) via Faddeev-LeVerrier.  Errors unless all coefficients are
/// integers (i.e. unless M could preserve a lattice).
IntPoly char_poly(const RatMat& m);

struct UnitRootSplit {
    long r;      // multiplicity of the root t = 1
    Int p1;      // q(1) > 0
    IntPoly q;   // p(t) = +- (t-1)^r q(t)
};

/// Split off the maximal (t-1)-power of a characteristic polynomial.
UnitRootSplit strip_unit_root(const IntPoly& p);

struct CyclotomicFactorization {
    std::map<long, long> multiplicity;  // m -> a_m with q = prod Phi_m^{a_m}
    Int prime_power_product;            // prod over prime powers m = q^k of q^{a_m}
    long order;                         // lcm of the m with a_m > 0 (1 for constant q)
};

/// Factor q as a product of cyclotomic polynomials; errors if a nontrivial
/// non-cyclotomic factor remains (the operator was not of finite order).
CyclotomicFactorization cyclotomic_multiplicities(const IntPoly& q);

} // namespace latpair
