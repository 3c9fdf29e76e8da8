#pragma once

#include "latpair/lattice.hpp"

namespace latpair {

// ---------------------------------------------------------------------------
// The separation group T_D(Lambda) and the group B controlling sporadic
// growth of fixed points, with their exact fixed-point formulas.
// ---------------------------------------------------------------------------

/// T_D(Lambda) = Lambda / ((Lambda cap DV) + (Lambda cap V[D])).
/// Requires D Lambda inside Lambda and rank(D) = rank(D^2); the induced D
/// action on the result is asserted to be zero and stored.
FinAbGroup separation_group(const Lattice& lambda, const RatMat& d);

/// B_{Lambda, Lambda'} = (Lambda + D^{-1} Lambda') / (Lambda + V[D]) for a
/// general D with rank(D) = rank(D^2) stabilizing both lattices.
FinAbGroup bgroup(const Lattice& lambda, const Lattice& lambda_prime, const RatMat& d);

/// The pair version, with D = F - 1.
FinAbGroup bgroup(const LatticePair& pair);

/// Scaling law: B_{Lambda, e Lambda'} = B/B[e], computed on invariant factors.
FinAbGroup bgroup_scale(const FinAbGroup& b, const Int& e);

/// |(Lambda/e Lambda')^{F^f}| as the index [Lambda cap (F^f-1)^{-1}(e Lambda') : e Lambda'],
/// by exact lattice arithmetic with no counting.
Int fixed_points_direct(const LatticePair& pair, const Int& e = 1, long f = 1);

struct FixedPointCertificate {
    Int count;          // |B[e]|/|B| * fixed_index * p1 / |T'| * e^r
    Int fixed_index;    // [Lambda^F : Lambda'^F]
    Int p1;             // P = p(1) for char poly +-(t-1)^r p(t)
    Int t_order;        // |T_D(Lambda')|
    Int b_order;        // |B|
    Int b_etorsion;     // |B[e]|
    long r;             // rank of Lambda^F
};

/// The closed-form fixed-point count with its certificate.
FixedPointCertificate fixed_points_formula(const LatticePair& pair, const Int& e = 1);

/// Pairing value <x, y> = (x, (D|_{DV})^{-1} y) mod Z, in [0, 1).
/// Requires a dual pair; x and y must lie in Lambda^dual cap DV.
Rat bgroup_pairing_value(const LatticePair& pair, const std::vector<Rat>& x,
                         const std::vector<Rat>& y);

struct BGroupPairing {
    FinAbGroup group;  // (Lambda^dual cap DV)/(Lambda^dual cap D Lambda), iso to B
    RatMat generators; // columns, representatives in Lambda^dual cap DV
    RatMat values;     // values(i,j) = <g_i, g_j> in [0, 1)
};

/// The perfect antisymmetric pairing on B for a dual pair, evaluated on
/// SNF-adapted generators.
BGroupPairing bgroup_pairing(const LatticePair& pair);

/// True iff the pairing has trivial radical (checked by enumeration; the
/// group order must stay reasonable).
bool pairing_is_perfect(const BGroupPairing& p);
bool pairing_is_antisymmetric(const BGroupPairing& p);

/// Squarefree part of |(Lambda/e Lambda^dual)^{F^f}| via the three-case
/// parity law; requires a dual pair.
Int up_to_squares(const LatticePair& pair, const Int& e, long f);

} // namespace latpair
