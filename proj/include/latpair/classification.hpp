#pragma once

#include <string>
#include <vector>

#include "latpair/invariants.hpp"

namespace latpair {

enum class TypeKind { T1, T2, T11, T12A, T12B, T22, T33, T44, T66 };

/// A rank-1 or rank-2 lattice-pair type.  Parameters are canonicalized on
/// construction: for 1.1 and 2.2 the pair (n, m) is replaced by the
/// invariant factors of C_n x C_m, matching the isomorphism criterion.
/// Type 1.2B requires n = m mod 2.
class TypeDescriptor {
public:
    TypeDescriptor(TypeKind kind, Int n);
    TypeDescriptor(TypeKind kind, Int n, Int m);

    TypeKind kind() const { return kind_; }
    const Int& n() const { return n_; }
    const Int& m() const { return m_; }
    bool two_parameter() const;
    bool two_dimensional() const { return kind_ != TypeKind::T1 && kind_ != TypeKind::T2; }

    /// Grammar: "1:n" | "2:n" | "1.1:n,m" | "1.2A:n,m" | "1.2B:n,m" |
    ///          "2.2:n,m" | "3.3:n" | "4.4:n" | "6.6:n"
    std::string str() const;
    static TypeDescriptor parse(const std::string& s);

    bool operator==(const TypeDescriptor& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_;
    }
    bool operator!=(const TypeDescriptor& o) const { return !(*this == o); }

private:
    TypeKind kind_;
    Int n_, m_;
};

/// Recognize the type of a rank <= 2 pair.  Rejects pairs that are not
/// isomorphic to a classified model (e.g. non-dual-shaped sublattices).
TypeDescriptor classify(const LatticePair& pair);

/// The model pair of the classification table, with a Gram matrix realizing
/// Lambda' as the exact dual of Lambda.
LatticePair make_type(const TypeDescriptor& t);

struct TypeInvariants {
    FinAbGroup t; // separation group
    FinAbGroup b;
    Int c;        // |(Lambda/Lambda^dual)^F|
};

/// Closed-form table entries; agrees with the engine on make_type(t).
TypeInvariants type_invariants(const TypeDescriptor& t);

/// Lattice Z[zeta_n] with F acting as multiplication by zeta_n and the
/// pairing (x, y) = Tr(omega^{-1} x conj(y)).  `omega` is a polynomial in
/// zeta_n (ascending coefficients, degree < phi(n)); it must be fixed by
/// complex conjugation and make the dual lattice integral.
LatticePair cyclotomic_pair(long n, const std::vector<Rat>& omega);

/// All omega = c0 + sum_j c_j (zeta^j + zeta^-j) with |c_j| <= bound that
/// yield a valid cyclotomic pair, in scan order, up to max_results.
std::vector<std::vector<Rat>> scan_cyclotomic_omegas(long n, long bound,
                                                     std::size_t max_results = 64);

/// Fixed-point count of Lambda/e Lambda^dual for the faithful irreducible
/// C_n-lattice: q when n = q^s is an odd prime power; 2 when n = 2^s and
/// [Lambda : e Lambda^dual] is even (base_index_odd and e determine this);
/// 1 otherwise.
Int c_n_closed_form(long n, bool base_index_odd, const Int& e);

/// Block-permutation pair: Lambda' is the permutation lattice with the
/// given orbit sizes, Lambda an optional F-stable overlattice (defaults to
/// Lambda').  Asserts T(Lambda') = prod C_{m_i} and trivial B.
LatticePair permutation_pair(const std::vector<long>& orbit_sizes,
                             const std::optional<Lattice>& overlattice = std::nullopt);

} // namespace latpair
