#pragma once

#include <optional>
#include <vector>

#include "latpair/finabgroup.hpp"
#include "latpair/linalg.hpp"

namespace latpair {

/// An element of L(V): a subset of Q^d of the form U + L with U a subspace
/// and L a finitely generated Z-module.  Stored in canonical form, so that
/// equality and containment are decidable by direct comparison:
///   - subspace_basis is in reduced column echelon form;
///   - lattice_gens have their components along U projected away (they
///     vanish on the pivot rows of U) and are column-Hermite reduced.
class MixedModule {
public:
    explicit MixedModule(std::size_t ambient_dim);
    MixedModule(std::size_t ambient_dim, const RatMat& subspace, const RatMat& gens);

    static MixedModule zero(std::size_t dim) { return MixedModule(dim); }
    static MixedModule full_space(std::size_t dim);
    static MixedModule from_subspace(const RatMat& basis);
    static MixedModule from_lattice_basis(const RatMat& basis);

    std::size_t ambient_dim() const { return dim_; }
    const RatMat& subspace_basis() const { return u_; }
    const RatMat& lattice_gens() const { return gens_; }

    long dim_minus() const { return static_cast<long>(u_.cols()); }
    long dim_plus() const { return static_cast<long>(u_.cols() + gens_.cols()); }
    long codim_minus() const { return static_cast<long>(dim_) - dim_minus(); }
    long codim_plus() const { return static_cast<long>(dim_) - dim_plus(); }

    bool operator==(const MixedModule& o) const {
        return dim_ == o.dim_ && u_ == o.u_ && gens_ == o.gens_;
    }
    bool operator!=(const MixedModule& o) const { return !(*this == o); }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const MixedModule& n) const;

private:
    void canonicalize();

    std::size_t dim_;
    RatMat u_;            // subspace basis, reduced column echelon
    RatMat gens_;         // lattice generators, reduced mod U and HNF'd
    std::vector<std::size_t> pivots_; // pivot rows of u_
    friend MixedModule mm_project_generators(const MixedModule&);
    friend std::vector<Rat> project_mod_subspace(const MixedModule&, const std::vector<Rat>&);
};

/// v with its U-component removed (zero on the pivot rows of M's subspace).
std::vector<Rat> project_mod_subspace(const MixedModule& m, const std::vector<Rat>& v);

MixedModule mm_sum(const MixedModule& m, const MixedModule& n);

/// Pairing-free intersection via the kernel of the concatenated generator
/// matrix.
MixedModule mm_intersect(const MixedModule& m, const MixedModule& n);

/// Intersection as (M^dual + N^dual)^dual; requires a Gram matrix.
MixedModule mm_intersect(const MixedModule& m, const MixedModule& n, const RatMat& gram);

/// Dual {v : (v, s) in Z for all s in M} with respect to the symmetric
/// nondegenerate pairing (x, y) = x^T G y.
MixedModule mm_dual(const MixedModule& m, const RatMat& gram);

MixedModule mm_image(const MixedModule& m, const RatMat& alpha);

/// alpha^{-1} M; the subspace part always contains ker(alpha).
MixedModule mm_preimage(const MixedModule& m, const RatMat& alpha);

/// Structure of the finite quotient M/N together with reduction of ambient
/// vectors to quotient coordinates.
class FiniteQuotient {
public:
    /// Requires N subset of M with equal subspace parts and equal Q-span.
    FiniteQuotient(const MixedModule& m, const MixedModule& n);

    const FinAbGroup& group() const { return group_; }
    Int order() const { return group_.order(); }

    /// Coordinates of v mod N with respect to the SNF-adapted generators;
    /// one entry in [0, di) per nontrivial invariant factor.
    std::vector<Int> reduce(const std::vector<Rat>& v) const;

    /// Matrix of the endomorphism induced by `alpha` on the generators.
    IntMat induced_endomorphism(const RatMat& alpha) const;

private:
    MixedModule m_;
    std::vector<Int> d_;      // all SNF factors of the quotient, with 1s
    RatMat basis_;            // adapted basis C of the lattice part of M
    RatMat full_gens_;        // generators with nontrivial factor (columns)
    FinAbGroup group_;
};

/// Invariant factors of M/N; generators are retained on the result, and the
/// induced endomorphism is stored when `alpha` is given.
FinAbGroup mm_finite_quotient(const MixedModule& m, const MixedModule& n,
                              const std::optional<RatMat>& alpha = std::nullopt);

} // namespace latpair
