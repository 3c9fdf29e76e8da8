#pragma once

#include <optional>

#include "latpair/linalg.hpp"
#include "latpair/mixed_module.hpp"

namespace latpair {

/// Full-rank lattice in Q^d, represented by a canonical (column-HNF) basis.
class Lattice {
public:
    explicit Lattice(const RatMat& basis);

    static Lattice standard(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }

    MixedModule mixed() const { return MixedModule::from_lattice_basis(basis_); }

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return basis_ != o.basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Lattice& sub) const;

    /// [this : sub]; requires containment.
    Int index_of(const Lattice& sub) const;

    Lattice scaled(const Int& e) const;

    /// F L subset of L.
    bool stable_under(const RatMat& f) const;

private:
    RatMat basis_;
};

/// Dual lattice {v : (v, x) in Z for all x in L} for the pairing
/// (x, y) = x^T G y; the basis is B (B^T G B)^{-1}.
Lattice dual_lattice(const Lattice& l, const RatMat& gram);

/// The universal input of the invariant computations: a full-rank F-stable
/// lattice pair Lambda' inside Lambda with F of finite order, optionally a
/// compatible pairing.
class LatticePair {
public:
    LatticePair(Lattice lambda, Lattice lambda_prime, RatMat frobenius,
                std::optional<RatMat> gram = std::nullopt);

    const Lattice& lambda() const { return lambda_; }
    const Lattice& lambda_prime() const { return lambda_prime_; }
    const RatMat& frobenius() const { return f_; }
    const std::optional<RatMat>& gram() const { return gram_; }

    std::size_t dim() const { return lambda_.dim(); }
    /// Order of F.
    long order() const { return order_; }
    /// Rank of the F-fixed sublattice (multiplicity of 1 as an eigenvalue).
    long fixed_rank() const { return fixed_rank_; }
    /// Lambda' is the dual of Lambda under the supplied pairing.
    bool is_dual_pair() const { return dual_pair_; }

    IntPoly frobenius_char_poly() const;
    RatMat frobenius_power(long f) const;

    /// Same lattices, F replaced by F^f.  Still a valid pair.
    LatticePair with_frobenius_power(long f) const;
    /// Lambda' scaled by e; the gram matrix is rescaled by 1/e so that a
    /// dual pair stays dual.
    LatticePair with_scaled_sublattice(const Int& e) const;
    /// Base change under conjugation by a unimodular T.
    LatticePair conjugated(const RatMat& t) const;

private:
    Lattice lambda_, lambda_prime_;
    RatMat f_;
    std::optional<RatMat> gram_;
    long order_, fixed_rank_;
    bool dual_pair_;
};

} // namespace latpair
