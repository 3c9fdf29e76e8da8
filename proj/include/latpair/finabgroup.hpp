#pragma once

#include <optional>
#include <vector>

#include "latpair/matrix.hpp"

namespace latpair {

/// Finite abelian group, stored as invariant factors d1 | d2 | ... with all
/// di >= 2 (the trivial group has no factors).  Optionally carries coset
/// representatives in the ambient space and the matrix of an induced
/// endomorphism on those generators.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<Int> invariant_factors);

    /// Normalizes an arbitrary list of cyclic orders (e.g. {2,3} for
    /// C2 x C3) into an invariant-factor chain ({6}).
    static FinAbGroup from_cyclic_orders(const std::vector<Int>& orders);

    static FinAbGroup trivial() { return FinAbGroup(); }

    const std::vector<Int>& invariant_factors() const { return d_; }
    bool is_trivial() const { return d_.empty(); }

    Int order() const;
    Int exponent() const { return d_.empty() ? Int(1) : d_.back(); }

    /// Order of the e-torsion subgroup, prod gcd(di, e); never enumerates.
    Int torsion_count(const Int& e) const;

    /// Invariant factors of A/A[e]: di / gcd(di, e) with trivial factors dropped.
    FinAbGroup mod_torsion(const Int& e) const;

    bool operator==(const FinAbGroup& o) const { return d_ == o.d_; }
    bool operator!=(const FinAbGroup& o) const { return d_ != o.d_; }

    std::string str() const;

    // Ambient data (optional).
    std::optional<RatMat> generators;   // columns are coset representatives
    std::optional<IntMat> induced_endo; // action on the generators, entries mod di

private:
    std::vector<Int> d_;
};

} // namespace latpair
