#pragma once

#include "latpair/classification.hpp"
#include "latpair/oracle.hpp"

namespace latpair {

/// Local field extension data: ramification degree e, residue degree f.
struct ExtensionSpec {
    Int e = 1;
    long f = 1;
};

/// Local data of a semistable principally polarised abelian variety:
/// (Lambda, Lambda^dual, Frobenius, monodromy Gram) plus the derived toric
/// dimension d, split toric dimension r and Frobenius order n.
class AbVarLocalData {
public:
    explicit AbVarLocalData(LatticePair pair);

    const LatticePair& pair() const { return pair_; }
    long toric_dim() const { return static_cast<long>(pair_.dim()); }
    long split_toric_dim() const { return pair_.fixed_rank(); }
    long frobenius_order() const { return pair_.order(); }

private:
    LatticePair pair_;
};

/// c = |(Lambda/Lambda^dual)^F|.
Int tamagawa_number(const AbVarLocalData& data);

/// Base change: Lambda fixed, Lambda^dual scaled by e, F replaced by F^f,
/// Gram rescaled by 1/e so the pair stays dual.
AbVarLocalData base_change(const AbVarLocalData& data, const ExtensionSpec& ext);

/// c over the extension via |B[e]| . c . e^r; requires gcd(f, n) = 1.
Int tamagawa_via_bgroup(const AbVarLocalData& data, const ExtensionSpec& ext);

/// The table transition on rank-2 types: scale parameters by e, then apply
/// the f = 2 / f = 3 moves for each prime factor of f in {2, 3}.
TypeDescriptor type_base_change(const TypeDescriptor& t, const ExtensionSpec& ext);

struct TowerResult {
    bool determined = false;
    Rat constant;      // C with c_k = C e_k^{r_inf} beyond level k0
    long r_inf = 0;
    std::size_t k0 = 0;
};

/// Stabilization c_k = C e_k^{r_inf} along a nested tower of extensions.
/// Verified against the exact Tamagawa number at every provided level; when
/// fewer than two trailing levels confirm the law the result is explicitly
/// undetermined.
TowerResult tower_stabilize(const AbVarLocalData& data,
                            const std::vector<ExtensionSpec>& tower);

/// Squarefree class of c over the extension via the parity-case law.
Int c_up_to_squares(const AbVarLocalData& data, const ExtensionSpec& ext);

} // namespace latpair
