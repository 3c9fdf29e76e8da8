#include "latpair/tamagawa.hpp"

namespace latpair {

AbVarLocalData::AbVarLocalData(LatticePair pair) : pair_(std::move(pair)) {
    check_input(pair_.is_dual_pair(),
                "abelian-variety data requires Lambda' = Lambda^dual under the pairing");
}

Int tamagawa_number(const AbVarLocalData& data) {
    return fixed_points_direct(data.pair());
}

AbVarLocalData base_change(const AbVarLocalData& data, const ExtensionSpec& ext) {
    check_input(ext.e >= 1 && ext.f >= 1, "extension degrees must be >= 1");
    LatticePair p = data.pair().with_scaled_sublattice(ext.e).with_frobenius_power(ext.f);
    return AbVarLocalData(std::move(p));
}

Int tamagawa_via_bgroup(const AbVarLocalData& data, const ExtensionSpec& ext) {
    check_input(ext.e >= 1 && ext.f >= 1, "extension degrees must be >= 1");
    long n = data.frobenius_order();
    check_input(gcd(Int(ext.f), Int(n)) == 1,
                "B-based change of Tamagawa number needs gcd(f, n) = 1");
    FinAbGroup b = bgroup(data.pair());
    Int c = tamagawa_number(data);
    return b.torsion_count(ext.e) * c *
           pow(ext.e, static_cast<unsigned long>(data.split_toric_dim()));
}

namespace {

TypeDescriptor step_f2(const TypeDescriptor& t) {
    const Int &n = t.n(), &m = t.m();
    switch (t.kind()) {
        case TypeKind::T1: return t;
        case TypeKind::T2: return TypeDescriptor(TypeKind::T1, n);
        case TypeKind::T11: return t;
        case TypeKind::T12A: return TypeDescriptor(TypeKind::T11, n, m);
        case TypeKind::T12B: {
            long vn = valuation(n, 2), vm = valuation(m, 2);
            if (vn > vm) return TypeDescriptor(TypeKind::T11, 2 * n, m / 2);
            if (vn < vm) return TypeDescriptor(TypeKind::T11, n / 2, 2 * m);
            return TypeDescriptor(TypeKind::T11, n, m);
        }
        case TypeKind::T22: return TypeDescriptor(TypeKind::T11, n, m);
        case TypeKind::T33: return t;
        case TypeKind::T44: return TypeDescriptor(TypeKind::T22, n, n);
        case TypeKind::T66: return TypeDescriptor(TypeKind::T33, n);
    }
    throw internal_error("unreachable");
}

TypeDescriptor step_f3(const TypeDescriptor& t) {
    const Int& n = t.n();
    switch (t.kind()) {
        case TypeKind::T33: return TypeDescriptor(TypeKind::T11, n, 3 * n);
        case TypeKind::T66: return TypeDescriptor(TypeKind::T22, n, 3 * n);
        default: return t;
    }
}

} // namespace

TypeDescriptor type_base_change(const TypeDescriptor& t, const ExtensionSpec& ext) {
    check_input(ext.e >= 1 && ext.f >= 1, "extension degrees must be >= 1");
    TypeDescriptor out = t.two_parameter()
                             ? TypeDescriptor(t.kind(), t.n() * ext.e, t.m() * ext.e)
                             : TypeDescriptor(t.kind(), t.n() * ext.e);
    long f = ext.f;
    while (f % 2 == 0) {
        out = step_f2(out);
        f /= 2;
    }
    while (f % 3 == 0) {
        out = step_f3(out);
        f /= 3;
    }
    // the remaining part of f is coprime to every occurring Frobenius order
    return out;
}

TowerResult tower_stabilize(const AbVarLocalData& data,
                            const std::vector<ExtensionSpec>& tower) {
    check_input(!tower.empty(), "tower must contain at least one level");
    for (std::size_t k = 0; k + 1 < tower.size(); ++k) {
        check_input(tower[k + 1].e % tower[k].e == 0 && tower[k + 1].f % tower[k].f == 0,
                    "tower levels must be nested");
    }
    std::vector<Int> c(tower.size());
    std::vector<long> r(tower.size());
    for (std::size_t k = 0; k < tower.size(); ++k) {
        AbVarLocalData level = base_change(data, tower[k]);
        c[k] = tamagawa_number(level);
        r[k] = level.split_toric_dim();
    }
    TowerResult res;
    for (std::size_t k0 = 0; k0 < tower.size(); ++k0) {
        long rinf = r[k0];
        Rat constant = Rat(c[k0]) / Rat(pow(tower[k0].e, static_cast<unsigned long>(rinf)));
        bool ok = true;
        for (std::size_t k = k0; k < tower.size(); ++k) {
            if (r[k] != rinf ||
                Rat(c[k]) != constant * Rat(pow(tower[k].e, static_cast<unsigned long>(rinf)))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.constant = constant;
            res.r_inf = rinf;
            res.k0 = k0;
            // Stabilization needs at least two confirming levels; a single
            // point is never enough evidence.
            res.determined = tower.size() - k0 >= 2;
            return res;
        }
    }
    return res; // undetermined
}

Int c_up_to_squares(const AbVarLocalData& data, const ExtensionSpec& ext) {
    return up_to_squares(data.pair(), ext.e, ext.f);
}

} // namespace latpair
