#include "latpair/invariants.hpp"

namespace latpair {

namespace {

MixedModule image_subspace(const RatMat& d) {
    return MixedModule::from_subspace(column_echelon(d));
}

MixedModule kernel_subspace(const RatMat& d) {
    return MixedModule::from_subspace(rational_kernel(d));
}

void check_semisimple_at_zero(const RatMat& d) {
    check_input(rank(d) == rank(d * d), "V[D] != V[D^2]: eigenvalue-0 Jordan blocks");
}

} // namespace

FinAbGroup separation_group(const Lattice& lambda, const RatMat& d) {
    check_input(d.is_square() && d.rows() == lambda.dim(), "endomorphism shape mismatch");
    check_input(lambda.stable_under(d), "D must stabilize the lattice");
    check_semisimple_at_zero(d);

    MixedModule lm = lambda.mixed();
    MixedModule n = mm_sum(mm_intersect(lm, image_subspace(d)),
                           mm_intersect(lm, kernel_subspace(d)));
    FiniteQuotient q(lm, n);
    FinAbGroup g = q.group();
    IntMat endo = q.induced_endomorphism(d);
    check_internal(endo.is_zero(), "induced D action on T must vanish");
    g.induced_endo = endo;
    return g;
}

FinAbGroup bgroup(const Lattice& lambda, const Lattice& lambda_prime, const RatMat& d) {
    check_input(d.is_square() && d.rows() == lambda.dim(), "endomorphism shape mismatch");
    check_input(lambda.contains(lambda_prime), "Lambda' must be a sublattice");
    check_input(lambda.stable_under(d), "D must stabilize Lambda");
    check_input(lambda_prime.stable_under(d), "D must stabilize Lambda'");
    check_semisimple_at_zero(d);

    MixedModule lm = lambda.mixed();
    MixedModule num = mm_sum(lm, mm_preimage(lambda_prime.mixed(), d));
    MixedModule den = mm_sum(lm, kernel_subspace(d));
    FiniteQuotient q(num, den);
    FinAbGroup g = q.group();
    IntMat endo = q.induced_endomorphism(d);
    check_internal(endo.is_zero(), "induced D action on B must vanish");
    g.induced_endo = endo;
    return g;
}

FinAbGroup bgroup(const LatticePair& pair) {
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());
    FinAbGroup g = bgroup(pair.lambda(), pair.lambda_prime(), d);
    long bound = static_cast<long>(pair.dim()) - pair.fixed_rank();
    check_internal(static_cast<long>(g.invariant_factors().size()) <= bound,
                   "B needs more than d - r generators");
    return g;
}

FinAbGroup bgroup_scale(const FinAbGroup& b, const Int& e) {
    check_input(e >= 1, "scale must be >= 1");
    return b.mod_torsion(e);
}

Int fixed_points_direct(const LatticePair& pair, const Int& e, long f) {
    check_input(e >= 1 && f >= 1, "extension degrees must be >= 1");
    RatMat df = pair.frobenius_power(f) - RatMat::identity(pair.dim());
    MixedModule esub = pair.lambda_prime().scaled(e).mixed();
    MixedModule fixed = mm_intersect(pair.lambda().mixed(), mm_preimage(esub, df));
    return FiniteQuotient(fixed, esub).order();
}

FixedPointCertificate fixed_points_formula(const LatticePair& pair, const Int& e) {
    check_input(e >= 1, "e must be >= 1");
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());

    auto split = strip_unit_root(pair.frobenius_char_poly());
    FinAbGroup tprime = separation_group(pair.lambda_prime(), d);
    FinAbGroup b = bgroup(pair);

    // [Lambda^F : Lambda'^F]
    MixedModule vf = kernel_subspace(d);
    FiniteQuotient fixq(mm_intersect(pair.lambda().mixed(), vf),
                        mm_intersect(pair.lambda_prime().mixed(), vf));

    FixedPointCertificate c;
    c.fixed_index = fixq.order();
    c.p1 = split.p1;
    c.r = split.r;
    c.t_order = tprime.order();
    c.b_order = b.order();
    c.b_etorsion = b.torsion_count(e);
    Rat count = Rat(c.b_etorsion) / Rat(c.b_order) * Rat(c.fixed_index) * Rat(c.p1) /
                Rat(c.t_order) * Rat(pow(e, static_cast<unsigned long>(c.r)));
    c.count = to_integer(count);
    check_internal(c.count >= 1, "fixed point count must be positive");
    return c;
}

namespace {

// (D|_{DV})^{-1} y: any solution of D z = y, projected onto DV along V[D].
std::vector<Rat> restricted_inverse(const RatMat& d, const std::vector<Rat>& y) {
    auto z = solve(d, y);
    check_input(z.has_value(), "vector is not in DV");
    RatMat dv = column_echelon(d);
    RatMat ker = rational_kernel(d);
    RatMat basis = dv.hcat(ker);
    auto c = solve(basis, *z);
    check_internal(c.has_value(), "DV + V[D] failed to span");
    std::vector<Rat> out(y.size(), Rat(0));
    for (std::size_t j = 0; j < dv.cols(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += (*c)[j] * dv(i, j);
    return out;
}

Rat mod_one(const Rat& x) {
    Int fl = fdiv(x.get_num(), x.get_den());
    return x - Rat(fl);
}

} // namespace

Rat bgroup_pairing_value(const LatticePair& pair, const std::vector<Rat>& x,
                         const std::vector<Rat>& y) {
    check_input(pair.is_dual_pair(), "pairing requires a dual pair");
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());
    MixedModule dv = image_subspace(d);
    MixedModule ok = mm_intersect(pair.lambda_prime().mixed(), dv);
    check_input(ok.contains(x) && ok.contains(y),
                "pairing arguments must lie in Lambda^dual cap DV");
    std::vector<Rat> z = restricted_inverse(d, y);
    Rat val = 0;
    const RatMat& g = *pair.gram();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) val += x[i] * g(i, j) * z[j];
    return mod_one(val);
}

BGroupPairing bgroup_pairing(const LatticePair& pair) {
    check_input(pair.is_dual_pair(), "pairing requires a dual pair");
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());
    MixedModule dualm = pair.lambda_prime().mixed();
    MixedModule num = mm_intersect(dualm, image_subspace(d));
    MixedModule den = mm_intersect(dualm, mm_image(pair.lambda().mixed(), d));
    FiniteQuotient q(num, den);

    BGroupPairing out;
    out.group = q.group();
    out.generators = *out.group.generators;
    const std::size_t n = out.generators.cols();
    out.values = RatMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.values(i, j) =
                bgroup_pairing_value(pair, out.generators.col(i), out.generators.col(j));
    return out;
}

bool pairing_is_perfect(const BGroupPairing& p) {
    const auto& d = p.group.invariant_factors();
    const std::size_t n = d.size();
    Int order = p.group.order();
    check_input(order <= 100000, "pairing radical enumeration too large");
    // a is in the radical iff sum_i a_i <g_i, g_j> is integral for all j.
    std::vector<Int> a(n, 0);
    long radical = 0;
    while (true) {
        bool inrad = true;
        for (std::size_t j = 0; j < n && inrad; ++j) {
            Rat v = 0;
            for (std::size_t i = 0; i < n; ++i) v += Rat(a[i]) * p.values(i, j);
            if (!is_integer(v)) inrad = false;
        }
        if (inrad) ++radical;
        // next tuple
        std::size_t k = 0;
        while (k < n) {
            a[k] += 1;
            if (a[k] < d[k]) break;
            a[k] = 0;
            ++k;
        }
        if (k == n) break;
        if (n == 0) break;
    }
    if (n == 0) return true;
    return radical == 1;
}

bool pairing_is_antisymmetric(const BGroupPairing& p) {
    const std::size_t n = p.generators.cols();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat s = p.values(i, j) + p.values(j, i);
            if (!is_integer(s)) return false;
        }
    return true;
}

Int up_to_squares(const LatticePair& pair, const Int& e, long f) {
    check_input(pair.is_dual_pair(), "up-to-squares law requires a dual pair");
    check_input(e >= 1 && f >= 1, "extension degrees must be >= 1");

    if (f % 2 == 0) {
        Int idx = pair.lambda().index_of(pair.lambda_prime());
        return squarefree_part(Int(idx * pow(e, pair.dim())));
    }
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());
    auto split = strip_unit_root(pair.frobenius_char_poly());
    MixedModule vf = kernel_subspace(d);
    Int fixed_index = FiniteQuotient(mm_intersect(pair.lambda().mixed(), vf),
                                     mm_intersect(pair.lambda_prime().mixed(), vf))
                          .order();
    Int t_order = separation_group(pair.lambda(), d).order();
    Int er = pow(e, static_cast<unsigned long>(split.r));
    if (e % 2 == 0) {
        Rat v = Rat(fixed_index) * Rat(split.p1) / Rat(t_order) * Rat(er);
        return squarefree_part(to_integer(v));
    }
    Int b_order = bgroup(pair).order();
    Rat v = Rat(fixed_index) * Rat(split.p1) / (Rat(b_order) * Rat(t_order)) * Rat(er);
    return squarefree_part(to_integer(v));
}

} // namespace latpair
