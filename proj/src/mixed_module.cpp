#include "latpair/mixed_module.hpp"

#include <algorithm>

namespace latpair {

namespace {

// Reduced column echelon form together with its pivot rows.
std::pair<RatMat, std::vector<std::size_t>> echelon_with_pivots(const RatMat& m) {
    RatMat e = column_echelon(m);
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < e.cols(); ++j)
        for (std::size_t i = 0; i < e.rows(); ++i)
            if (e(i, j) != 0) {
                pivots.push_back(i);
                break;
            }
    return {std::move(e), std::move(pivots)};
}

// Canonical basis of the lattice spanned by the columns over Z: scale to an
// integer matrix, column-HNF, scale back; zero columns dropped.
RatMat lattice_hnf(const RatMat& gens) {
    if (gens.cols() == 0) return RatMat(gens.rows(), 0);
    Int den = common_denominator(gens);
    IntMat scaled(gens.rows(), gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            Rat x = gens(i, j) * Rat(den);
            scaled(i, j) = to_integer(x);
        }
    IntMat h = hnf(scaled).h;
    std::size_t nz = h.cols();
    while (nz > 0) {
        bool zero = true;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h(i, nz - 1) != 0) zero = false;
        if (!zero) break;
        --nz;
    }
    RatMat out(gens.rows(), nz);
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < nz; ++j) out(i, j) = Rat(h(i, j)) / Rat(den);
    return out;
}

} // namespace

MixedModule::MixedModule(std::size_t ambient_dim)
    : dim_(ambient_dim), u_(ambient_dim, 0), gens_(ambient_dim, 0) {
    check_input(ambient_dim > 0, "ambient dimension must be positive");
}

MixedModule::MixedModule(std::size_t ambient_dim, const RatMat& subspace, const RatMat& gens)
    : dim_(ambient_dim), u_(subspace), gens_(gens) {
    check_input(ambient_dim > 0, "ambient dimension must be positive");
    check_input(subspace.rows() == ambient_dim && gens.rows() == ambient_dim,
                "mixed module: generator shape mismatch");
    canonicalize();
}

MixedModule MixedModule::full_space(std::size_t dim) {
    return MixedModule(dim, to_rational(IntMat::identity(dim)), RatMat(dim, 0));
}

MixedModule MixedModule::from_subspace(const RatMat& basis) {
    return MixedModule(basis.rows(), basis, RatMat(basis.rows(), 0));
}

MixedModule MixedModule::from_lattice_basis(const RatMat& basis) {
    return MixedModule(basis.rows(), RatMat(basis.rows(), 0), basis);
}

void MixedModule::canonicalize() {
    auto [e, piv] = echelon_with_pivots(u_);
    u_ = std::move(e);
    pivots_ = std::move(piv);
    if (gens_.cols() == 0) {
        gens_ = RatMat(dim_, 0);
        return;
    }
    // Remove the U-component of each generator: subtract the unique
    // U-combination matching its pivot-row coordinates.
    RatMat proj = gens_;
    for (std::size_t j = 0; j < proj.cols(); ++j)
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            Rat c = proj(pivots_[k], j);
            if (c == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i) proj(i, j) -= c * u_(i, k);
        }
    gens_ = lattice_hnf(proj);
}

std::vector<Rat> project_mod_subspace(const MixedModule& m, const std::vector<Rat>& v) {
    std::vector<Rat> w = v;
    for (std::size_t k = 0; k < m.pivots_.size(); ++k) {
        Rat c = w[m.pivots_[k]];
        if (c == 0) continue;
        for (std::size_t i = 0; i < m.dim_; ++i) w[i] -= c * m.u_(i, k);
    }
    return w;
}

bool MixedModule::contains(const std::vector<Rat>& v) const {
    check_input(v.size() == dim_, "vector dimension mismatch");
    std::vector<Rat> w = project_mod_subspace(*this, v);
    bool wzero = std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
    if (gens_.cols() == 0) return wzero;
    auto x = solve(gens_, w);
    if (!x) return false;
    for (const auto& xi : *x)
        if (!is_integer(xi)) return false;
    return true;
}

bool MixedModule::contains(const MixedModule& n) const {
    check_input(dim_ == n.dim_, "ambient dimension mismatch");
    // Subspace basis vectors must lie in our subspace part.
    for (std::size_t j = 0; j < n.u_.cols(); ++j) {
        if (u_.cols() == 0) return false;
        auto x = solve(u_, n.u_.col(j));
        if (!x) return false;
    }
    for (std::size_t j = 0; j < n.gens_.cols(); ++j)
        if (!contains(n.gens_.col(j))) return false;
    return true;
}

MixedModule mm_sum(const MixedModule& m, const MixedModule& n) {
    check_input(m.ambient_dim() == n.ambient_dim(), "ambient dimension mismatch");
    return MixedModule(m.ambient_dim(), m.subspace_basis().hcat(n.subspace_basis()),
                       m.lattice_gens().hcat(n.lattice_gens()));
}

namespace {

// Solution set {v in Q^{nq+nz} : A v = 0, last nz coordinates integral},
// as a mixed module in the parameter space.
MixedModule solve_mixed_kernel(const RatMat& a, std::size_t nq, std::size_t nz) {
    const std::size_t n = nq + nz;
    check_internal(a.cols() == n, "solve_mixed_kernel shape mismatch");
    RatMat k = rational_kernel(a);
    if (k.cols() == 0) return MixedModule::zero(n);

    // y-block of the kernel basis.
    RatMat ky(nz, k.cols());
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) ky(i, j) = k(nq + i, j);

    // Directions with vanishing y-part form the subspace of the solution set.
    RatMat z0 = rational_kernel(ky);
    RatMat sub = k * z0;

    // Integer points of the column space of ky: cut out by its defining
    // equations and computed as a saturated integer kernel via HNF.
    RatMat eq = rational_kernel(ky.transpose()).transpose(); // rows annihilate col(ky)
    RatMat latbasis(nz, 0);
    if (eq.rows() == 0) {
        latbasis = to_rational(IntMat::identity(nz));
    } else if (nz > 0) {
        Int den = common_denominator(eq);
        IntMat eqi(eq.rows(), nz);
        for (std::size_t i = 0; i < eq.rows(); ++i)
            for (std::size_t j = 0; j < nz; ++j) eqi(i, j) = to_integer(Rat(eq(i, j) * Rat(den)));
        auto h = hnf(eqi);
        std::vector<std::size_t> zero_cols;
        for (std::size_t j = 0; j < h.h.cols(); ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < h.h.rows(); ++i)
                if (h.h(i, j) != 0) zero = false;
            if (zero) zero_cols.push_back(j);
        }
        latbasis = to_rational(h.u.columns(zero_cols));
    }

    // Lift each integral y back to a full solution.
    RatMat gens(n, latbasis.cols());
    if (latbasis.cols() > 0) {
        auto z = solve(ky, latbasis);
        check_internal(z.has_value(), "integral point failed to lift");
        gens = k * (*z);
    }
    return MixedModule(n, sub, gens);
}

MixedModule apply_map(const RatMat& phi, const MixedModule& w) {
    return MixedModule(phi.rows(), phi * w.subspace_basis(), phi * w.lattice_gens());
}

} // namespace

MixedModule mm_intersect(const MixedModule& m, const MixedModule& n) {
    check_input(m.ambient_dim() == n.ambient_dim(), "ambient dimension mismatch");
    const std::size_t d = m.ambient_dim();
    const RatMat &um = m.subspace_basis(), &un = n.subspace_basis();
    const RatMat &lm = m.lattice_gens(), &ln = n.lattice_gens();
    // Solve um x1 + lm y1 = un x2 + ln y2 with integral y-blocks.
    RatMat a = um.hcat(un * Rat(-1)).hcat(lm).hcat(ln * Rat(-1));
    std::size_t nq = um.cols() + un.cols();
    std::size_t nz = lm.cols() + ln.cols();
    if (a.cols() == 0) return MixedModule::zero(d);
    MixedModule w = solve_mixed_kernel(a, nq, nz);
    // Read the common value through M's generators.
    RatMat phi(d, nq + nz);
    for (std::size_t j = 0; j < um.cols(); ++j)
        for (std::size_t i = 0; i < d; ++i) phi(i, j) = um(i, j);
    for (std::size_t j = 0; j < lm.cols(); ++j)
        for (std::size_t i = 0; i < d; ++i) phi(i, nq + j) = lm(i, j);
    return apply_map(phi, w);
}

MixedModule mm_intersect(const MixedModule& m, const MixedModule& n, const RatMat& gram) {
    return mm_dual(mm_sum(mm_dual(m, gram), mm_dual(n, gram)), gram);
}

MixedModule mm_dual(const MixedModule& m, const RatMat& gram) {
    const std::size_t d = m.ambient_dim();
    check_input(gram.rows() == d && gram.cols() == d, "Gram matrix shape mismatch");
    check_input(gram == gram.transpose(), "Gram matrix must be symmetric");
    check_input(det(gram) != 0, "Gram matrix must be nondegenerate");

    // Adapted basis [U | L | W]; duals of the W-block span the subspace part
    // of the dual, duals of the L-block generate its lattice part.
    RatMat b = m.subspace_basis().hcat(m.lattice_gens());
    std::size_t k = m.subspace_basis().cols(), l = m.lattice_gens().cols();
    for (std::size_t i = 0; i < d && b.cols() < d; ++i) {
        RatMat e(d, 1);
        e(i, 0) = 1;
        RatMat cand = b.hcat(e);
        if (rank(cand) == static_cast<long>(cand.cols())) b = cand;
    }
    check_internal(b.cols() == d, "failed to extend to a full basis");
    RatMat dual = inverse(b.transpose() * gram);
    std::vector<std::size_t> lat_idx, sub_idx;
    for (std::size_t j = k; j < k + l; ++j) lat_idx.push_back(j);
    for (std::size_t j = k + l; j < d; ++j) sub_idx.push_back(j);
    return MixedModule(d, dual.columns(sub_idx), dual.columns(lat_idx));
}

MixedModule mm_image(const MixedModule& m, const RatMat& alpha) {
    check_input(alpha.cols() == m.ambient_dim(), "map shape mismatch");
    return MixedModule(alpha.rows(), alpha * m.subspace_basis(), alpha * m.lattice_gens());
}

MixedModule mm_preimage(const MixedModule& m, const RatMat& alpha) {
    check_input(alpha.is_square() && alpha.rows() == m.ambient_dim(), "map shape mismatch");
    const std::size_t d = m.ambient_dim();
    const RatMat &u = m.subspace_basis(), &l = m.lattice_gens();
    // alpha z = u x + l y, y integral; project the solutions to z.
    RatMat a = alpha.hcat(u * Rat(-1)).hcat(l * Rat(-1));
    MixedModule w = solve_mixed_kernel(a, d + u.cols(), l.cols());
    RatMat phi(d, d + u.cols() + l.cols());
    for (std::size_t i = 0; i < d; ++i) phi(i, i) = 1;
    return apply_map(phi, w);
}

FiniteQuotient::FiniteQuotient(const MixedModule& m, const MixedModule& n) : m_(m) {
    check_input(m.ambient_dim() == n.ambient_dim(), "ambient dimension mismatch");
    check_input(m.contains(n), "quotient requires N contained in M");
    check_input(m.subspace_basis() == n.subspace_basis(),
                "infinite quotient: subspace parts differ");
    check_input(m.dim_plus() == n.dim_plus(), "infinite quotient: Q-spans differ");

    const RatMat &lm = m.lattice_gens(), &ln = n.lattice_gens();
    const std::size_t r = lm.cols();
    if (r == 0) {
        group_ = FinAbGroup::trivial();
        group_.generators = RatMat(m.ambient_dim(), 0);
        basis_ = RatMat(m.ambient_dim(), 0);
        full_gens_ = RatMat(m.ambient_dim(), 0);
        return;
    }
    auto rel = solve(lm, ln);
    check_internal(rel.has_value() && is_integral(*rel), "containment coordinates not integral");
    IntMat reli = to_integral(*rel);
    auto s = snf(reli);
    check_internal(s.d.size() == r, "quotient is infinite");
    // u * rel * v = diag(d)  =>  the columns of lm * u^{-1} are an adapted
    // basis: the quotient is the direct sum of Z c_i / d_i Z c_i.
    RatMat uinv = inverse(to_rational(s.u));
    basis_ = lm * uinv;
    d_ = s.d;
    std::vector<Int> nontrivial;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d_.size(); ++i)
        if (d_[i] > 1) {
            nontrivial.push_back(d_[i]);
            idx.push_back(i);
        }
    full_gens_ = basis_.columns(idx);
    group_ = FinAbGroup(nontrivial);
    group_.generators = full_gens_;
}

std::vector<Int> FiniteQuotient::reduce(const std::vector<Rat>& v) const {
    std::vector<Rat> w = project_mod_subspace(m_, v);
    std::vector<Int> out;
    if (basis_.cols() == 0) {
        for (const auto& x : w) check_input(x == 0, "vector not in M");
        return out;
    }
    auto x = solve(basis_, w);
    check_input(x.has_value(), "vector not in the Q-span of M");
    for (std::size_t i = 0; i < d_.size(); ++i) {
        check_input(is_integer((*x)[i]), "vector not in M");
        if (d_[i] > 1) out.push_back(fmod((*x)[i].get_num(), d_[i]));
    }
    return out;
}

IntMat FiniteQuotient::induced_endomorphism(const RatMat& alpha) const {
    const std::size_t g = full_gens_.cols();
    IntMat endo(g, g);
    for (std::size_t j = 0; j < g; ++j) {
        auto img = reduce(alpha.apply(full_gens_.col(j)));
        for (std::size_t i = 0; i < g; ++i) endo(i, j) = img[i];
    }
    return endo;
}

FinAbGroup mm_finite_quotient(const MixedModule& m, const MixedModule& n,
                              const std::optional<RatMat>& alpha) {
    FiniteQuotient q(m, n);
    FinAbGroup g = q.group();
    if (alpha) g.induced_endo = q.induced_endomorphism(*alpha);
    return g;
}

} // namespace latpair
