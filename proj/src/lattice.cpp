#include "latpair/lattice.hpp"

namespace latpair {

Lattice::Lattice(const RatMat& basis) {
    check_input(basis.is_square() && basis.rows() > 0, "lattice basis must be square");
    check_input(det(basis) != 0, "lattice basis must be nonsingular");
    MixedModule m = MixedModule::from_lattice_basis(basis);
    basis_ = m.lattice_gens();
    check_internal(basis_.is_square(), "lattice canonicalization lost rank");
}

Lattice Lattice::standard(std::size_t dim) {
    return Lattice(to_rational(IntMat::identity(dim)));
}

bool Lattice::contains(const std::vector<Rat>& v) const {
    auto x = solve(basis_, v);
    check_internal(x.has_value(), "full-rank solve failed");
    for (const auto& xi : *x)
        if (!is_integer(xi)) return false;
    return true;
}

bool Lattice::contains(const Lattice& sub) const {
    check_input(dim() == sub.dim(), "lattice dimension mismatch");
    auto x = solve(basis_, sub.basis_);
    check_internal(x.has_value(), "full-rank solve failed");
    return is_integral(*x);
}

Int Lattice::index_of(const Lattice& sub) const {
    check_input(contains(sub), "index requires a sublattice");
    auto x = solve(basis_, sub.basis_);
    return abs(det(to_integral(*x)));
}

Lattice Lattice::scaled(const Int& e) const {
    check_input(e >= 1, "scale factor must be positive");
    return Lattice(basis_ * Rat(e));
}

bool Lattice::stable_under(const RatMat& f) const {
    auto x = solve(basis_, f * basis_);
    check_internal(x.has_value(), "full-rank solve failed");
    return is_integral(*x);
}

Lattice dual_lattice(const Lattice& l, const RatMat& gram) {
    check_input(gram.is_square() && gram.rows() == l.dim(), "Gram matrix shape mismatch");
    check_input(gram == gram.transpose(), "Gram matrix must be symmetric");
    check_input(det(gram) != 0, "Gram matrix must be nondegenerate");
    const RatMat& b = l.basis();
    return Lattice(b * inverse(b.transpose() * gram * b));
}

LatticePair::LatticePair(Lattice lambda, Lattice lambda_prime, RatMat frobenius,
                         std::optional<RatMat> gram)
    : lambda_(std::move(lambda)), lambda_prime_(std::move(lambda_prime)),
      f_(std::move(frobenius)), gram_(std::move(gram)) {
    const std::size_t d = lambda_.dim();
    check_input(lambda_prime_.dim() == d, "lattice dimension mismatch");
    check_input(f_.is_square() && f_.rows() == d, "Frobenius shape mismatch");
    check_input(lambda_.contains(lambda_prime_), "Lambda' must be a sublattice of Lambda");
    check_input(lambda_.stable_under(f_), "Lambda must be F-stable");
    check_input(lambda_prime_.stable_under(f_), "Lambda' must be F-stable");

    auto fac = cyclotomic_multiplicities(char_poly(f_)); // throws unless finite order
    order_ = fac.order;
    auto it = fac.multiplicity.find(1);
    fixed_rank_ = it == fac.multiplicity.end() ? 0 : it->second;

    dual_pair_ = false;
    if (gram_) {
        check_input(gram_->is_square() && gram_->rows() == d, "Gram matrix shape mismatch");
        check_input(*gram_ == gram_->transpose(), "Gram matrix must be symmetric");
        check_input(det(*gram_) != 0, "Gram matrix must be nondegenerate");
        check_input(f_.transpose() * (*gram_) * f_ == *gram_,
                    "pairing must be F-invariant");
        dual_pair_ = (lambda_prime_ == dual_lattice(lambda_, *gram_));
    }
}

IntPoly LatticePair::frobenius_char_poly() const { return char_poly(f_); }

RatMat LatticePair::frobenius_power(long f) const {
    check_input(f >= 0, "Frobenius power must be nonnegative");
    f %= order_;
    RatMat r = RatMat::identity(dim());
    for (long i = 0; i < f; ++i) r = r * f_;
    return r;
}

LatticePair LatticePair::with_frobenius_power(long f) const {
    return LatticePair(lambda_, lambda_prime_, frobenius_power(f), gram_);
}

LatticePair LatticePair::with_scaled_sublattice(const Int& e) const {
    check_input(e >= 1, "scale factor must be positive");
    std::optional<RatMat> g = gram_;
    if (g) g = *g * frac(Int(1), e);
    return LatticePair(lambda_, lambda_prime_.scaled(e), f_, g);
}

LatticePair LatticePair::conjugated(const RatMat& t) const {
    check_input(t.is_square() && t.rows() == dim(), "conjugation shape mismatch");
    check_input(abs(det(t)) == 1, "conjugation must be unimodular");
    RatMat tinv = inverse(t);
    std::optional<RatMat> g = gram_;
    if (g) g = tinv.transpose() * (*g) * tinv;
    return LatticePair(Lattice(t * lambda_.basis()), Lattice(t * lambda_prime_.basis()),
                       t * f_ * tinv, g);
}

} // namespace latpair
