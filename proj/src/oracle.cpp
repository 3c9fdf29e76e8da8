#include "latpair/oracle.hpp"

namespace latpair {

CosetTable::CosetTable(const Lattice& lambda, const Lattice& sub, long cap) {
    check_input(lambda.contains(sub), "coset table requires a sublattice");
    auto rel = solve(lambda.basis(), sub.basis());
    check_internal(rel.has_value() && is_integral(*rel), "containment coordinates");
    auto s = snf(to_integral(*rel));
    check_internal(s.d.size() == lambda.dim(), "sublattice is not full rank");
    adapted_ = lambda.basis() * inverse(to_rational(s.u));
    d_ = s.d;

    Int total = 1;
    for (const auto& d : d_) total *= d;
    check_input(total <= cap, "coset enumeration exceeds the cap");

    std::vector<Int> x(d_.size(), 0);
    const long n = total.get_si();
    reps_.reserve(n);
    for (long i = 0; i < n; ++i) {
        std::vector<Rat> v(adapted_.rows(), Rat(0));
        for (std::size_t j = 0; j < d_.size(); ++j)
            for (std::size_t r = 0; r < adapted_.rows(); ++r) v[r] += Rat(x[j]) * adapted_(r, j);
        reps_.push_back(std::move(v));
        std::size_t k = 0;
        while (k < x.size()) {
            x[k] += 1;
            if (x[k] < d_[k]) break;
            x[k] = 0;
            ++k;
        }
    }
}

std::size_t CosetTable::index_of(const std::vector<Rat>& v) const {
    auto c = solve(adapted_, v);
    check_input(c.has_value(), "vector outside the span");
    std::size_t idx = 0, stride = 1;
    for (std::size_t j = 0; j < d_.size(); ++j) {
        check_input(is_integer((*c)[j]), "vector is not a lattice element");
        Int r = fmod((*c)[j].get_num(), d_[j]);
        idx += static_cast<std::size_t>(r.get_si()) * stride;
        stride *= static_cast<std::size_t>(d_[j].get_si());
    }
    return idx;
}

CosetTable enumerate_quotient(const Lattice& lambda, const Lattice& sub, long cap) {
    return CosetTable(lambda, sub, cap);
}

Int brute_fixed_points(const LatticePair& pair, const Int& e, long f, long cap) {
    check_input(e >= 1 && f >= 1, "extension degrees must be >= 1");
    Lattice esub = pair.lambda_prime().scaled(e);
    CosetTable table(pair.lambda(), esub, cap);
    RatMat ff = pair.frobenius_power(f);
    Int count = 0;
    for (const auto& rep : table.representatives()) {
        if (table.index_of(ff.apply(rep)) == table.index_of(rep)) ++count;
    }
    return count;
}

namespace {

// Invariant factors of a finite quotient L1/L2 (given by bases of two
// equal-rank lattices in coordinates) from element-order statistics: for
// each prime p, the counts #{x : p^k x = 0} determine the p-group.
FinAbGroup group_structure_by_counting(const RatMat& l1, const RatMat& l2, long cap) {
    const std::size_t r = l1.cols();
    if (r == 0) return FinAbGroup::trivial();
    check_internal(l2.cols() == r, "quotient lattices must have equal rank");
    // Coordinates with respect to l1 turn the quotient into Z^r / rel Z^r.
    auto rel = solve(l1, l2);
    check_internal(rel.has_value() && is_integral(*rel), "not a finite-index sublattice");
    Lattice top = Lattice::standard(r), bottom(*rel);
    CosetTable table(top, bottom, cap);
    Int order = table.size();
    if (order == 1) return FinAbGroup::trivial();

    std::vector<std::pair<Int, std::vector<long>>> p_parts; // (p, partition)
    Int rest = order;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        p_parts.emplace_back(p, std::vector<long>{});
    }
    if (rest > 1) p_parts.emplace_back(rest, std::vector<long>{});

    for (auto& [p, partition] : p_parts) {
        // n_k = #{x : p^k x = 0}; log_p(n_k / n_{k-1}) counts parts >= k
        Int prev = 1;
        for (long k = 1;; ++k) {
            Int pk = pow(p, static_cast<unsigned long>(k));
            Int nk = 0;
            for (const auto& rep : table.representatives()) {
                std::vector<Rat> scaled(rep.size());
                for (std::size_t i = 0; i < rep.size(); ++i) scaled[i] = Rat(pk) * rep[i];
                if (table.index_of(scaled) == 0) ++nk;
            }
            Int ratio = divexact(nk, prev);
            long parts_ge_k = valuation(ratio, p);
            for (long i = 0; i < parts_ge_k; ++i) {
                if (static_cast<std::size_t>(i) >= partition.size()) partition.push_back(0);
                partition[i] += 1;
            }
            if (parts_ge_k == 0) break;
            prev = nk;
        }
    }

    // Align the largest p-power factors to build invariant factors.
    std::size_t len = 0;
    for (const auto& [p, partition] : p_parts) len = std::max(len, partition.size());
    std::vector<Int> factors(len, 1);
    for (const auto& [p, partition] : p_parts)
        for (std::size_t i = 0; i < partition.size(); ++i)
            factors[len - 1 - i] *= pow(p, static_cast<unsigned long>(partition[i]));
    std::vector<Int> out;
    for (const auto& f : factors)
        if (f > 1) out.push_back(f);
    return FinAbGroup(std::move(out));
}

} // namespace

FinAbGroup brute_bgroup(const LatticePair& pair, long cap) {
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());
    MixedModule lm = pair.lambda().mixed();
    MixedModule num = mm_sum(lm, mm_preimage(pair.lambda_prime().mixed(), d));
    MixedModule den = mm_sum(lm, MixedModule::from_subspace(rational_kernel(d)));
    check_internal(num.subspace_basis() == den.subspace_basis(),
                   "numerator and denominator must share V[D]");
    // The canonical generators already live in a complement of V[D].
    return group_structure_by_counting(num.lattice_gens(), den.lattice_gens(), cap);
}

FinAbGroup brute_separation(const Lattice& lambda, const RatMat& d, long cap) {
    check_input(rank(d) == rank(d * d), "V[D] != V[D^2]");
    RatMat w = rational_kernel(d);        // V[D]
    RatMat dv = column_echelon(d);        // DV
    if (w.cols() == 0 || dv.cols() == 0) return FinAbGroup::trivial();
    RatMat basis = w.hcat(dv);
    // projection of the lattice basis onto W along DV
    auto coords = solve(basis, lambda.basis());
    check_internal(coords.has_value(), "W + DV must span");
    RatMat pi_lambda(lambda.dim(), lambda.dim());
    for (std::size_t j = 0; j < lambda.dim(); ++j)
        for (std::size_t i = 0; i < lambda.dim(); ++i) {
            Rat acc = 0;
            for (std::size_t k = 0; k < w.cols(); ++k) acc += w(i, k) * (*coords)(k, j);
            pi_lambda(i, j) = acc;
        }
    MixedModule proj(lambda.dim(), RatMat(lambda.dim(), 0), pi_lambda);
    MixedModule inter = mm_intersect(lambda.mixed(), MixedModule::from_subspace(w));
    return group_structure_by_counting(proj.lattice_gens(), inter.lattice_gens(), cap);
}

PairGenerator::PairGenerator(std::uint64_t seed, long max_param) : rng_(seed) {
    for (long n = 1; n <= max_param; ++n) {
        templates_.emplace_back(TypeKind::T1, Int(n));
        templates_.emplace_back(TypeKind::T2, Int(n));
        templates_.emplace_back(TypeKind::T33, Int(n));
        templates_.emplace_back(TypeKind::T44, Int(n));
        templates_.emplace_back(TypeKind::T66, Int(n));
        for (long m = 1; m <= max_param; ++m) {
            templates_.emplace_back(TypeKind::T11, Int(n), Int(m));
            templates_.emplace_back(TypeKind::T12A, Int(n), Int(m));
            templates_.emplace_back(TypeKind::T22, Int(n), Int(m));
            if ((n - m) % 2 == 0) templates_.emplace_back(TypeKind::T12B, Int(n), Int(m));
        }
    }
}

PairGenerator::Case PairGenerator::next() {
    std::uniform_int_distribution<std::size_t> pick(0, templates_.size() - 1);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> scale(1, 4);
    const TypeDescriptor& t = templates_[pick(rng_)];
    LatticePair pair = make_type(t);
    Int e = scale(rng_);
    if (e > 1) pair = pair.with_scaled_sublattice(e);
    const std::size_t dim = pair.dim();
    while (true) {
        RatMat u(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) u(i, j) = Rat(entry(rng_));
        Rat dt = det(u);
        if (dt == 1 || dt == -1) {
            return Case{t, e, pair.conjugated(u)};
        }
    }
}

} // namespace latpair
