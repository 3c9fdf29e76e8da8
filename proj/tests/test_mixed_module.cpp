#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latpair/mixed_module.hpp"

using namespace latpair;

namespace {

RatMat colvec(std::initializer_list<Rat> entries) {
    RatMat m(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& x : entries) m(i++, 0) = x;
    return m;
}

MixedModule random_mixed(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> nsub(0, 1);
    std::uniform_int_distribution<int> ngen(0, 2);
    RatMat sub(dim, nsub(rng));
    for (std::size_t j = 0; j < sub.cols(); ++j)
        for (std::size_t i = 0; i < dim; ++i) sub(i, j) = Rat(num(rng));
    RatMat gens(dim, ngen(rng));
    for (std::size_t j = 0; j < gens.cols(); ++j)
        for (std::size_t i = 0; i < dim; ++i) gens(i, j) = frac(num(rng), den(rng));
    return MixedModule(dim, sub, gens);
}

RatMat random_gram(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> num(-2, 2);
    while (true) {
        RatMat b(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) b(i, j) = Rat(num(rng));
        RatMat g = b.transpose() * b; // symmetric PSD; accept only nondegenerate
        if (det(g) != 0) return g;
    }
}

} // namespace

TEST_CASE("sum of a line and an independent lattice vector") {
    MixedModule u = MixedModule::from_subspace(colvec({Rat(1), Rat(0)}));
    MixedModule l = MixedModule::from_lattice_basis(colvec({Rat(0), Rat(1)}));
    MixedModule s = mm_sum(u, l);
    CHECK(s.dim_minus() == 1);
    CHECK(s.dim_plus() == 2);
    CHECK(s.contains(std::vector<Rat>{frac(7, 3), Rat(2)}));
    CHECK(!s.contains(std::vector<Rat>{Rat(0), frac(1, 2)}));
}

TEST_CASE("intersection is idempotent and matches hand examples") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MixedModule m = random_mixed(rng, 3);
        CHECK(mm_intersect(m, m) == m);
        CHECK(mm_sum(m, m) == m);
    }

    // Z^2 intersect the line x = y is Z(1,1)
    MixedModule z2 = MixedModule::from_lattice_basis(to_rational(IntMat::identity(2)));
    MixedModule diag = MixedModule::from_subspace(colvec({Rat(1), Rat(1)}));
    MixedModule got = mm_intersect(z2, diag);
    CHECK(got == MixedModule::from_lattice_basis(colvec({Rat(1), Rat(1)})));
}

TEST_CASE("dual examples") {
    RatMat id2 = to_rational(IntMat::identity(2));
    MixedModule z2 = MixedModule::from_lattice_basis(id2);
    CHECK(mm_dual(z2, id2) == z2); // self-dual

    // The dual of a subspace is its orthogonal complement.
    MixedModule line = MixedModule::from_subspace(colvec({Rat(1), Rat(0)}));
    MixedModule perp = mm_dual(line, id2);
    CHECK(perp == MixedModule::from_subspace(colvec({Rat(0), Rat(1)})));

    // nZ in Q^1 dualizes to (1/n)Z
    RatMat g1(1, 1);
    g1(0, 0) = 1;
    MixedModule nz = MixedModule::from_lattice_basis(colvec({Rat(5)}));
    CHECK(mm_dual(nz, g1) == MixedModule::from_lattice_basis(colvec({frac(1, 5)})));

    CHECK_THROWS_AS(mm_dual(z2, RatMat{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}), invalid_input);
}

TEST_CASE("duality is an involution and order-reversing on random modules") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t dim = 2 + trial % 2;
        RatMat g = random_gram(rng, dim);
        MixedModule m = random_mixed(rng, dim);
        MixedModule n = random_mixed(rng, dim);
        MixedModule md = mm_dual(m, g), nd = mm_dual(n, g);
        CHECK(mm_dual(md, g) == m);
        CHECK(mm_dual(mm_sum(m, n), g) == mm_intersect(md, nd));
        CHECK(mm_dual(mm_intersect(m, n), g) == mm_sum(md, nd));
        // dim_plus(M^dual) = codim_minus(M), dim_minus(M^dual) = codim_plus(M)
        CHECK(md.dim_plus() == m.codim_minus());
        CHECK(md.dim_minus() == m.codim_plus());
        // gram-backed intersection agrees with the kernel route
        CHECK(mm_intersect(m, n, g) == mm_intersect(m, n));
    }
}

TEST_CASE("image and preimage") {
    RatMat id2 = to_rational(IntMat::identity(2));
    MixedModule z2 = MixedModule::from_lattice_basis(id2);

    // D = diag(0, 2): D^{-1}(Z^2) = Q + (1/2)Z
    RatMat d{{Rat(0), Rat(0)}, {Rat(0), Rat(2)}};
    MixedModule pre = mm_preimage(z2, d);
    CHECK(pre.dim_minus() == 1);
    CHECK(pre.contains(std::vector<Rat>{frac(22, 7), frac(1, 2)}));
    CHECK(!pre.contains(std::vector<Rat>{Rat(0), frac(1, 3)}));

    // preimage subspace always contains ker alpha
    MixedModule kerd = MixedModule::from_subspace(colvec({Rat(1), Rat(0)}));
    CHECK(pre.contains(kerd));

    // invertible alpha: image then preimage is the identity
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RatMat a(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) a(i, j) = Rat(num(rng));
        } while (det(a) == 0);
        MixedModule m = random_mixed(rng, 2);
        CHECK(mm_preimage(mm_image(m, a), a) == m);
    }
}

TEST_CASE("finite quotients") {
    RatMat id2 = to_rational(IntMat::identity(2));
    MixedModule z2 = MixedModule::from_lattice_basis(id2);
    MixedModule sub = MixedModule::from_lattice_basis(
        RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
    FinAbGroup q = mm_finite_quotient(z2, sub);
    CHECK(q.invariant_factors() == std::vector<Int>{6});
    CHECK(q.order() == 6);

    // M/M is trivial
    CHECK(mm_finite_quotient(z2, z2).is_trivial());

    // (D^{-1}L)/(L + V[D]) for D = diag(0,2) is C2; checked against the
    // enumeration of (1/2)Z / Z cosets which has exactly 2 elements
    RatMat d{{Rat(0), Rat(0)}, {Rat(0), Rat(2)}};
    MixedModule pre = mm_preimage(z2, d);
    MixedModule den = mm_sum(z2, MixedModule::from_subspace(colvec({Rat(1), Rat(0)})));
    FinAbGroup b = mm_finite_quotient(pre, den);
    CHECK(b.invariant_factors() == std::vector<Int>{2});

    // errors: N not inside M, infinite quotient
    CHECK_THROWS_AS(mm_finite_quotient(sub, z2), invalid_input);
    MixedModule line = MixedModule::from_subspace(colvec({Rat(1), Rat(0)}));
    CHECK_THROWS_AS(mm_finite_quotient(mm_sum(z2, line), z2), invalid_input);
}

TEST_CASE("|M/N| = |N^dual / M^dual| on random finite quotients") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t dim = 2;
        RatMat g = random_gram(rng, dim);
        // random full lattice M and finite-index N = M * R
        RatMat b(dim, dim);
        do {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) b(i, j) = Rat(num(rng));
        } while (det(b) == 0);
        RatMat r(dim, dim);
        do {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) r(i, j) = Rat(num(rng));
        } while (det(r) == 0);
        MixedModule m = MixedModule::from_lattice_basis(b);
        MixedModule n = MixedModule::from_lattice_basis(b * r);
        FinAbGroup q = mm_finite_quotient(m, n);
        FinAbGroup qd = mm_finite_quotient(mm_dual(n, g), mm_dual(m, g));
        CHECK(q.invariant_factors() == qd.invariant_factors());
    }
}

TEST_CASE("quotient coordinates and coset representatives") {
    MixedModule z2 = MixedModule::from_lattice_basis(to_rational(IntMat::identity(2)));
    MixedModule sub = MixedModule::from_lattice_basis(
        RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}});
    FiniteQuotient q(z2, sub);
    CHECK(q.order() == 4);
    CHECK(q.group().invariant_factors() == std::vector<Int>{2, 2});
    auto zero = q.reduce(std::vector<Rat>{Rat(2), Rat(4)});
    CHECK(std::all_of(zero.begin(), zero.end(), [](const Int& x) { return x == 0; }));
    auto one = q.reduce(std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(std::any_of(one.begin(), one.end(), [](const Int& x) { return x != 0; }));
}
