#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpair/oracle.hpp"

using namespace latpair;

TEST_CASE("coset enumeration") {
    Lattice z2 = Lattice::standard(2);
    CHECK(enumerate_quotient(z2, z2.scaled(2)).size() == 4);

    Lattice sub(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
    auto t = enumerate_quotient(z2, sub);
    CHECK(t.size() == 6);
    // reduction is idempotent and constant on cosets
    for (const auto& rep : t.representatives()) {
        auto shifted = rep;
        shifted[0] += 2;
        shifted[1] += 3;
        CHECK(t.index_of(shifted) == t.index_of(rep));
    }

    CHECK_THROWS_AS(enumerate_quotient(z2, z2.scaled(2000)), invalid_input); // cap
}

TEST_CASE("brute fixed points on table rows") {
    CHECK(brute_fixed_points(make_type(TypeDescriptor(TypeKind::T11, Int(2), Int(3)))) == 6);
    CHECK(brute_fixed_points(make_type(TypeDescriptor(TypeKind::T2, Int(1))), 2) == 2);
    CHECK(brute_fixed_points(make_type(TypeDescriptor(TypeKind::T66, Int(1)))) == 1);
}

TEST_CASE("brute B group") {
    CHECK(brute_bgroup(make_type(TypeDescriptor(TypeKind::T22, Int(1), Int(1)))) ==
          FinAbGroup({2, 2}));
    CHECK(brute_bgroup(make_type(TypeDescriptor(TypeKind::T11, Int(3), Int(5)))).is_trivial());
    CHECK(brute_bgroup(make_type(TypeDescriptor(TypeKind::T12A, Int(1), Int(1)))) ==
          FinAbGroup({2}));
}

TEST_CASE("brute separation group") {
    RatMat refl{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(brute_separation(Lattice::standard(2), refl - RatMat::identity(2)) ==
          FinAbGroup({2}));
    CHECK(brute_separation(Lattice::standard(2), RatMat(2, 2)).is_trivial());

    auto perm = permutation_pair({2, 3});
    RatMat d = perm.frobenius() - RatMat::identity(5);
    CHECK(brute_separation(perm.lambda_prime(), d) == FinAbGroup({6}));
}

TEST_CASE("all four descriptions of T agree on random pairs") {
    PairGenerator gen(42);
    for (int i = 0; i < 30; ++i) {
        auto c = gen.next();
        RatMat d = c.pair.frobenius() - RatMat::identity(c.pair.dim());
        const Lattice& lam = c.pair.lambda();
        FinAbGroup t1 = separation_group(lam, d);
        FinAbGroup t2 = brute_separation(lam, d);
        CHECK(t1 == t2);
        // quotient description (Lambda + U) cap (Lambda + W) / Lambda
        MixedModule lm = lam.mixed();
        MixedModule u = MixedModule::from_subspace(column_echelon(d));
        MixedModule w = MixedModule::from_subspace(rational_kernel(d));
        FinAbGroup t3 =
            mm_finite_quotient(mm_intersect(mm_sum(lm, u), mm_sum(lm, w)), lm);
        CHECK(t1 == t3);
    }
}

TEST_CASE("oracle equals engine on seeded random pairs") {
    PairGenerator gen(7);
    for (int i = 0; i < 40; ++i) {
        auto c = gen.next();
        CHECK(bgroup(c.pair) == brute_bgroup(c.pair));
        for (long e = 1; e <= 3; ++e) {
            Int direct = fixed_points_direct(c.pair, e);
            CHECK(fixed_points_formula(c.pair, e).count == direct);
            CHECK(brute_fixed_points(c.pair, e) == direct);
        }
    }
}
