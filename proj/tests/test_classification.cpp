#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latpair/classification.hpp"

using namespace latpair;

namespace {

std::vector<TypeDescriptor> all_types(long pmax, bool two_dim_only = false) {
    std::vector<TypeDescriptor> out;
    for (long n = 1; n <= pmax; ++n) {
        if (!two_dim_only) {
            out.emplace_back(TypeKind::T1, Int(n));
            out.emplace_back(TypeKind::T2, Int(n));
        }
        out.emplace_back(TypeKind::T33, Int(n));
        out.emplace_back(TypeKind::T44, Int(n));
        out.emplace_back(TypeKind::T66, Int(n));
        for (long m = 1; m <= pmax; ++m) {
            out.emplace_back(TypeKind::T11, Int(n), Int(m));
            out.emplace_back(TypeKind::T12A, Int(n), Int(m));
            out.emplace_back(TypeKind::T22, Int(n), Int(m));
            if ((n - m) % 2 == 0) out.emplace_back(TypeKind::T12B, Int(n), Int(m));
        }
    }
    return out;
}

RatMat random_unimodular(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> entry(-3, 3);
    while (true) {
        RatMat t(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) t(i, j) = Rat(entry(rng));
        Rat dt = det(t);
        if (dt == 1 || dt == -1) return t;
    }
}

} // namespace

TEST_CASE("type string grammar round trip") {
    CHECK(TypeDescriptor(TypeKind::T12B, Int(5), Int(1)).str() == "1.2B:5,1");
    CHECK(TypeDescriptor(TypeKind::T44, Int(2)).str() == "4.4:2");
    CHECK(TypeDescriptor::parse("1.1:3,4") == TypeDescriptor(TypeKind::T11, Int(3), Int(4)));
    CHECK(TypeDescriptor::parse("2:7") == TypeDescriptor(TypeKind::T2, Int(7)));
    for (const auto& t : all_types(4)) CHECK(TypeDescriptor::parse(t.str()) == t);
    CHECK_THROWS_AS(TypeDescriptor::parse("5.5:1"), invalid_input);
    CHECK_THROWS_AS(TypeDescriptor::parse("1.1:2"), invalid_input);
    CHECK_THROWS_AS(TypeDescriptor::parse("1.2B:1,2"), invalid_input);
}

TEST_CASE("canonical parameters follow the isomorphism criterion") {
    CHECK(TypeDescriptor(TypeKind::T11, Int(4), Int(6)) ==
          TypeDescriptor(TypeKind::T11, Int(2), Int(12)));
    CHECK(TypeDescriptor(TypeKind::T22, Int(6), Int(4)).str() == "2.2:2,12");
    // 1.2A/1.2B keep their parameters ordered by eigenvalue
    CHECK(TypeDescriptor(TypeKind::T12A, Int(4), Int(6)).str() == "1.2A:4,6");
}

TEST_CASE("make_type produces dual pairs matching the table rows") {
    auto p33 = make_type(TypeDescriptor(TypeKind::T33, Int(2)));
    CHECK(p33.is_dual_pair());
    CHECK(p33.lambda().index_of(p33.lambda_prime()) == 12); // 3 n^2

    auto p44 = make_type(TypeDescriptor(TypeKind::T44, Int(1)));
    CHECK(p44.is_dual_pair());
    CHECK(p44.lambda_prime() == p44.lambda());

    auto p2 = make_type(TypeDescriptor(TypeKind::T2, Int(5)));
    CHECK(p2.is_dual_pair());
    CHECK(p2.frobenius()(0, 0) == -1);

    auto p11 = make_type(TypeDescriptor(TypeKind::T11, Int(2), Int(3)));
    CHECK(p11.lambda().index_of(p11.lambda_prime()) == 6);

    for (const auto& t : all_types(4)) CHECK(make_type(t).is_dual_pair());
}

TEST_CASE("classify round trips make_type") {
    for (const auto& t : all_types(6)) CHECK(classify(make_type(t)) == t);
}

TEST_CASE("classify hand examples") {
    // (Z[zeta_3], (zeta_3 - 1) 2 Z[zeta_3], mult by zeta_3) is 3.3:2
    auto p = make_type(TypeDescriptor(TypeKind::T33, Int(2)));
    CHECK(classify(p).str() == "3.3:2");

    // the explicit 1.2B:1,3 pair from the table
    RatMat lam{{Rat(1), frac(1, 2)}, {Rat(0), frac(1, 2)}};
    RatMat sub{{Rat(1), frac(1, 2)}, {Rat(0), frac(3, 2)}};
    LatticePair q(Lattice(lam), Lattice(sub), RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
    CHECK(classify(q).str() == "1.2B:1,3");
}

TEST_CASE("classify is invariant under unimodular base change") {
    std::mt19937_64 rng(23);
    for (const auto& t : all_types(3)) {
        LatticePair p = make_type(t);
        for (int trial = 0; trial < 3; ++trial) {
            LatticePair moved = p.conjugated(random_unimodular(rng, p.dim()));
            CHECK(classify(moved) == t);
        }
    }
}

TEST_CASE("classify rejects unclassifiable pairs") {
    // Lambda is 1.2B-shaped but Lambda' is a plain product: T values differ
    RatMat lam{{Rat(1), frac(1, 2)}, {Rat(0), frac(1, 2)}};
    RatMat sub{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
    LatticePair p(Lattice(lam), Lattice(sub), RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
    CHECK_THROWS_AS(classify(p), invalid_input);

    // index of an order-3 pair must be 3 n^2
    RatMat f3{{Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
    LatticePair q(Lattice::standard(2), Lattice(RatMat{{Rat(7), Rat(0)}, {Rat(0), Rat(7)}}),
                  f3);
    // index 49 is not of the form 3 n^2
    CHECK_THROWS_AS(classify(q), invalid_input);
}

TEST_CASE("scaling the sublattice scales the type parameters") {
    for (const auto& t : all_types(3))
        for (long e = 1; e <= 3; ++e) {
            LatticePair scaled = make_type(t).with_scaled_sublattice(e);
            TypeDescriptor got = classify(scaled);
            if (t.two_parameter())
                CHECK(got == TypeDescriptor(t.kind(), t.n() * e, t.m() * e));
            else
                CHECK(got == TypeDescriptor(t.kind(), t.n() * e));
        }
}

TEST_CASE("type_invariants reproduces every cell of the rank-2 table") {
    for (const auto& t : all_types(4)) {
        LatticePair p = make_type(t);
        TypeInvariants ti = type_invariants(t);
        RatMat d = p.frobenius() - RatMat::identity(p.dim());
        CHECK(separation_group(p.lambda(), d) == ti.t);
        CHECK(bgroup(p) == ti.b);
        CHECK(fixed_points_direct(p) == ti.c);
        CHECK(fixed_points_formula(p).count == ti.c);
    }
}

TEST_CASE("selected table cells") {
    auto a = type_invariants(TypeDescriptor(TypeKind::T12A, Int(3), Int(4)));
    CHECK(a.t.is_trivial());
    CHECK(a.b.is_trivial());
    CHECK(a.c == 6);

    auto b = type_invariants(TypeDescriptor(TypeKind::T22, Int(1), Int(2)));
    CHECK(b.b == FinAbGroup({2}));
    CHECK(b.c == 2);

    auto c = type_invariants(TypeDescriptor(TypeKind::T66, Int(7)));
    CHECK(c.t.is_trivial());
    CHECK(c.b.is_trivial());
    CHECK(c.c == 1);
}

TEST_CASE("cyclotomic pairs") {
    // n = 3, omega = 3: the dual is (zeta_3 - 1) Z[zeta_3], i.e. type 3.3:1
    auto p3 = cyclotomic_pair(3, {Rat(3)});
    CHECK(classify(p3).str() == "3.3:1");
    CHECK(p3.is_dual_pair());

    // n = 4, omega = 2n' recovers 4.4:n'
    auto p4 = cyclotomic_pair(4, {Rat(2)});
    CHECK(classify(p4).str() == "4.4:1");

    // omega must be real
    CHECK_THROWS_AS(cyclotomic_pair(4, std::vector<Rat>{Rat(0), Rat(1)}), invalid_input);
    // omega = 1 for n = 3 gives a dual that is not inside the lattice
    CHECK_THROWS_AS(cyclotomic_pair(3, std::vector<Rat>{Rat(1)}), invalid_input);

    // n = 5: c = 5 for any valid omega
    auto omegas5 = scan_cyclotomic_omegas(5, 6, 4);
    REQUIRE(!omegas5.empty());
    for (const auto& w : omegas5) {
        auto p = cyclotomic_pair(5, w);
        CHECK(fixed_points_direct(p) == 5);
        CHECK(separation_group(p.lambda(), p.frobenius() - RatMat::identity(4)).is_trivial());
    }
}

TEST_CASE("closed form for the faithful irreducible lattice") {
    CHECK(c_n_closed_form(9, true, 1) == 3);
    CHECK(c_n_closed_form(8, false, 1) == 2); // even index
    CHECK(c_n_closed_form(8, true, 1) == 1);
    CHECK(c_n_closed_form(8, true, 2) == 2); // e makes the index even
    CHECK(c_n_closed_form(15, true, 1) == 1);
    CHECK(c_n_closed_form(15, false, 3) == 1);
}

TEST_CASE("closed form matches the engine on scan-found pairs") {
    for (long n : {3L, 4L, 5L, 6L, 8L, 12L}) {
        auto omegas = scan_cyclotomic_omegas(n, n <= 6 ? 6 : 8, 6);
        REQUIRE(!omegas.empty());
        for (const auto& w : omegas) {
            auto p = cyclotomic_pair(n, w);
            bool base_odd = p.lambda().index_of(p.lambda_prime()) % 2 == 1;
            for (long e = 1; e <= 3; ++e)
                CHECK(fixed_points_direct(p, Int(e)) == c_n_closed_form(n, base_odd, Int(e)));
        }
    }
}

TEST_CASE("permutation pairs") {
    auto p = permutation_pair({3});
    RatMat d = p.frobenius() - RatMat::identity(3);
    CHECK(separation_group(p.lambda_prime(), d) == FinAbGroup({3}));
    CHECK(bgroup(p).is_trivial());

    auto q = permutation_pair({1, 1});
    CHECK(separation_group(q.lambda_prime(),
                           q.frobenius() - RatMat::identity(2)).is_trivial());

    auto r = permutation_pair({2, 2});
    CHECK(separation_group(r.lambda_prime(), r.frobenius() - RatMat::identity(4)) ==
          FinAbGroup({2, 2}));

    // overlattice must contain the permutation lattice and stay F-stable
    CHECK_THROWS_AS(permutation_pair({2}, Lattice(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}})),
                    invalid_input);
}
