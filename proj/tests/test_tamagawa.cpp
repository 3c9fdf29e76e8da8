#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpair/tamagawa.hpp"

using namespace latpair;

namespace {

AbVarLocalData data_of(const std::string& type) {
    return AbVarLocalData(make_type(TypeDescriptor::parse(type)));
}

std::vector<TypeDescriptor> two_dim_types(long pmax) {
    std::vector<TypeDescriptor> out;
    for (long n = 1; n <= pmax; ++n) {
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

} // namespace

TEST_CASE("tamagawa numbers of model data") {
    CHECK(tamagawa_number(data_of("1:5")) == 5);  // split I_5
    CHECK(tamagawa_number(data_of("2:4")) == 2);  // non-split I_4
    CHECK(tamagawa_number(data_of("2:3")) == 1);
    CHECK(tamagawa_number(data_of("3.3:5")) == 3);
}

TEST_CASE("base change basics") {
    auto d = data_of("6.6:2");
    auto same = base_change(d, {Int(1), 1});
    CHECK(tamagawa_number(same) == tamagawa_number(d));
    CHECK(classify(base_change(d, {Int(1), 3}).pair()).str() == "2.2:2,6");

    // 1.2B:1,1 under f=2 with ord2(n/m) = 0
    CHECK(classify(base_change(data_of("1.2B:1,1"), {Int(1), 2}).pair()).str() == "1.1:1,1");

    // base change keeps the dual-pair invariant
    CHECK(base_change(d, {Int(3), 2}).pair().is_dual_pair());
}

TEST_CASE("B-based change law matches the engine") {
    // non-split I_1: c over a ramified quadratic extension picks up |B[2]| = 2
    CHECK(tamagawa_via_bgroup(data_of("2:1"), {Int(2), 1}) == 2);
    // non-split I_2, e = 3: B is trivial, c stays 2
    CHECK(tamagawa_via_bgroup(data_of("2:2"), {Int(3), 1}) == 2);
    // split case: c . e^r
    CHECK(tamagawa_via_bgroup(data_of("1:3"), {Int(4), 1}) == 12);

    CHECK_THROWS_AS(tamagawa_via_bgroup(data_of("2:1"), {Int(2), 2}), invalid_input);

    for (const auto& t : two_dim_types(3)) {
        AbVarLocalData d(make_type(t));
        long n = d.frobenius_order();
        for (long e = 1; e <= 3; ++e)
            for (long f = 1; f <= 4; ++f) {
                if (gcd(Int(f), Int(n)) != 1) continue;
                CHECK(tamagawa_via_bgroup(d, {Int(e), f}) ==
                      tamagawa_number(base_change(d, {Int(e), f})));
            }
    }
}

TEST_CASE("gcd factorization through the unramified step") {
    // c over any (e, f) equals the B-law applied after the unramified part
    for (const auto& t : two_dim_types(2)) {
        AbVarLocalData d(make_type(t));
        for (long e = 1; e <= 3; ++e)
            for (long f = 1; f <= 6; ++f) {
                AbVarLocalData unram = base_change(d, {Int(1), f});
                CHECK(tamagawa_number(base_change(d, {Int(e), f})) ==
                      tamagawa_via_bgroup(unram, {Int(e), 1}));
            }
    }
}

TEST_CASE("type transitions commute with the engine") {
    for (const auto& t : two_dim_types(4))
        for (long e = 1; e <= 3; ++e)
            for (long f : {1, 2, 3}) {
                ExtensionSpec ext{Int(e), f};
                CHECK(classify(base_change(AbVarLocalData(make_type(t)), ext).pair()) ==
                      type_base_change(t, ext));
            }
}

TEST_CASE("type transition table entries") {
    CHECK(type_base_change(TypeDescriptor::parse("4.4:3"), {Int(1), 2}).str() == "2.2:3,3");
    CHECK(type_base_change(TypeDescriptor::parse("1.2B:3,1"), {Int(1), 1}).str() == "1.2B:3,1");
    // ord2(n/m) < 0
    CHECK(type_base_change(TypeDescriptor::parse("1.2B:2,4"), {Int(1), 2}).str() == "1.1:1,8");
    CHECK(type_base_change(TypeDescriptor::parse("1.2B:4,2"), {Int(1), 2}).str() == "1.1:1,8");
    CHECK(type_base_change(TypeDescriptor::parse("3.3:2"), {Int(1), 2}).str() == "3.3:2");
    CHECK(type_base_change(TypeDescriptor::parse("6.6:1"), {Int(2), 6}).str() == "1.1:2,6");
    // totally ramified part scales parameters
    CHECK(type_base_change(TypeDescriptor::parse("4.4:1"), {Int(3), 1}).str() == "4.4:3");
}

TEST_CASE("squarefree change law") {
    CHECK(c_up_to_squares(data_of("2.2:1,1"), {Int(1), 2}) == 1);
    CHECK(c_up_to_squares(data_of("4.4:2"), {Int(1), 2}) == 1);
    for (const auto& t : two_dim_types(3)) {
        AbVarLocalData d(make_type(t));
        for (long e = 1; e <= 4; ++e)
            for (long f : {1, 2, 3, 4, 6}) {
                ExtensionSpec ext{Int(e), f};
                CHECK(c_up_to_squares(d, ext) ==
                      squarefree_part(tamagawa_number(base_change(d, ext))));
            }
    }
}

TEST_CASE("B square order criterion across extensions") {
    for (const auto& t : two_dim_types(3)) {
        AbVarLocalData d(make_type(t));
        Int b0 = bgroup(d.pair()).order();
        bool base_square = squarefree_part(b0) == 1;
        for (long e = 1; e <= 3; ++e)
            for (long f = 1; f <= 3; ++f) {
                Int bl = bgroup(base_change(d, {Int(e), f}).pair()).order();
                bool is_square = squarefree_part(bl) == 1;
                bool predicted = base_square || (e * f) % 2 == 0;
                CHECK(is_square == predicted);
            }
    }
}

TEST_CASE("P and T unchanged when gcd(f, n) = 1") {
    for (const auto& t : two_dim_types(2)) {
        AbVarLocalData d(make_type(t));
        long n = d.frobenius_order();
        auto split0 = strip_unit_root(d.pair().frobenius_char_poly());
        RatMat dd = d.pair().frobenius() - RatMat::identity(2);
        FinAbGroup t0 = separation_group(d.pair().lambda(), dd);
        for (long f = 1; f <= 6; ++f) {
            if (gcd(Int(f), Int(n)) != 1) continue;
            AbVarLocalData moved = base_change(d, {Int(1), f});
            auto split1 = strip_unit_root(moved.pair().frobenius_char_poly());
            CHECK(split0.p1 == split1.p1);
            RatMat dd1 = moved.pair().frobenius() - RatMat::identity(2);
            CHECK(separation_group(moved.pair().lambda(), dd1) == t0);
        }
    }
}

TEST_CASE("tower stabilization") {
    // split 1:n with e_k = 2^k: C = n, r_inf = 1 from the start
    std::vector<ExtensionSpec> tower;
    for (long k = 0; k <= 4; ++k) tower.push_back({pow(Int(2), k), 1});
    auto res = tower_stabilize(data_of("1:3"), tower);
    REQUIRE(res.determined);
    CHECK(res.constant == 3);
    CHECK(res.r_inf == 1);
    CHECK(res.k0 == 0);

    // non-split 2:1 with e_k = 2 * 3^k: |B[e_k]| = 2 throughout
    std::vector<ExtensionSpec> tower2;
    for (long k = 0; k <= 3; ++k) tower2.push_back({Int(2) * pow(Int(3), k), 1});
    auto res2 = tower_stabilize(data_of("2:1"), tower2);
    REQUIRE(res2.determined);
    CHECK(res2.constant == 2);
    CHECK(res2.r_inf == 0);
    CHECK(res2.k0 == 0);

    // odd tower on 2:1: B[odd] is trivial
    std::vector<ExtensionSpec> tower3;
    for (long k = 0; k <= 3; ++k) tower3.push_back({pow(Int(3), k), 1});
    auto res3 = tower_stabilize(data_of("2:1"), tower3);
    REQUIRE(res3.determined);
    CHECK(res3.constant == 1);
    CHECK(res3.r_inf == 0);

    // a single level is never conclusive
    CHECK(!tower_stabilize(data_of("1:1"), {{Int(2), 1}}).determined);

    // non-nested towers are rejected
    CHECK_THROWS_AS(tower_stabilize(data_of("1:1"),
                                    std::vector<ExtensionSpec>{{Int(4), 1}, {Int(2), 1}}),
                    invalid_input);
}

TEST_CASE("elliptic multiplicative reduction table") {
    // split I_n: c = n; over (e, f): c = e n
    for (long n = 1; n <= 4; ++n) {
        AbVarLocalData d(make_type(TypeDescriptor(TypeKind::T1, Int(n))));
        CHECK(tamagawa_number(d) == n);
        for (long e = 1; e <= 3; ++e)
            for (long f = 1; f <= 3; ++f)
                CHECK(tamagawa_number(base_change(d, {Int(e), f})) == e * n);
    }
    // non-split I_n: c = 1 or 2 by parity; unramified even extensions split
    for (long n = 1; n <= 4; ++n) {
        AbVarLocalData d(make_type(TypeDescriptor(TypeKind::T2, Int(n))));
        CHECK(tamagawa_number(d) == (n % 2 == 0 ? 2 : 1));
        CHECK(bgroup(d.pair()).order() == (n % 2 == 1 ? 2 : 1));
        for (long e = 1; e <= 3; ++e) {
            // f even: split of type I_{en}
            CHECK(tamagawa_number(base_change(d, {Int(e), 2})) == e * n);
            // f odd: remains non-split of type I_{en}
            long en_parity = (e * n) % 2;
            CHECK(tamagawa_number(base_change(d, {Int(e), 3})) == (en_parity == 0 ? 2 : 1));
        }
    }
}
