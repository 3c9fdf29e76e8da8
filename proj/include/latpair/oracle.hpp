#pragma once

#include <random>

#include "latpair/classification.hpp"

namespace latpair {

constexpr long kDefaultCosetCap = 1000000;

/// Exhaustive coset representatives of Lambda/Lambda'', with reduction of
/// lattice vectors to their coset index.
class CosetTable {
public:
    CosetTable(const Lattice& lambda, const Lattice& sub, long cap = kDefaultCosetCap);

    Int size() const { return Int(static_cast<long>(reps_.size())); }
    const std::vector<std::vector<Rat>>& representatives() const { return reps_; }

    /// Index of the coset of v; v must lie in Lambda.
    std::size_t index_of(const std::vector<Rat>& v) const;

private:
    RatMat adapted_;          // adapted basis C with Lambda'' = sum d_i Z C_i
    std::vector<Int> d_;
    std::vector<std::vector<Rat>> reps_;
};

CosetTable enumerate_quotient(const Lattice& lambda, const Lattice& sub,
                              long cap = kDefaultCosetCap);

/// #{x in Lambda/e Lambda' : F^f x = x}, counted one coset at a time.
Int brute_fixed_points(const LatticePair& pair, const Int& e = 1, long f = 1,
                       long cap = kDefaultCosetCap);

/// Group structure of (Lambda + D^{-1}Lambda')/(Lambda + V[D]) from the
/// enumerated cosets after projecting along V[D]; the structure is derived
/// from element-order statistics, independently of any normal form.
FinAbGroup brute_bgroup(const LatticePair& pair, long cap = kDefaultCosetCap);

/// T_D(Lambda) as pi_W Lambda / (Lambda cap W), W = V[D], by enumeration.
FinAbGroup brute_separation(const Lattice& lambda, const RatMat& d,
                            long cap = kDefaultCosetCap);

/// Seeded generator of valid lattice pairs: a classified template,
/// conjugated by a random unimodular matrix with entries in [-3, 3],
/// optionally with Lambda' scaled by e <= 4.
class PairGenerator {
public:
    explicit PairGenerator(std::uint64_t seed, long max_param = 4);

    struct Case {
        TypeDescriptor type;
        Int scale;       // extra e applied to Lambda'
        LatticePair pair;
    };

    Case next();

private:
    std::mt19937_64 rng_;
    std::vector<TypeDescriptor> templates_;
};

} // namespace latpair
