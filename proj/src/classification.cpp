#include "latpair/classification.hpp"

#include <sstream>

namespace latpair {

namespace {

bool needs_two_params(TypeKind k) {
    return k == TypeKind::T11 || k == TypeKind::T12A || k == TypeKind::T12B ||
           k == TypeKind::T22;
}

const char* kind_name(TypeKind k) {
    switch (k) {
        case TypeKind::T1: return "1";
        case TypeKind::T2: return "2";
        case TypeKind::T11: return "1.1";
        case TypeKind::T12A: return "1.2A";
        case TypeKind::T12B: return "1.2B";
        case TypeKind::T22: return "2.2";
        case TypeKind::T33: return "3.3";
        case TypeKind::T44: return "4.4";
        case TypeKind::T66: return "6.6";
    }
    throw internal_error("unreachable");
}

} // namespace

TypeDescriptor::TypeDescriptor(TypeKind kind, Int n) : kind_(kind), n_(std::move(n)), m_(0) {
    check_input(!needs_two_params(kind_), "type requires two parameters");
    check_input(n_ >= 1, "type parameter must be positive");
}

TypeDescriptor::TypeDescriptor(TypeKind kind, Int n, Int m)
    : kind_(kind), n_(std::move(n)), m_(std::move(m)) {
    check_input(needs_two_params(kind_), "type takes a single parameter");
    check_input(n_ >= 1 && m_ >= 1, "type parameters must be positive");
    if (kind_ == TypeKind::T11 || kind_ == TypeKind::T22) {
        Int g = gcd(n_, m_);
        Int l = n_ / g * m_;
        n_ = g;
        m_ = l;
    }
    if (kind_ == TypeKind::T12B)
        check_input((n_ - m_) % 2 == 0, "type 1.2B requires n = m mod 2");
}

bool TypeDescriptor::two_parameter() const { return needs_two_params(kind_); }

std::string TypeDescriptor::str() const {
    std::ostringstream os;
    os << kind_name(kind_) << ":" << n_.get_str();
    if (two_parameter()) os << "," << m_.get_str();
    return os.str();
}

TypeDescriptor TypeDescriptor::parse(const std::string& s) {
    auto colon = s.find(':');
    check_input(colon != std::string::npos, "type string needs ':'");
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    TypeKind kind;
    if (head == "1") kind = TypeKind::T1;
    else if (head == "2") kind = TypeKind::T2;
    else if (head == "1.1") kind = TypeKind::T11;
    else if (head == "1.2A") kind = TypeKind::T12A;
    else if (head == "1.2B") kind = TypeKind::T12B;
    else if (head == "2.2") kind = TypeKind::T22;
    else if (head == "3.3") kind = TypeKind::T33;
    else if (head == "4.4") kind = TypeKind::T44;
    else if (head == "6.6") kind = TypeKind::T66;
    else throw invalid_input("unknown type kind: " + head);
    try {
        auto comma = tail.find(',');
        if (needs_two_params(kind)) {
            check_input(comma != std::string::npos, "type needs two parameters");
            return TypeDescriptor(kind, Int(tail.substr(0, comma)), Int(tail.substr(comma + 1)));
        }
        check_input(comma == std::string::npos, "type takes one parameter");
        return TypeDescriptor(kind, Int(tail));
    } catch (const std::invalid_argument&) {
        throw invalid_input("malformed type parameters: " + s);
    }
}

// ---------------------------------------------------------------------------
// Model pairs
// ---------------------------------------------------------------------------

namespace {

RatMat diag2(const Rat& a, const Rat& b) { return RatMat{{a, Rat(0)}, {Rat(0), b}}; }

// (zeta_3 - 1) n Z[zeta_3] in the basis (1, zeta_3).
RatMat hex_sublattice(const Int& n) {
    return RatMat{{Rat(-n), Rat(-n)}, {Rat(n), Rat(-2) * Rat(n)}};
}

RatMat hex_gram(const Int& n) {
    return RatMat{{frac(Int(2), 3 * n), frac(Int(-1), 3 * n)},
                  {frac(Int(-1), 3 * n), frac(Int(2), 3 * n)}};
}

} // namespace

LatticePair make_type(const TypeDescriptor& t) {
    const Int &n = t.n(), &m = t.m();
    switch (t.kind()) {
        case TypeKind::T1:
            return LatticePair(Lattice(RatMat{{Rat(1)}}), Lattice(RatMat{{Rat(n)}}),
                               RatMat{{Rat(1)}}, RatMat{{frac(Int(1), n)}});
        case TypeKind::T2:
            return LatticePair(Lattice(RatMat{{Rat(1)}}), Lattice(RatMat{{Rat(n)}}),
                               RatMat{{Rat(-1)}}, RatMat{{frac(Int(1), n)}});
        case TypeKind::T11:
            return LatticePair(Lattice::standard(2), Lattice(diag2(Rat(n), Rat(m))),
                               RatMat::identity(2), diag2(frac(Int(1), n), frac(Int(1), m)));
        case TypeKind::T12A:
            return LatticePair(Lattice::standard(2), Lattice(diag2(Rat(n), Rat(m))),
                               diag2(Rat(1), Rat(-1)), diag2(frac(Int(1), n), frac(Int(1), m)));
        case TypeKind::T12B: {
            RatMat lam{{Rat(1), frac(1, 2)}, {Rat(0), frac(1, 2)}};
            RatMat sub{{Rat(n), frac(n, Int(2))}, {Rat(0), frac(m, Int(2))}};
            return LatticePair(Lattice(lam), Lattice(sub), diag2(Rat(1), Rat(-1)),
                               diag2(frac(Int(2), n), frac(Int(2), m)));
        }
        case TypeKind::T22:
            return LatticePair(Lattice::standard(2), Lattice(diag2(Rat(n), Rat(m))),
                               diag2(Rat(-1), Rat(-1)), diag2(frac(Int(1), n), frac(Int(1), m)));
        case TypeKind::T33:
            return LatticePair(Lattice::standard(2), Lattice(hex_sublattice(n)),
                               RatMat{{Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}}, hex_gram(n));
        case TypeKind::T44:
            return LatticePair(Lattice::standard(2), Lattice(diag2(Rat(n), Rat(n))),
                               RatMat{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}},
                               diag2(frac(Int(1), n), frac(Int(1), n)));
        case TypeKind::T66:
            return LatticePair(Lattice::standard(2), Lattice(hex_sublattice(n)),
                               RatMat{{Rat(1), Rat(-1)}, {Rat(1), Rat(0)}}, hex_gram(n));
    }
    throw internal_error("unreachable");
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

namespace {

// [L cap W : L' cap W] for a line (or any subspace) W.
Int line_index(const LatticePair& pair, const RatMat& w) {
    MixedModule sub = MixedModule::from_subspace(w);
    return FiniteQuotient(mm_intersect(pair.lambda().mixed(), sub),
                          mm_intersect(pair.lambda_prime().mixed(), sub))
        .order();
}

// Verify Lambda' = g(F) Lambda; complete isomorphism test for the
// irreducible kinds (ideal equality in a principal ideal domain).
bool sublattice_is_polynomial_image(const LatticePair& pair, const RatMat& g) {
    MixedModule img = mm_image(pair.lambda().mixed(), g);
    return img == pair.lambda_prime().mixed();
}

Int exact_sqrt(const Int& x) {
    check_input(mpz_perfect_square_p(x.get_mpz_t()), "pair is not of a classified type");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

} // namespace

TypeDescriptor classify(const LatticePair& pair) {
    check_input(pair.dim() <= 2, "classification covers rank <= 2 only");
    auto fac = cyclotomic_multiplicities(pair.frobenius_char_poly());
    const auto& mult = fac.multiplicity;
    Int index = pair.lambda().index_of(pair.lambda_prime());
    RatMat d = pair.frobenius() - RatMat::identity(pair.dim());

    if (pair.dim() == 1) {
        if (mult.count(1)) return TypeDescriptor(TypeKind::T1, index);
        return TypeDescriptor(TypeKind::T2, index);
    }

    auto quotient_params = [&]() {
        auto fs = FiniteQuotient(pair.lambda().mixed(), pair.lambda_prime().mixed())
                      .group()
                      .invariant_factors();
        Int n = fs.size() > 1 ? fs[0] : Int(1);
        Int m = fs.empty() ? Int(1) : fs.back();
        return std::pair<Int, Int>(n, m);
    };

    if (mult.count(1) && mult.at(1) == 2) {
        auto [n, m] = quotient_params();
        return TypeDescriptor(TypeKind::T11, n, m);
    }
    if (mult.count(2) && mult.at(2) == 2) {
        auto [n, m] = quotient_params();
        return TypeDescriptor(TypeKind::T22, n, m);
    }
    if (mult.count(1) && mult.count(2)) {
        Int t_lambda = separation_group(pair.lambda(), d).order();
        Int t_prime = separation_group(pair.lambda_prime(), d).order();
        RatMat plus = rational_kernel(d);
        RatMat minus = rational_kernel(pair.frobenius() + RatMat::identity(2));
        Int n = line_index(pair, plus), m = line_index(pair, minus);
        if (t_lambda == 1 && t_prime == 1) return TypeDescriptor(TypeKind::T12A, n, m);
        if (t_lambda == 2 && t_prime == 2) {
            check_input((n - m) % 2 == 0, "pair is not of a classified type");
            return TypeDescriptor(TypeKind::T12B, n, m);
        }
        throw invalid_input("pair is not of a classified type");
    }
    if (mult.count(3)) {
        check_input(index % 3 == 0, "pair is not of a classified type");
        Int n = exact_sqrt(index / 3);
        check_input(sublattice_is_polynomial_image(pair, d * Rat(n)),
                    "pair is not of a classified type");
        return TypeDescriptor(TypeKind::T33, n);
    }
    if (mult.count(4)) {
        Int n = exact_sqrt(index);
        check_input(sublattice_is_polynomial_image(pair, RatMat::identity(2) * Rat(n)),
                    "pair is not of a classified type");
        return TypeDescriptor(TypeKind::T44, n);
    }
    if (mult.count(6)) {
        check_input(index % 3 == 0, "pair is not of a classified type");
        Int n = exact_sqrt(index / 3);
        RatMat f2 = pair.frobenius() * pair.frobenius();
        check_input(
            sublattice_is_polynomial_image(pair, (f2 - RatMat::identity(2)) * Rat(n)),
            "pair is not of a classified type");
        return TypeDescriptor(TypeKind::T66, n);
    }
    throw invalid_input("pair is not of a classified type");
}

// ---------------------------------------------------------------------------
// Table entries
// ---------------------------------------------------------------------------

TypeInvariants type_invariants(const TypeDescriptor& t) {
    const Int &n = t.n(), &m = t.m();
    auto C2 = FinAbGroup({2});
    auto triv = FinAbGroup::trivial();
    bool n_even = n % 2 == 0, m_even = m % 2 == 0;
    switch (t.kind()) {
        case TypeKind::T1: return {triv, triv, n};
        case TypeKind::T2:
            return n_even ? TypeInvariants{triv, triv, 2} : TypeInvariants{triv, C2, 1};
        case TypeKind::T11: return {triv, triv, n * m};
        case TypeKind::T12A:
            return m_even ? TypeInvariants{triv, triv, 2 * n} : TypeInvariants{triv, C2, n};
        case TypeKind::T12B: return {C2, triv, n};
        case TypeKind::T22:
            if (!n_even && !m_even) return {triv, FinAbGroup({2, 2}), 1};
            if (n_even && m_even) return {triv, triv, 4};
            return {triv, C2, 2};
        case TypeKind::T33: return {triv, triv, 3};
        case TypeKind::T44:
            return n_even ? TypeInvariants{triv, triv, 2} : TypeInvariants{triv, C2, 1};
        case TypeKind::T66: return {triv, triv, 1};
    }
    throw internal_error("unreachable");
}

// ---------------------------------------------------------------------------
// Cyclotomic pairs
// ---------------------------------------------------------------------------

namespace {

using RatPoly = std::vector<Rat>; // ascending, not normalized

RatPoly poly_mod(RatPoly a, const IntPoly& modulus) {
    long dm = modulus.degree();
    while (static_cast<long>(a.size()) > dm) {
        Rat lead = a.back();
        a.pop_back();
        if (lead == 0) continue;
        std::size_t off = a.size() - dm;
        for (long i = 0; i < dm; ++i)
            a[off + i] -= lead * Rat(modulus.coeff(i)) / Rat(modulus.leading());
    }
    a.resize(dm, Rat(0));
    return a;
}

RatPoly poly_mulmod(const RatPoly& a, const RatPoly& b, const IntPoly& modulus) {
    RatPoly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_mod(std::move(c), modulus);
}

bool poly_is_zero(const RatPoly& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

// x^k mod Phi_n
RatPoly power_of_root(long k, long n, const IntPoly& phi) {
    long phin = phi.degree();
    k %= n;
    if (k < 0) k += n;
    RatPoly p(std::max<long>(k + 1, 1), Rat(0));
    p[k] = 1;
    if (k < phin) {
        p.resize(phin, Rat(0));
        return p;
    }
    return poly_mod(std::move(p), phi);
}

// conj: zeta -> zeta^{-1}
RatPoly conjugate(const RatPoly& a, long n, const IntPoly& phi) {
    RatPoly out(phi.degree(), Rat(0));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        RatPoly term = power_of_root(-static_cast<long>(k), n, phi);
        for (std::size_t i = 0; i < term.size(); ++i) out[i] += a[k] * term[i];
    }
    return out;
}

// Inverse in Q[x]/Phi_n by the extended Euclidean algorithm.
RatPoly invert_mod(const RatPoly& a, const IntPoly& phi) {
    auto degree = [](const RatPoly& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    RatPoly r0(phi.degree() + 1), r1 = a;
    for (long i = 0; i <= phi.degree(); ++i) r0[i] = Rat(phi.coeff(i));
    RatPoly s0{Rat(0)}, s1{Rat(1)};
    while (degree(r1) > 0) {
        // divide r0 by r1
        RatPoly q(std::max<long>(degree(r0) - degree(r1) + 1, 1), Rat(0));
        RatPoly rem = r0;
        while (degree(rem) >= degree(r1)) {
            long shift = degree(rem) - degree(r1);
            Rat f = rem[degree(rem)] / r1[degree(r1)];
            q[shift] += f;
            for (long i = 0; i <= degree(r1); ++i) rem[i + shift] -= f * r1[i];
        }
        RatPoly snew(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = snew;
    }
    check_input(degree(r1) == 0, "element is not invertible");
    RatPoly inv(s1.size(), Rat(0));
    for (std::size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
    return poly_mod(std::move(inv), phi);
}

// Trace of multiplication by a on Q[x]/Phi_n.
Rat trace_of(const RatPoly& a, const IntPoly& phi) {
    long deg = phi.degree();
    Rat tr = 0;
    RatPoly col(deg, Rat(0));
    for (long j = 0; j < deg; ++j) {
        RatPoly xj(deg, Rat(0));
        xj[j] = 1;
        RatPoly prod = poly_mulmod(a, xj, phi);
        tr += prod[j];
    }
    return tr;
}

} // namespace

LatticePair cyclotomic_pair(long n, const std::vector<Rat>& omega) {
    check_input(n >= 3, "cyclotomic pair needs n >= 3");
    IntPoly phi = cyclotomic_poly(n);
    const long deg = phi.degree();
    check_input(static_cast<long>(omega.size()) <= deg, "omega degree too large");
    RatPoly w(deg, Rat(0));
    for (std::size_t i = 0; i < omega.size(); ++i) w[i] = omega[i];
    check_input(!poly_is_zero(w), "omega must be nonzero");
    check_input(conjugate(w, n, phi) == w, "omega must lie in the real subfield");

    RatPoly winv = invert_mod(w, phi);
    // G_{ij} = Tr(omega^{-1} zeta^i zeta^{-j})
    std::vector<Rat> tr_cache(2 * n, Rat(0));
    RatMat g(deg, deg);
    for (long i = 0; i < deg; ++i)
        for (long j = 0; j < deg; ++j) {
            long k = (i - j) % n;
            if (k < 0) k += n;
            RatPoly elt = poly_mulmod(winv, power_of_root(k, n, phi), phi);
            g(i, j) = trace_of(elt, phi);
        }
    check_internal(g == g.transpose(), "trace pairing must be symmetric");
    check_input(det(g) != 0, "pairing is degenerate");

    // companion matrix of Phi_n
    RatMat f(deg, deg);
    for (long i = 1; i < deg; ++i) f(i, i - 1) = 1;
    for (long i = 0; i < deg; ++i) f(i, deg - 1) = -Rat(phi.coeff(i)) / Rat(phi.leading());
    check_internal(f.transpose() * g * f == g, "pairing must be F-invariant");

    RatMat ginv = inverse(g);
    check_input(is_integral(ginv), "dual lattice is not contained in the lattice");
    Lattice lambda = Lattice::standard(deg);
    return LatticePair(lambda, dual_lattice(lambda, g), f, g);
}

std::vector<std::vector<Rat>> scan_cyclotomic_omegas(long n, long bound,
                                                     std::size_t max_results) {
    check_input(n >= 3 && bound >= 1, "bad scan parameters");
    IntPoly phi = cyclotomic_poly(n);
    const long deg = phi.degree();
    const long half = deg / 2;
    std::vector<std::vector<Rat>> found;
    std::vector<long> c(half + 1, -bound);
    while (true) {
        // omega = c0 + sum_j c_j (zeta^j + zeta^{-j})
        RatPoly w(deg, Rat(0));
        w[0] = Rat(c[0]);
        for (long j = 1; j <= half; ++j) {
            if (c[j] != 0) {
                RatPoly plus = power_of_root(j, n, phi);
                RatPoly minus = power_of_root(-j, n, phi);
                for (long i = 0; i < deg; ++i) w[i] += Rat(c[j]) * (plus[i] + minus[i]);
            }
        }
        if (!poly_is_zero(w)) {
            try {
                cyclotomic_pair(n, w);
                found.push_back(w);
                if (found.size() >= max_results) return found;
            } catch (const invalid_input&) {
            }
        }
        std::size_t k = 0;
        while (k <= static_cast<std::size_t>(half)) {
            if (++c[k] <= bound) break;
            c[k] = -bound;
            ++k;
        }
        if (k > static_cast<std::size_t>(half)) break;
    }
    return found;
}

Int c_n_closed_form(long n, bool base_index_odd, const Int& e) {
    check_input(n > 1 && e >= 1, "bad closed-form arguments");
    long q = prime_power_base(n);
    if (q != 0 && q % 2 == 1) return Int(q);
    if (q == 2) {
        bool scaled_index_even = (e % 2 == 0) || !base_index_odd;
        return scaled_index_even ? Int(2) : Int(1);
    }
    return Int(1);
}

// ---------------------------------------------------------------------------
// Permutation pairs
// ---------------------------------------------------------------------------

LatticePair permutation_pair(const std::vector<long>& orbit_sizes,
                             const std::optional<Lattice>& overlattice) {
    check_input(!orbit_sizes.empty(), "need at least one orbit");
    long dim = 0;
    for (long s : orbit_sizes) {
        check_input(s >= 1, "orbit sizes must be positive");
        dim += s;
    }
    RatMat f(dim, dim);
    long off = 0;
    for (long s : orbit_sizes) {
        for (long i = 0; i < s; ++i) f(off + (i + 1) % s, off + i) = 1;
        off += s;
    }
    Lattice sub = Lattice::standard(dim);
    Lattice lambda = overlattice.value_or(sub);
    check_input(lambda.contains(sub), "overlattice must contain the permutation lattice");
    LatticePair pair(lambda, sub, f);

    RatMat d = f - RatMat::identity(dim);
    std::vector<Int> expected;
    for (long s : orbit_sizes) expected.push_back(Int(s));
    check_internal(separation_group(sub, d) == FinAbGroup::from_cyclic_orders(expected),
                   "separation group of a permutation lattice must be prod C_{m_i}");
    check_internal(bgroup(lambda, sub, d).is_trivial(),
                   "B of a permutation sublattice must vanish");
    return pair;
}

} // namespace latpair
