#include "latpair/linalg.hpp"

#include <algorithm>

namespace latpair {

// ---------------------------------------------------------------------------
// Hermite normal form (column style)
// ---------------------------------------------------------------------------

HnfResult hnf(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat h = m;
    IntMat u = IntMat::identity(cols);

    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < rows; ++i) h(i, dst) += f * h(i, src);
        for (std::size_t i = 0; i < cols; ++i) u(i, dst) += f * u(i, src);
    };
    auto negate_col = [&](std::size_t j) {
        for (std::size_t i = 0; i < rows; ++i) h(i, j) = -h(i, j);
        for (std::size_t i = 0; i < cols; ++i) u(i, j) = -u(i, j);
    };
    auto swap_col = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        h.swap_cols(j, k);
        u.swap_cols(j, k);
    };

    std::size_t pc = 0; // next pivot column
    for (std::size_t i = 0; i < rows && pc < cols; ++i) {
        // Euclid across columns pc..cols-1 on row i.
        while (true) {
            std::size_t nz = cols;
            for (std::size_t j = pc; j < cols; ++j)
                if (h(i, j) != 0 && (nz == cols || abs(h(i, j)) < abs(h(i, nz)))) nz = j;
            if (nz == cols) break; // row i zero beyond pc
            swap_col(pc, nz);
            if (h(i, pc) < 0) negate_col(pc);
            bool clean = true;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (h(i, j) == 0) continue;
                addmul_col(j, pc, -fdiv(h(i, j), h(i, pc)));
                if (h(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(i, pc) == 0) continue;
        // Reduce the pivot row entries of earlier columns into [0, pivot).
        for (std::size_t j = 0; j < pc; ++j) {
            Int f = fdiv(h(i, j), h(i, pc));
            addmul_col(j, pc, -f);
        }
        ++pc;
    }
    return {std::move(h), std::move(u)};
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

SnfResult snf(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);

    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < cols; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) += f * u(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < rows; ++i) a(i, dst) += f * a(i, src);
        for (std::size_t i = 0; i < cols; ++i) v(i, dst) += f * v(i, src);
    };

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t s = 0; s < nmin; ++s) {
        // Move a minimal nonzero entry of the trailing block to (s, s).
        while (true) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j)
                    if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) break; // trailing block zero
            if (bi != s) {
                a.swap_rows(s, bi);
                u.swap_rows(s, bi);
            }
            if (bj != s) {
                a.swap_cols(s, bj);
                v.swap_cols(s, bj);
            }
            bool again = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                addmul_row(i, s, -fdiv(a(i, s), a(s, s)));
                if (a(i, s) != 0) again = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                addmul_col(j, s, -fdiv(a(s, j), a(s, s)));
                if (a(s, j) != 0) again = true;
            }
            if (again) continue;
            // Divisibility: fold any entry the pivot does not divide into row s.
            bool fixed = true;
            for (std::size_t i = s + 1; i < rows && fixed; ++i)
                for (std::size_t j = s + 1; j < cols && fixed; ++j)
                    if (a(i, j) % a(s, s) != 0) {
                        addmul_row(s, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    SnfResult res;
    for (std::size_t s = 0; s < nmin; ++s) {
        if (a(s, s) == 0) continue;
        if (a(s, s) < 0) {
            for (std::size_t j = 0; j < cols; ++j) a(s, j) = -a(s, j);
            for (std::size_t j = 0; j < rows; ++j) u(s, j) = -u(s, j);
        }
        res.d.push_back(a(s, s));
    }
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

namespace {

// Reduced column echelon form; returns pivot rows of each echelon column.
std::pair<RatMat, std::vector<std::size_t>> rcef(const RatMat& m) {
    RatMat a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t pc = 0;
    for (std::size_t i = 0; i < rows && pc < cols; ++i) {
        std::size_t sel = cols;
        for (std::size_t j = pc; j < cols; ++j)
            if (a(i, j) != 0) {
                sel = j;
                break;
            }
        if (sel == cols) continue;
        a.swap_cols(pc, sel);
        Rat inv = 1 / a(i, pc);
        for (std::size_t r = 0; r < rows; ++r) a(r, pc) *= inv;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == pc || a(i, j) == 0) continue;
            Rat f = a(i, j);
            for (std::size_t r = 0; r < rows; ++r) a(r, j) -= f * a(r, pc);
        }
        pivots.push_back(i);
        ++pc;
    }
    RatMat basis(rows, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) basis(i, j) = a(i, j);
    return {std::move(basis), std::move(pivots)};
}

} // namespace

RatMat column_echelon(const RatMat& m) { return rcef(m).first; }

long rank(const RatMat& m) { return static_cast<long>(rcef(m).second.size()); }

RatMat primitive_columns(const RatMat& m) {
    std::vector<std::vector<Rat>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto c = m.col(j);
        Int den = 1, num = 0;
        for (const auto& x : c) den = lcm(den, x.get_den());
        for (const auto& x : c) num = gcd(num, Int(x.get_num() * (den / x.get_den())));
        if (num == 0) continue; // zero column
        Rat scale = Rat(den) / Rat(num);
        int sign = 0;
        for (auto& x : c) {
            x *= scale;
            if (sign == 0 && x != 0) sign = x > 0 ? 1 : -1;
        }
        if (sign < 0)
            for (auto& x : c) x = -x;
        cols.push_back(std::move(c));
    }
    RatMat out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) out.set_col(j, cols[j]);
    return out;
}

RatMat rational_kernel(const RatMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Row-reduce [M] and read the kernel off the free columns.
    RatMat a = m;
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t pr = 0;
    for (std::size_t j = 0; j < cols && pr < rows; ++j) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (a(i, j) != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        a.swap_rows(pr, sel);
        Rat inv = 1 / a(pr, j);
        for (std::size_t k = 0; k < cols; ++k) a(pr, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || a(i, j) == 0) continue;
            Rat f = a(i, j);
            for (std::size_t k = 0; k < cols; ++k) a(i, k) -= f * a(pr, k);
        }
        pivot_of_col[j] = static_cast<long>(pr);
        ++pr;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_of_col[j] < 0) free_cols.push_back(j);
    RatMat ker(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fj = free_cols[k];
        ker(fj, k) = 1;
        for (std::size_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) ker(j, k) = -a(pivot_of_col[j], fj);
    }
    return primitive_columns(ker);
}

Rat det(const RatMat& m) {
    check_input(m.is_square(), "determinant of non-square matrix");
    RatMat a = m;
    const std::size_t n = a.rows();
    Rat d = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t sel = n;
        for (std::size_t i = j; i < n; ++i)
            if (a(i, j) != 0) {
                sel = i;
                break;
            }
        if (sel == n) return Rat(0);
        if (sel != j) {
            a.swap_rows(j, sel);
            d = -d;
        }
        d *= a(j, j);
        Rat inv = 1 / a(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a(i, j) == 0) continue;
            Rat f = a(i, j) * inv;
            for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
        }
    }
    return d;
}

Int det(const IntMat& m) { return to_integer(det(to_rational(m))); }

RatMat inverse(const RatMat& m) {
    check_input(m.is_square(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMat a = m.hcat(RatMat::identity(n));
    std::size_t pr = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t sel = n;
        for (std::size_t i = pr; i < n; ++i)
            if (a(i, j) != 0) {
                sel = i;
                break;
            }
        check_input(sel != n, "matrix is singular");
        a.swap_rows(pr, sel);
        Rat inv = 1 / a(pr, j);
        for (std::size_t k = 0; k < 2 * n; ++k) a(pr, k) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pr || a(i, j) == 0) continue;
            Rat f = a(i, j);
            for (std::size_t k = 0; k < 2 * n; ++k) a(i, k) -= f * a(pr, k);
        }
        ++pr;
    }
    RatMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
    check_input(a.rows() == b.rows(), "solve: shape mismatch");
    const std::size_t rows = a.rows(), cols = a.cols(), bs = b.cols();
    RatMat w = a.hcat(b);
    std::vector<long> pivot_col_of_row;
    std::size_t pr = 0;
    for (std::size_t j = 0; j < cols && pr < rows; ++j) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (w(i, j) != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        w.swap_rows(pr, sel);
        Rat inv = 1 / w(pr, j);
        for (std::size_t k = 0; k < cols + bs; ++k) w(pr, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || w(i, j) == 0) continue;
            Rat f = w(i, j);
            for (std::size_t k = 0; k < cols + bs; ++k) w(i, k) -= f * w(pr, k);
        }
        pivot_col_of_row.push_back(static_cast<long>(j));
        ++pr;
    }
    // Inconsistent if any zero row of A has a nonzero entry in the B block.
    for (std::size_t i = pr; i < rows; ++i)
        for (std::size_t k = 0; k < bs; ++k)
            if (w(i, cols + k) != 0) return std::nullopt;
    RatMat x(cols, bs);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        for (std::size_t k = 0; k < bs; ++k) x(pivot_col_of_row[r], k) = w(r, cols + k);
    return x;
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
    RatMat bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    auto x = solve(a, bm);
    if (!x) return std::nullopt;
    return x->col(0);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and cyclotomic factorization
// ---------------------------------------------------------------------------

IntPoly char_poly(const RatMat& m) {
    check_input(m.is_square(), "char_poly of non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: c_{n-k} = -tr(M A_{k-1} + c_{n-k+1}) / k
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RatMat ak = RatMat::identity(n); // A_0
    for (std::size_t k = 1; k <= n; ++k) {
        ak = m * ak;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += ak(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) ak(i, i) += c[n - k];
    }
    std::vector<Int> ic(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        check_input(is_integer(c[i]),
                    "characteristic polynomial is not integral; "
                    "the matrix does not preserve a lattice");
        ic[i] = c[i].get_num();
    }
    return IntPoly(std::move(ic));
}

UnitRootSplit strip_unit_root(const IntPoly& p) {
    check_input(!p.is_zero(), "strip_unit_root of zero polynomial");
    IntPoly q = p;
    IntPoly tminus1({Int(-1), Int(1)});
    long r = 0;
    while (q(1) == 0) {
        q = q.divexact(tminus1);
        ++r;
    }
    check_internal(q(1) != 0, "maximality of the (t-1)-power failed");
    if (q(1) < 0) q = -q;
    return {r, q(1), q};
}

CyclotomicFactorization cyclotomic_multiplicities(const IntPoly& q) {
    check_input(!q.is_zero(), "cyclotomic factorization of zero polynomial");
    CyclotomicFactorization out;
    out.prime_power_product = 1;
    out.order = 1;
    IntPoly rem = q;
    const long deg = q.degree();
    // phi(m) >= sqrt(m/2), so phi(m) <= deg forces m <= 2 deg^2 + 2.
    for (long m = 1; m <= 2 * deg * deg + 2 && rem.degree() > 0; ++m) {
        if (euler_phi(m) > deg) continue;
        IntPoly phi = cyclotomic_poly(m);
        long a = 0;
        IntPoly quo;
        while (rem.try_divide(phi, quo)) {
            rem = quo;
            ++a;
        }
        if (a == 0) continue;
        out.multiplicity[m] = a;
        out.order = lcm(Int(out.order), Int(m)).get_si();
        if (long qbase = prime_power_base(m); qbase != 0)
            out.prime_power_product *= pow(Int(qbase), a);
    }
    check_input(rem.degree() == 0 && abs(rem.coeff(0)) == 1,
                "non-cyclotomic factor remains; operator is not of finite order");
    return out;
}

} // namespace latpair
