#pragma once

#include <map>
#include <string>
#include <vector>

#include "latpair/rational.hpp"

namespace latpair {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree.  The leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({Int(1)}); }
    /// t^n
    static IntPoly monomial(std::size_t n, const Int& a = 1);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;

    Int operator()(const Int& x) const; // evaluation

    IntPoly derivative() const;

    /// Quotient, asserting exact division.
    IntPoly divexact(const IntPoly& d) const;

    /// True (and sets q) iff d divides *this exactly.
    bool try_divide(const IntPoly& d, IntPoly& q) const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// m-th cyclotomic polynomial, by the recursion
/// x^m - 1 = prod_{d | m} Phi_d(x).
IntPoly cyclotomic_poly(long m);

/// Resultant of two integer polynomials (Sylvester determinant).
Int resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant of f up to the conventional leading-coefficient factor:
/// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f).
Rat discriminant(const IntPoly& f);

} // namespace latpair
