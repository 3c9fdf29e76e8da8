#include "latpair/poly.hpp"

#include <sstream>

#include "latpair/linalg.hpp"

namespace latpair {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t n, const Int& a) {
    std::vector<Int> c(n + 1);
    c[n] = a;
    return IntPoly(std::move(c));
}

const Int& IntPoly::leading() const {
    check_internal(!is_zero(), "leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> c = c_;
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

Int IntPoly::operator()(const Int& x) const {
    Int v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
    return IntPoly(std::move(c));
}

bool IntPoly::try_divide(const IntPoly& d, IntPoly& q) const {
    check_internal(!d.is_zero(), "division by zero polynomial");
    std::vector<Int> rem = c_;
    long dd = d.degree();
    long qd = degree() - dd;
    if (is_zero()) {
        q = IntPoly();
        return true;
    }
    if (qd < 0) return false;
    std::vector<Int> quot(qd + 1);
    for (long k = qd; k >= 0; --k) {
        Int& top = rem[k + dd];
        if (top % d.leading() != 0) return false;
        Int f = top / d.leading();
        quot[k] = f;
        if (f != 0)
            for (long i = 0; i <= dd; ++i) rem[k + i] -= f * d.coeff(i);
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    q = IntPoly(std::move(quot));
    return true;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    IntPoly q;
    check_internal(try_divide(d, q), "polynomial division is not exact");
    return q;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int m = abs(a);
        first = false;
        if (i == 0) {
            os << m.get_str();
            continue;
        }
        if (m != 1) os << m.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

IntPoly cyclotomic_poly(long m) {
    check_input(m >= 1, "cyclotomic index must be positive");
    // x^m - 1
    std::vector<Int> c(m + 1);
    c[0] = -1;
    c[m] = 1;
    IntPoly num(std::move(c));
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = num.divexact(cyclotomic_poly(d));
    return num;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    long m = f.degree(), n = g.degree();
    check_input(m >= 0 && n >= 0, "resultant of zero polynomial");
    if (m == 0) return pow(f.coeff(0), n);
    if (n == 0) return pow(g.coeff(0), m);
    std::size_t sz = m + n;
    RatMat s(sz, sz);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s(i, i + j) = Rat(f.coeff(m - j));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s(n + i, i + j) = Rat(g.coeff(n - j));
    return to_integer(det(s));
}

Rat discriminant(const IntPoly& f) {
    long d = f.degree();
    check_input(d >= 1, "discriminant needs degree >= 1");
    Int r = resultant(f, f.derivative());
    Rat disc = Rat(r) / Rat(f.leading());
    if (((d * (d - 1)) / 2) % 2 != 0) disc = -disc;
    return disc;
}

} // namespace latpair
