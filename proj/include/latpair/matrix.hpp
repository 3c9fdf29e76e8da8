#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latpair/rational.hpp"

namespace latpair {

/// Dense matrix over an exact coefficient ring (Int or Rat), row-major.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            check_input(r.size() == cols_, "matrix rows must have equal length");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        check_input(cols_ == o.rows_, "matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        check_input(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_input(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    Mat operator*(const T& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    void swap_cols(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    /// Columns of `o` appended on the right.
    Mat hcat(const Mat& o) const {
        if (empty() && rows_ == 0) return o;
        if (o.empty() && o.rows_ == 0) return *this;
        check_input(rows_ == o.rows_, "hcat row mismatch");
        Mat r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    Mat columns(const std::vector<std::size_t>& idx) const {
        Mat r(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    std::vector<T> apply(const std::vector<T>& v) const {
        check_input(v.size() == cols_, "matrix-vector shape mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline bool is_integral(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline IntMat to_integral(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_integer(m(i, j));
    return r;
}

/// Least common denominator of all entries.
inline Int common_denominator(const RatMat& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    return l;
}

inline std::vector<Rat> to_rational(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

} // namespace latpair
