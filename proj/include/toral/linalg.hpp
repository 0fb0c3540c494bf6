#pragma once

// Exact integer and rational matrices over GMP.
//
// Conventions used throughout the library:
//  * storage is row-major;
//  * lattices are spanned by the ROWS of a matrix, and linear maps on row
//    vectors act on the right (x -> x * m);
//  * the Hermite normal form is row-style: upper echelon, zero rows last,
//    pivots positive, entries above a pivot reduced into [0, pivot).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "toral/errors.hpp"

namespace toral {

using IntVec = std::vector<mpz_class>;
using RatVec = std::vector<mpq_class>;

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != rows_ * cols_)
            throw InputError("exact-linalg", "entry count does not match dimensions");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (auto const & r : rows) {
            if (r.size() != cols_)
                throw InputError("exact-linalg", "ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T & operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    T const & operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> const & entries() const { return a_; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_row(std::size_t i, std::vector<T> const & r)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = r[j];
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const
    {
        Matrix b(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, Matrix const & b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (auto const & x : a_)
            if (x != 0) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }

    friend bool operator==(Matrix const & x, Matrix const & y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix & operator+=(Matrix const & o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix & operator-=(Matrix const & o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix & operator*=(T const & s)
    {
        for (auto & x : a_)
            x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix x, Matrix const & y) { return x += y; }
    friend Matrix operator-(Matrix x, Matrix const & y) { return x -= y; }
    friend Matrix operator-(Matrix x)
    {
        for (auto & e : x.a_)
            e = -e;
        return x;
    }
    friend Matrix operator*(T const & s, Matrix x) { return x *= s; }

    friend Matrix operator*(Matrix const & x, Matrix const & y)
    {
        if (x.cols_ != y.rows_)
            throw PreconditionError("exact-linalg", "matrix product shape mismatch");
        Matrix p(x.rows_, y.cols_);
        T t;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                T const & xik = x(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    t = xik * y(k, j);
                    p(i, j) += t;
                }
            }
        return p;
    }

  private:
    void check_same_shape(Matrix const & o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw PreconditionError("exact-linalg", "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using IntMat = Matrix<mpz_class>;
using RatMat = Matrix<mpq_class>;

template <class T>
std::ostream & operator<<(std::ostream & os, Matrix<T> const & m)
{
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

// row vector times matrix
template <class T>
std::vector<T> operator*(std::vector<T> const & x, Matrix<T> const & m)
{
    if (x.size() != m.rows())
        throw PreconditionError("exact-linalg", "vector-matrix shape mismatch");
    std::vector<T> y(m.cols(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            y[j] += x[i] * m(i, j);
    }
    return y;
}

template <class T>
Matrix<T> direct_sum(std::vector<Matrix<T>> const & blocks)
{
    std::size_t r = 0, c = 0;
    for (auto const & b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix<T> s(r, c);
    r = c = 0;
    for (auto const & b : blocks) {
        s.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return s;
}

// m (+) m (+) ... (+) m, k copies
template <class T>
Matrix<T> direct_power(Matrix<T> const & m, std::size_t k)
{
    return direct_sum(std::vector<Matrix<T>>(k, m));
}

template <class T>
Matrix<T> vstack(Matrix<T> const & top, Matrix<T> const & bottom)
{
    if (top.cols() != bottom.cols())
        throw PreconditionError("exact-linalg", "vstack column mismatch");
    Matrix<T> s(top.rows() + bottom.rows(), top.cols());
    s.set_block(0, 0, top);
    s.set_block(top.rows(), 0, bottom);
    return s;
}

template <class T>
Matrix<T> hstack(Matrix<T> const & left, Matrix<T> const & right)
{
    if (left.rows() != right.rows())
        throw PreconditionError("exact-linalg", "hstack row mismatch");
    Matrix<T> s(left.rows(), left.cols() + right.cols());
    s.set_block(0, 0, left);
    s.set_block(0, left.cols(), right);
    return s;
}

template <class T>
Matrix<T> matrix_power(Matrix<T> const & m, unsigned e)
{
    Matrix<T> r = Matrix<T>::identity(m.rows());
    Matrix<T> b = m;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

// Characteristic polynomial det(tI - m), constant term first, via the
// division-free Berkowitz recurrence. Valid over any commutative ring.
template <class T>
std::vector<T> charpoly_berkowitz(Matrix<T> const & m)
{
    if (!m.is_square())
        throw PreconditionError("exact-linalg", "charpoly of non-square matrix");
    std::size_t const n = m.rows();
    // coefficients highest degree first while iterating
    std::vector<T> v{T(1)};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<T> q(r + 2, T(0));
        q[0] = T(1);
        q[1] = -m(r, r);
        std::vector<T> x(r);
        for (std::size_t i = 0; i < r; ++i)
            x[i] = m(i, r);
        for (std::size_t k = 2; k < r + 2; ++k) {
            T dot(0);
            for (std::size_t i = 0; i < r; ++i)
                dot += m(r, i) * x[i];
            q[k] = -dot;
            std::vector<T> nx(r, T(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    nx[i] += m(i, j) * x[j];
            x = std::move(nx);
        }
        std::vector<T> nv(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                nv[i] += q[i - j] * v[j];
        v = std::move(nv);
    }
    return std::vector<T>(v.rbegin(), v.rend());
}

// adj(m) = (-1)^(n-1) (m^(n-1) + c_(n-1) m^(n-2) + ... + c_1 I), where the c_i
// are the characteristic polynomial coefficients (Cayley-Hamilton).
template <class T>
Matrix<T> adjugate(Matrix<T> const & m)
{
    std::size_t const n = m.rows();
    if (n == 0) return Matrix<T>();
    auto const c = charpoly_berkowitz(m);
    Matrix<T> acc = Matrix<T>::identity(n);
    for (std::size_t i = n - 1; i >= 1; --i) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d)
            acc(d, d) += c[i];
    }
    if (n % 2 == 0) acc = -acc;
    return acc;
}

// Fraction-free (Bareiss) determinant.
mpz_class det(IntMat const & m);
mpq_class det(RatMat const & m);

// det(tI - m), constant term first.
IntVec charpoly(IntMat const & m);

struct HnfResult {
    IntMat h;         // row Hermite normal form
    IntMat u;         // unimodular, u * m == h
    std::size_t rank; // number of nonzero rows of h
    std::vector<std::size_t> pivots;
};

HnfResult hnf(IntMat const & m);

// Z-basis (rows, in Hermite normal form) of { x in Z^rows : x * m == 0 }.
IntMat kernel_lattice(IntMat const & m);

struct IntegerSolution {
    IntVec particular; // reduced modulo the kernel lattice
    IntMat kernel;     // kernel_lattice(m)
};

// Solves x * m == b over the integers; nullopt when no integer solution exists.
std::optional<IntegerSolution> solve_integer(IntMat const & m, IntVec const & b);

// x * m == b over Q (some solution, free variables zero); nullopt if inconsistent.
std::optional<RatVec> solve_rational(RatMat const & m, RatVec const & b);

std::optional<RatMat> inverse(RatMat const & m);
std::size_t rank(RatMat const & m);

RatMat to_rational(IntMat const & m);
std::optional<IntMat> to_integer(RatMat const & m);
// Inverse of a matrix with det = +-1.
std::optional<IntMat> unimodular_inverse(IntMat const & m);
bool is_unimodular(IntMat const & m);

mpz_class content(IntVec const & v);

// LLL-reduced basis (delta = 3/4, exact rational Gram-Schmidt) of the lattice
// spanned by linearly independent rows.
IntMat lll_reduce(IntMat const & rows);
// floor(a / b) for b > 0
mpz_class floor_div(mpz_class const & a, mpz_class const & b);
// least common multiple of all denominators
mpz_class common_denominator(std::vector<mpq_class> const & v);
mpz_class common_denominator(RatMat const & m);

} // namespace toral
