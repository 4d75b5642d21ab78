#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "lagsub/rational.hpp"

namespace lagsub {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals.  Dimensions are fixed at construction.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    bool is_zero() const;

    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; the row space is unchanged.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse; throws on a singular input.
Matrix inverse(const Matrix& m);

/// Solve x * basis_rows = target, i.e. express target in the row space.
/// Returns false when target is outside the row space.
bool express_in_rows(const Matrix& basis_rows, const Vec& target, Vec& coords_out);

/// exp(t*m) = sum (t m)^i / i! for nilpotent m; throws NotNilpotent when
/// powers have not vanished by exponent = dim.
Matrix exp_nilpotent(const Matrix& m, const Rational& t);

Rational dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec scaled(const Vec& v, const Rational& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

} // namespace lagsub
