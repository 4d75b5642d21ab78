#include "lagsub/matrix.hpp"

#include <ostream>

#include "lagsub/error.hpp"

namespace lagsub {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<long>(i * cols_),
               data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("Matrix::set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix: add shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix: sub shape");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix: mul shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("Matrix: matvec shape");
    Vec r(a.rows_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            const Rational& aij = a.at(i, j);
            if (!aij.is_zero()) r[i] += aij * v[j];
        }
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "[") << m.at(i, j);
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

Matrix rref(const Matrix& m) {
    Matrix r = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = col; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        Rational inv = r.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            const Rational f = r.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix r = rref(m);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) { nz = true; break; }
        if (nz) ++rk;
    }
    return rk;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Matrix r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (!(r.at(i, i) == Rational(1))) throw Error("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

bool express_in_rows(const Matrix& basis_rows, const Vec& target, Vec& coords_out) {
    const std::size_t k = basis_rows.rows(), n = basis_rows.cols();
    if (target.size() != n) throw DimensionMismatch("express_in_rows: width mismatch");
    // Solve B^T c = target by elimination on the augmented (n x (k+1)) system.
    Matrix aug(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = basis_rows.at(j, i);
        aug.at(i, k) = target[i];
    }
    Matrix r = rref(aug);
    Vec c(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lead = k + 1;
        for (std::size_t j = 0; j < k + 1; ++j)
            if (!r.at(i, j).is_zero()) { lead = j; break; }
        if (lead == k + 1) continue;
        if (lead == k) return false; // inconsistent row 0 .. 0 | c
        c[lead] = r.at(i, k);
    }
    coords_out = std::move(c);
    return true;
}

Matrix exp_nilpotent(const Matrix& m, const Rational& t) {
    if (m.rows() != m.cols()) throw DimensionMismatch("exp_nilpotent: not square");
    const std::size_t n = m.rows();
    Matrix result = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Rational coeff(1);
    for (std::size_t i = 1; i <= n; ++i) {
        power = power * m;
        if (power.is_zero()) return result;
        coeff *= t;
        coeff /= Rational(static_cast<long>(i));
        Matrix term = power;
        term *= coeff;
        result += term;
    }
    throw NotNilpotent("exp_nilpotent: matrix power did not vanish by exponent = dim");
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec scaled(const Vec& v, const Rational& s) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

} // namespace lagsub
