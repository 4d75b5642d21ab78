#include "lagsub/subspace.hpp"

#include "lagsub/error.hpp"

namespace lagsub {

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    Matrix r = rref(rows);
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (!r.at(i, j).is_zero()) {
                keep.push_back(i);
                pivots.push_back(j);
                break;
            }
        }
    }
    Matrix b(keep.size(), rows.cols());
    for (std::size_t i = 0; i < keep.size(); ++i) b.set_row(i, r.row(keep[i]));
    s.basis_ = std::move(b);
    s.pivots_ = std::move(pivots);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: ambient mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational c = w[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
            const Rational& bij = basis_.at(i, j);
            if (!bij.is_zero()) w[j] -= c * bij;
        }
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace_equal: ambient dimension mismatch");
    return u == v;
}

Subspace kernel_basis(const Matrix& m) {
    Matrix r = rref(m);
    const std::size_t n = m.cols();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t nrank = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!r.at(i, j).is_zero()) {
                pivot_of_col[j] = static_cast<long>(i);
                ++nrank;
                break;
            }
        }
    }
    Matrix basis(n - nrank, n);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        basis.at(row, free_col) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            long pi = pivot_of_col[j];
            if (pi >= 0) basis.at(row, j) = -r.at(static_cast<std::size_t>(pi), free_col);
        }
        ++row;
    }
    return Subspace::span(basis);
}

} // namespace lagsub
