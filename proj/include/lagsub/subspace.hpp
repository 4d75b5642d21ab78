#pragma once

#include "lagsub/matrix.hpp"

namespace lagsub {

/// Linear subspace of Q^n, canonically represented by the RREF of a spanning
/// set with zero rows dropped.  Two subspaces are equal iff their RREF
/// matrices are identical, so equality is a bit-exact comparison.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Canonicalize a spanning set given as matrix rows.
    static Subspace span(const Matrix& rows);
    static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Residual of v after reduction against the RREF basis; zero iff v lies
    /// in the subspace.
    Vec reduce(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_;           // RREF, no zero rows
    std::vector<std::size_t> pivots_; // pivot column per basis row
};

/// True iff the row spaces coincide; throws DimensionMismatch on distinct
/// ambient dimensions.
bool subspace_equal(const Subspace& u, const Subspace& v);

/// Null space of m (dimension cols - rank).
Subspace kernel_basis(const Matrix& m);

} // namespace lagsub
