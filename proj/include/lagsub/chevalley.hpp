#pragma once

#include <utility>
#include <vector>

#include "lagsub/matrix.hpp"
#include "lagsub/rootsys.hpp"

namespace lagsub {

/// Element of g in Chevalley-basis coordinates (h_1..h_l, then e_lambda in
/// the all-roots order).
struct GElement {
    Vec coeffs;

    GElement() = default;
    explicit GElement(Vec c) : coeffs(std::move(c)) {}
    explicit GElement(std::size_t dim) : coeffs(dim) {}

    bool is_zero() const { return is_zero_vec(coeffs); }
    friend GElement operator+(const GElement& a, const GElement& b) { return GElement(add(a.coeffs, b.coeffs)); }
    friend GElement operator-(const GElement& a, const GElement& b) { return GElement(sub(a.coeffs, b.coeffs)); }
    friend GElement operator*(const Rational& s, const GElement& a) { return GElement(scaled(a.coeffs, s)); }
    friend bool operator==(const GElement& a, const GElement& b) { return a.coeffs == b.coeffs; }
};

/// Element of g* in the dual coordinates; pairing with GElement is the
/// coordinate dot product.
struct GStarElement {
    Vec coeffs;

    GStarElement() = default;
    explicit GStarElement(Vec c) : coeffs(std::move(c)) {}
    explicit GStarElement(std::size_t dim) : coeffs(dim) {}

    bool is_zero() const { return is_zero_vec(coeffs); }
    Rational operator()(const GElement& y) const { return dot(coeffs, y.coeffs); }
    friend GStarElement operator+(const GStarElement& a, const GStarElement& b) { return GStarElement(add(a.coeffs, b.coeffs)); }
    friend GStarElement operator-(const GStarElement& a, const GStarElement& b) { return GStarElement(sub(a.coeffs, b.coeffs)); }
    friend GStarElement operator*(const Rational& s, const GStarElement& a) { return GStarElement(scaled(a.coeffs, s)); }
    friend bool operator==(const GStarElement& a, const GStarElement& b) { return a.coeffs == b.coeffs; }
};

class LieAlgebra;

/// One generator in a group-element word.
struct GenStep {
    enum class Kind { Unipotent, Torus } kind;
    Root root;               // Unipotent
    Rational t;              // Unipotent
    std::vector<Rational> c; // Torus
};

/// Adjoint-group element, represented by its matrix on g-coordinates
/// together with the generator word it was built from.  Construction
/// verifies that the matrix is an invertible Lie algebra automorphism.
class GroupElement {
public:
    GroupElement(const LieAlgebra& algebra, Matrix m, Matrix minv, std::vector<GenStep> word);

    const Matrix& matrix() const { return m_; }
    const Matrix& inv_matrix() const { return minv_; }
    const std::vector<GenStep>& word() const { return word_; }
    const LieAlgebra& algebra() const { return *algebra_; }

    /// Ad_g x
    GElement apply(const GElement& x) const { return GElement(m_ * x.coeffs); }
    /// Ad*_g alpha, i.e. alpha o Ad_{g^{-1}}
    GStarElement coapply(const GStarElement& a) const { return GStarElement(minv_t_ * a.coeffs); }
    /// Ad*_{g^{-1}} alpha = alpha o Ad_g
    GStarElement coapply_inverse(const GStarElement& a) const { return GStarElement(m_t_ * a.coeffs); }

    GroupElement times(const GroupElement& other) const;
    GroupElement inverse() const;

    bool is_identity() const { return m_ == Matrix::identity(m_.rows()); }

private:
    friend class LieAlgebra;
    struct Unchecked {};
    GroupElement(Unchecked, const LieAlgebra& algebra, Matrix m, Matrix minv,
                 std::vector<GenStep> word);
    void finish();

    const LieAlgebra* algebra_;
    Matrix m_, minv_;
    Matrix m_t_, minv_t_; // cached transposes for the coadjoint action
    std::vector<GenStep> word_;
};

/// Semisimple Lie algebra over Q in a Chevalley basis {h_1..h_l, e_lambda}.
/// Structure constants carry |N_{lambda,mu}| = p+1 with signs fixed by the
/// extraspecial-pair convention in the canonical root order; the Jacobi
/// identity is verified exhaustively before the constructor returns.
class LieAlgebra {
public:
    static LieAlgebra build(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::size_t dim() const { return dim_; }

    /// Basis index of e_lambda.
    std::size_t e_index(const Root& lambda) const {
        return static_cast<std::size_t>(rank()) + rs_.index_of(lambda);
    }
    /// Root of the basis vector at index i, if i is a root-vector slot.
    bool is_root_index(std::size_t i) const { return i >= static_cast<std::size_t>(rank()); }
    Root root_of_index(std::size_t i) const { return rs_.root_at(i - static_cast<std::size_t>(rank())); }

    GElement zero() const { return GElement(dim_); }
    GElement basis_vector(std::size_t i) const;
    GElement h(int i) const { return basis_vector(static_cast<std::size_t>(i)); }
    GElement e(const Root& lambda) const { return basis_vector(e_index(lambda)); }
    GStarElement dual_basis_vector(std::size_t i) const;

    using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
    const SparseVec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }

    GElement bracket(const GElement& x, const GElement& y) const;

    /// Matrix of y -> [x, y].
    Matrix ad_matrix(const GElement& x) const;

    /// ad*_x gamma with (ad*_x gamma)(y) = -gamma([x, y]).
    GStarElement coad(const GElement& x, const GStarElement& gamma) const;

    /// exp(t ad e_lambda) as a group element.
    GroupElement unipotent(const Root& lambda, const Rational& t) const;

    /// Torus element acting trivially on h and by the character
    /// chi_lambda(c) = prod c_i^{lambda_i} on each root space.
    GroupElement torus(const std::vector<Rational>& c) const;
    Rational character(const std::vector<Rational>& c, const Root& lambda) const;

    GroupElement identity_group_element() const;

    /// Structure constant N with [e_a, e_b] = N e_{a+b}; a+b must be a root.
    const Rational& structure_constant(const Root& a, const Root& b) const;

    /// Exhaustive automorphism test on all basis pairs.
    bool is_automorphism(const Matrix& m) const;

private:
    explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {}
    void fill_table();
    void verify_jacobi() const;

    RootSystem rs_;
    std::size_t dim_ = 0;
    std::vector<std::vector<SparseVec>> table_;
};

} // namespace lagsub
