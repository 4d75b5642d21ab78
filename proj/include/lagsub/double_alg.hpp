#pragma once

#include "lagsub/chevalley.hpp"

namespace lagsub {

/// Element (x, alpha) of the semidirect sum d = g x| g*.
struct DoubleElement {
    GElement x;
    GStarElement alpha;

    friend DoubleElement operator+(const DoubleElement& a, const DoubleElement& b) {
        return {a.x + b.x, a.alpha + b.alpha};
    }
    friend DoubleElement operator-(const DoubleElement& a, const DoubleElement& b) {
        return {a.x - b.x, a.alpha - b.alpha};
    }
    friend bool operator==(const DoubleElement& a, const DoubleElement& b) {
        return a.x == b.x && a.alpha == b.alpha;
    }
    bool is_zero() const { return x.is_zero() && alpha.is_zero(); }
};

/// Element (g, alpha) of the group D = G x| g*.
struct DGroupElement {
    GroupElement g;
    GStarElement alpha;
};

/// The Lie algebra d = g x| g* with its invariant bilinear form and the
/// adjoint D-action.  The canonical d-basis is the g-basis followed by its
/// dual basis, so coordinates live in Q^{2n}.
class SemidirectDouble {
public:
    explicit SemidirectDouble(const LieAlgebra& algebra) : L_(&algebra) {}

    const LieAlgebra& algebra() const { return *L_; }
    std::size_t n() const { return L_->dim(); }
    std::size_t ambient_dim() const { return 2 * L_->dim(); }

    DoubleElement zero() const { return {GElement(n()), GStarElement(n())}; }
    /// Basis vector k of d: (b_k, 0) for k < n, (0, b_{k-n}*) for k >= n.
    DoubleElement basis_vector(std::size_t k) const;

    Vec to_ambient(const DoubleElement& v) const;
    DoubleElement from_ambient(const Vec& w) const;

    /// [(x, alpha), (y, beta)] = ([x,y], ad*_x beta - ad*_y alpha)
    DoubleElement d_bracket(const DoubleElement& a, const DoubleElement& b) const;

    /// ((x, alpha), (y, beta)) = alpha(y) + beta(x)
    Rational bilinear_form(const DoubleElement& a, const DoubleElement& b) const;

    /// Ad_{(g, alpha)}(x, beta) = (Ad_g x, -Ad*_g ad*_x alpha + Ad*_g beta)
    DoubleElement big_ad(const DGroupElement& d, const DoubleElement& v) const;

    /// Group law (g, a)(g', a') = (g g', Ad*_{g'^{-1}} a + a').
    DGroupElement multiply(const DGroupElement& d1, const DGroupElement& d2) const;
    /// (g, a)^{-1} = (g^{-1}, -Ad*_g a)
    DGroupElement invert(const DGroupElement& d) const;
    DGroupElement identity() const;
    DGroupElement embed_group(const GroupElement& g) const { return {g, GStarElement(n())}; }
    DGroupElement embed_dual(const GStarElement& a) const;

    /// Form preservation on one pair; the invariance law as an executable test.
    bool check_invariance(const DGroupElement& d, const DoubleElement& a,
                          const DoubleElement& b) const;

private:
    const LieAlgebra* L_;
};

} // namespace lagsub
