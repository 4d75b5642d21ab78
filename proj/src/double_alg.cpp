#include "lagsub/double_alg.hpp"

#include "lagsub/error.hpp"

namespace lagsub {

DoubleElement SemidirectDouble::basis_vector(std::size_t k) const {
    DoubleElement v = zero();
    if (k < n())
        v.x.coeffs[k] = 1;
    else
        v.alpha.coeffs[k - n()] = 1;
    return v;
}

Vec SemidirectDouble::to_ambient(const DoubleElement& v) const {
    Vec w;
    w.reserve(ambient_dim());
    w.insert(w.end(), v.x.coeffs.begin(), v.x.coeffs.end());
    w.insert(w.end(), v.alpha.coeffs.begin(), v.alpha.coeffs.end());
    return w;
}

DoubleElement SemidirectDouble::from_ambient(const Vec& w) const {
    if (w.size() != ambient_dim()) throw DimensionMismatch("from_ambient: expected 2n coordinates");
    DoubleElement v = zero();
    for (std::size_t i = 0; i < n(); ++i) {
        v.x.coeffs[i] = w[i];
        v.alpha.coeffs[i] = w[n() + i];
    }
    return v;
}

DoubleElement SemidirectDouble::d_bracket(const DoubleElement& a, const DoubleElement& b) const {
    return {L_->bracket(a.x, b.x), L_->coad(a.x, b.alpha) - L_->coad(b.x, a.alpha)};
}

Rational SemidirectDouble::bilinear_form(const DoubleElement& a, const DoubleElement& b) const {
    return a.alpha(b.x) + b.alpha(a.x);
}

DoubleElement SemidirectDouble::big_ad(const DGroupElement& d, const DoubleElement& v) const {
    return {d.g.apply(v.x), d.g.coapply(v.alpha - L_->coad(v.x, d.alpha))};
}

DGroupElement SemidirectDouble::multiply(const DGroupElement& d1, const DGroupElement& d2) const {
    return {d1.g.times(d2.g), d2.g.coapply_inverse(d1.alpha) + d2.alpha};
}

DGroupElement SemidirectDouble::invert(const DGroupElement& d) const {
    GStarElement neg = Rational(-1) * d.g.coapply(d.alpha);
    return {d.g.inverse(), neg};
}

DGroupElement SemidirectDouble::identity() const {
    return {L_->identity_group_element(), GStarElement(n())};
}

DGroupElement SemidirectDouble::embed_dual(const GStarElement& a) const {
    return {L_->identity_group_element(), a};
}

bool SemidirectDouble::check_invariance(const DGroupElement& d, const DoubleElement& a,
                                        const DoubleElement& b) const {
    return bilinear_form(big_ad(d, a), big_ad(d, b)) == bilinear_form(a, b);
}

} // namespace lagsub
