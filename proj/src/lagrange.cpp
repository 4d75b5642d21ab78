#include "lagsub/lagrange.hpp"

#include <atomic>

#include "lagsub/error.hpp"

namespace lagsub {

Subalgebra::Subalgebra(const LieAlgebra& algebra, std::vector<GElement> basis)
    : L_(&algebra),
      basis_(std::move(basis)),
      b_(basis_.size(), algebra.dim()),
      span_(algebra.dim()),
      annihilator_(algebra.dim()) {
    const std::size_t k = basis_.size(), n = algebra.dim();
    for (std::size_t i = 0; i < k; ++i) {
        if (basis_[i].coeffs.size() != n)
            throw DimensionMismatch("Subalgebra: basis vector has wrong dimension");
        b_.set_row(i, basis_[i].coeffs);
    }
    rref_ = rref(b_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!rref_.at(i, j).is_zero()) {
                pivots_.push_back(j);
                break;
            }
    if (pivots_.size() != k)
        throw InvalidSubalgebra("Subalgebra: basis vectors are linearly dependent");
    Matrix p(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t m = 0; m < k; ++m) p.at(i, m) = b_.at(m, pivots_[i]);
    pinv_ = k ? inverse(p) : Matrix(0, 0);
    span_ = Subspace::span(b_);
    annihilator_ = kernel_basis(b_);

    witness_.assign(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (j < i) { // antisymmetry
                witness_[i][j] = scaled(witness_[j][i], Rational(-1));
                continue;
            }
            if (i == j) {
                witness_[i][j] = Vec(k);
                continue;
            }
            auto coords = express(L_->bracket(basis_[i], basis_[j]));
            if (!coords)
                throw InvalidSubalgebra("Subalgebra: [v_" + std::to_string(i + 1) + ", v_" +
                                        std::to_string(j + 1) + "] lies outside the span");
            witness_[i][j] = std::move(*coords);
        }
}

Subalgebra Subalgebra::whole(const LieAlgebra& algebra) {
    std::vector<GElement> basis;
    basis.reserve(algebra.dim());
    for (std::size_t i = 0; i < algebra.dim(); ++i) basis.push_back(algebra.basis_vector(i));
    return Subalgebra(algebra, std::move(basis));
}

Subalgebra Subalgebra::from_roots(const LieAlgebra& algebra, const std::vector<Root>& roots) {
    std::vector<GElement> basis;
    basis.reserve(roots.size());
    for (const Root& r : roots) basis.push_back(algebra.e(r));
    return Subalgebra(algebra, std::move(basis));
}

std::optional<Vec> Subalgebra::express(const GElement& w) const {
    const std::size_t k = basis_.size();
    if (!span_.contains(w.coeffs)) return std::nullopt;
    // Coefficients against the RREF rows live on the pivot coordinates;
    // convert back to the v-basis through pinv_.
    Vec d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = w.coeffs[pivots_[i]];
    Vec c(k);
    for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t i = 0; i < k; ++i)
            if (!d[i].is_zero()) c[m] += pinv_.at(m, i) * d[i];
    }
    return c;
}

GStarElement Subalgebra::dual_functional(std::size_t j) const {
    GStarElement xi(L_->dim());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!pinv_.at(j, i).is_zero()) xi.coeffs[pivots_[i]] = pinv_.at(j, i);
    return xi;
}

bool Subalgebra::is_abelian_by_brackets() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!L_->bracket(basis_[i], basis_[j]).is_zero()) return false;
    return true;
}

std::optional<std::vector<Root>> Subalgebra::root_vector_roots() const {
    std::vector<Root> roots;
    roots.reserve(basis_.size());
    for (const GElement& v : basis_) {
        long hit = -1;
        for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
            if (v.coeffs[i].is_zero()) continue;
            if (hit >= 0 || !L_->is_root_index(i)) return std::nullopt;
            hit = static_cast<long>(i);
        }
        if (hit < 0) return std::nullopt;
        roots.push_back(L_->root_of_index(static_cast<std::size_t>(hit)));
    }
    return roots;
}

bool check_cocycle(const Subalgebra& a, const Matrix& F) {
    const std::size_t k = a.dim();
    if (F.rows() != k || F.cols() != k)
        throw DimensionMismatch("check_cocycle: F must be " + std::to_string(k) + "x" +
                                std::to_string(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            if (!(F.at(i, j) + F.at(j, i)).is_zero()) return false;
    // f(v_a)([v_b, v_m]) through the closure witness
    auto eval = [&](std::size_t va, std::size_t vb, std::size_t vm) {
        Rational s;
        const Vec& w = a.witness(vb, vm);
        for (std::size_t t = 0; t < k; ++t)
            if (!w[t].is_zero()) s += w[t] * F.at(va, t);
        return s;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t m = 0; m < k; ++m) {
                Rational lhs = -eval(j, i, m) + eval(i, j, m);
                const Vec& wij = a.witness(i, j);
                for (std::size_t t = 0; t < k; ++t)
                    if (!wij[t].is_zero()) lhs -= wij[t] * F.at(t, m);
                if (!lhs.is_zero()) return false;
            }
    return true;
}

Cocycle::Cocycle(Subalgebra domain, Matrix F) : domain_(std::move(domain)), f_(std::move(F)) {
    if (!check_cocycle(domain_, f_))
        throw InvalidCocycle("matrix is not a skew 1-cocycle on the subalgebra");
}

Cocycle Cocycle::zero(Subalgebra domain) {
    const std::size_t k = domain.dim();
    return Cocycle(std::move(domain), Matrix(k, k));
}

Subspace lagrangian_span(const Subalgebra& a, const Matrix& F) {
    const LieAlgebra& L = a.algebra();
    const std::size_t k = a.dim(), n = L.dim();
    const Subspace& ann = a.annihilator();
    Matrix rows(k + ann.dim(), 2 * n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < n; ++t) rows.at(i, t) = a.basis()[i].coeffs[t];
        for (std::size_t j = 0; j < k; ++j) {
            if (F.at(i, j).is_zero()) continue;
            GStarElement xi = a.dual_functional(j);
            for (std::size_t t = 0; t < n; ++t)
                if (!xi.coeffs[t].is_zero()) rows.at(i, n + t) += F.at(i, j) * xi.coeffs[t];
        }
    }
    for (std::size_t r = 0; r < ann.dim(); ++r)
        for (std::size_t t = 0; t < n; ++t) rows.at(k + r, n + t) = ann.basis().at(r, t);
    return Subspace::span(rows);
}

LagrangianPoint build_lagrangian(const Subalgebra& a, const Cocycle& f) {
    Subspace w = lagrangian_span(a, f.F());
    if (w.dim() != a.algebra().dim())
        throw Error("build_lagrangian: span has dimension " + std::to_string(w.dim()) +
                    ", expected n = " + std::to_string(a.algebra().dim()));
    return w;
}

LagrangianVerdict verify_lagrangian(const SemidirectDouble& dbl, const Subspace& w) {
    if (w.ambient_dim() != dbl.ambient_dim())
        throw DimensionMismatch("verify_lagrangian: ambient dimension must be 2n");
    LagrangianVerdict v;
    v.is_isotropic = true;
    v.is_subalgebra = true;
    std::vector<DoubleElement> basis;
    basis.reserve(w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) basis.push_back(dbl.from_ambient(w.basis().row(i)));
    for (std::size_t i = 0; i < basis.size() && v.is_isotropic; ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!dbl.bilinear_form(basis[i], basis[j]).is_zero()) {
                v.is_isotropic = false;
                v.failure = LagrangianVerdict::Failure::Isotropy;
                v.witness_i = i;
                v.witness_j = j;
                break;
            }
    for (std::size_t i = 0; i < basis.size() && v.is_subalgebra; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!w.contains(dbl.to_ambient(dbl.d_bracket(basis[i], basis[j])))) {
                v.is_subalgebra = false;
                if (v.failure == LagrangianVerdict::Failure::None) {
                    v.failure = LagrangianVerdict::Failure::Closure;
                    v.witness_i = i;
                    v.witness_j = j;
                }
                break;
            }
    v.is_lagrangian = v.is_isotropic && w.dim() == dbl.n();
    return v;
}

Matrix f_alpha(const Subalgebra& a, const GStarElement& alpha) {
    const std::size_t k = a.dim();
    Matrix f(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            f.at(i, j) = alpha(a.algebra().bracket(a.basis()[i], a.basis()[j]));
            f.at(j, i) = -f.at(i, j);
        }
    return f;
}

namespace {
std::atomic<bool> g_debug_verify{false};

Subspace transport_point(const SemidirectDouble& dbl, const DGroupElement& d, const Subspace& p) {
    Matrix moved(p.dim(), dbl.ambient_dim());
    for (std::size_t r = 0; r < p.dim(); ++r)
        moved.set_row(r, dbl.to_ambient(dbl.big_ad(d, dbl.from_ambient(p.basis().row(r)))));
    return Subspace::span(moved);
}
} // namespace

void set_debug_verify(bool on) { g_debug_verify = on; }
bool debug_verify_enabled() { return g_debug_verify; }

bool group_action_contract_holds(const GroupElement& g, const Subalgebra& a, const Cocycle& f) {
    SemidirectDouble dbl(a.algebra());
    std::vector<GElement> moved;
    moved.reserve(a.dim());
    for (const GElement& v : a.basis()) moved.push_back(g.apply(v));
    Subalgebra image(a.algebra(), std::move(moved));
    return subspace_equal(transport_point(dbl, dbl.embed_group(g), build_lagrangian(a, f)),
                          build_lagrangian(image, Cocycle(image, f.F())));
}

bool translation_contract_holds(const GStarElement& alpha, const Subalgebra& a, const Cocycle& f) {
    SemidirectDouble dbl(a.algebra());
    Cocycle shifted(a, f.F() + f_alpha(a, alpha));
    return subspace_equal(transport_point(dbl, dbl.embed_dual(alpha), build_lagrangian(a, f)),
                          build_lagrangian(a, shifted));
}

std::pair<Subalgebra, Cocycle> act_group(const GroupElement& g, const Subalgebra& a,
                                         const Cocycle& f) {
    if (g_debug_verify && !group_action_contract_holds(g, a, f))
        throw Error("act_group: transported point disagrees with the adjoint action");
    std::vector<GElement> moved;
    moved.reserve(a.dim());
    for (const GElement& v : a.basis()) moved.push_back(g.apply(v));
    Subalgebra image(a.algebra(), std::move(moved));
    Cocycle transported(image, f.F());
    return {std::move(image), std::move(transported)};
}

Cocycle act_translation(const GStarElement& alpha, const Subalgebra& a, const Cocycle& f) {
    if (g_debug_verify && !translation_contract_holds(alpha, a, f))
        throw Error("act_translation: shifted point disagrees with the adjoint action");
    return Cocycle(a, f.F() + f_alpha(a, alpha));
}

Matrix torus_twist_f(const std::vector<Rational>& c, const Subalgebra& a, const Matrix& F) {
    auto roots = a.root_vector_roots();
    if (!roots)
        throw NotHStable("torus_twist_f: the subalgebra basis must consist of root vectors");
    const LieAlgebra& L = a.algebra();
    const std::size_t k = a.dim();
    if (F.rows() != k || F.cols() != k) throw DimensionMismatch("torus_twist_f: F shape");
    std::vector<Rational> chi(k);
    for (std::size_t i = 0; i < k; ++i) chi[i] = L.character(c, (*roots)[i]);
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (F.at(i, j).is_zero()) continue;
            out.at(i, j) = F.at(i, j) / (chi[i] * chi[j]);
        }
    return out;
}

bool points_equal(const std::pair<Subalgebra, Cocycle>& p,
                  const std::pair<Subalgebra, Cocycle>& q) {
    const Subalgebra &a = p.first, &b = q.first;
    if (!subspace_equal(a.span(), b.span())) return false;
    const std::size_t k = a.dim();
    // T expresses q's basis in p's basis; agreement means F_q = T F_p T^t.
    Matrix t(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto coords = a.express(b.basis()[i]);
        if (!coords) return false;
        t.set_row(i, *coords);
    }
    return q.second.F() == t * p.second.F() * t.transpose();
}

} // namespace lagsub
