#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lagsub/double_alg.hpp"
#include "lagsub/subspace.hpp"

namespace lagsub {

/// Lie subalgebra of g given by an ordered basis.  Construction verifies
/// linear independence and bracket closure and stores the witness table
/// expressing [v_i, v_j] in the v-basis.
class Subalgebra {
public:
    Subalgebra(const LieAlgebra& algebra, std::vector<GElement> basis);

    static Subalgebra zero(const LieAlgebra& algebra) { return Subalgebra(algebra, {}); }
    static Subalgebra whole(const LieAlgebra& algebra);
    /// Span of the root vectors e_lambda, lambda in roots (canonical order kept).
    static Subalgebra from_roots(const LieAlgebra& algebra, const std::vector<Root>& roots);

    const LieAlgebra& algebra() const { return *L_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<GElement>& basis() const { return basis_; }
    const Subspace& span() const { return span_; }

    /// Coordinates of [v_i, v_j] in the v-basis.
    const Vec& witness(std::size_t i, std::size_t j) const { return witness_[i][j]; }

    /// Coordinates of w in the v-basis, when w lies in the span.
    std::optional<Vec> express(const GElement& w) const;

    /// Dual functional extension: the unique functional supported on the
    /// pivot coordinates with v_j^#(v_i) = delta_ij.
    GStarElement dual_functional(std::size_t j) const;

    /// Basis for the annihilator of the span in g*.
    const Subspace& annihilator() const { return annihilator_; }

    bool is_abelian_by_brackets() const;

    /// The roots lambda_i when every basis vector is a multiple of a single
    /// root vector; nullopt otherwise.
    std::optional<std::vector<Root>> root_vector_roots() const;

private:
    const LieAlgebra* L_;
    std::vector<GElement> basis_;
    Matrix b_;                         // k x n row matrix of the basis
    Matrix rref_;                      // RREF of b_
    std::vector<std::size_t> pivots_;
    Matrix pinv_;                      // inverse of P[i][m] = b_[m][pivot_i]
    Subspace span_;
    Subspace annihilator_;
    std::vector<std::vector<Vec>> witness_;
};

/// Eq-style skew-cocycle test: F must be skew and satisfy, on all basis
/// pairs evaluated against every basis vector,
///   -f(v_j)([v_i,v_m]) + f(v_i)([v_j,v_m]) - f([v_i,v_j])(v_m) = 0,
/// with all brackets restricted to the subalgebra.
bool check_cocycle(const Subalgebra& a, const Matrix& F);

/// Skew 1-cocycle f: a -> a* stored as the value matrix F[i][j] = f(v_i)(v_j).
/// Construction validates the cocycle identity.
class Cocycle {
public:
    Cocycle(Subalgebra domain, Matrix F);
    static Cocycle zero(Subalgebra domain);

    const Subalgebra& domain() const { return domain_; }
    const Matrix& F() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }

private:
    Subalgebra domain_;
    Matrix f_;
};

/// A point of the variety of Lagrangian subalgebras: an n-dimensional
/// subspace of the 2n-dimensional double in canonical RREF form.
using LagrangianPoint = Subspace;

/// Row span of {(v_i, sum_j F[i][j] v_j^#)} together with (0, annihilator);
/// no cocycle validation.  This is l(a, f) whenever F is a valid skew
/// cocycle, and a plain subspace otherwise.
Subspace lagrangian_span(const Subalgebra& a, const Matrix& F);

/// l(a, f) = {(x, alpha): x in a, f(x) = alpha|_a}.
LagrangianPoint build_lagrangian(const Subalgebra& a, const Cocycle& f);

struct LagrangianVerdict {
    bool is_isotropic = false;
    bool is_subalgebra = false;
    bool is_lagrangian = false;
    enum class Failure { None, Isotropy, Closure } failure = Failure::None;
    std::size_t witness_i = 0, witness_j = 0; // offending basis pair on failure

    bool all_true() const { return is_isotropic && is_subalgebra && is_lagrangian; }
};

/// Isotropy, bracket closure and the dimension count for a subspace of d.
LagrangianVerdict verify_lagrangian(const SemidirectDouble& dbl, const Subspace& w);

/// f_alpha(x) = -ad*_x (alpha|_a), i.e. (F_alpha)[i][j] = alpha([v_i, v_j]).
Matrix f_alpha(const Subalgebra& a, const GStarElement& alpha);

/// Ad_g a with the transported cocycle (g.f)(Ad_g x)(Ad_g y) = f(x)(y); the
/// matrix is unchanged in the transported basis.
std::pair<Subalgebra, Cocycle> act_group(const GroupElement& g, const Subalgebra& a,
                                         const Cocycle& f);

/// f + f_alpha, the translation half of the action.
Cocycle act_translation(const GStarElement& alpha, const Subalgebra& a, const Cocycle& f);

/// When enabled, act_group and act_translation re-verify their subspace
/// postconditions (Ad l(a,f) = l of the transformed pair) on every call and
/// throw on mismatch.  Off by default for bulk enumeration.
void set_debug_verify(bool on);
bool debug_verify_enabled();

/// The subspace postconditions themselves, as directly testable predicates.
bool group_action_contract_holds(const GroupElement& g, const Subalgebra& a, const Cocycle& f);
bool translation_contract_holds(const GStarElement& alpha, const Subalgebra& a, const Cocycle& f);

/// Torus rescaling of a cocycle on a root-vector basis:
/// (t_c.f)(e_lambda)(e_mu) = chi_lambda(c)^{-1} chi_mu(c)^{-1} f(e_lambda)(e_mu).
Matrix torus_twist_f(const std::vector<Rational>& c, const Subalgebra& a, const Matrix& F);

/// l(a, f) = l(a', f') iff a = a' as subspaces and the cocycles agree after
/// the change of basis.
bool points_equal(const std::pair<Subalgebra, Cocycle>& p,
                  const std::pair<Subalgebra, Cocycle>& q);

} // namespace lagsub
