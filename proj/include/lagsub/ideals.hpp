#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lagsub/lagrange.hpp"

namespace lagsub {

/// Ad-nilpotent ideal of the standard Borel, as the upper set Lambda of
/// positive roots carrying its root spaces.  Roots are kept sorted in
/// canonical order.
struct IdealDescriptor {
    std::vector<Root> roots;

    std::size_t size() const { return roots.size(); }
    friend bool operator==(const IdealDescriptor& a, const IdealDescriptor& b) {
        return a.roots == b.roots;
    }
    friend bool operator<(const IdealDescriptor& a, const IdealDescriptor& b);
    std::string str() const;
};

/// Check the upper-set condition: lambda in Lambda, mu in Phi+,
/// lambda+mu in Phi  =>  lambda+mu in Lambda.  Throws NotARoot for entries
/// outside Phi+.
bool is_upper_set(const RootSystem& rs, const std::vector<Root>& lambda);

/// All upper sets of the root poset, by DFS over roots in descending height
/// with memoized forced closure.  Sorted by size, then lexicographically.
std::vector<IdealDescriptor> enumerate_ad_nilpotent_ideals(const RootSystem& rs);

/// Root-level abelian test: lambda + mu is never a root for lambda, mu in
/// Lambda.  The input must be a valid upper set.
bool is_abelian(const RootSystem& rs, const IdealDescriptor& ideal);

/// Abelian ideals of the Borel; throws PetersonMismatch unless the count is
/// exactly 2^rank.
std::vector<IdealDescriptor> enumerate_abelian_ideals(const RootSystem& rs);

Subalgebra subalgebra_of_ideal(const LieAlgebra& algebra, const IdealDescriptor& ideal);

struct NormalizerResult {
    Subspace subspace;
    /// Simple-root indices i with e_{-alpha_i} in the normalizer; present only
    /// when the input is h-stable (then the normalizer is the standard
    /// parabolic p_J).
    std::optional<std::set<int>> levi;
};

/// N_g(a) = {x : [x, v_i] in span(a) for all i}.
NormalizerResult normalizer(const LieAlgebra& algebra, const Subalgebra& a);

bool is_h_stable(const LieAlgebra& algebra, const Subalgebra& a);

/// Certificate for the closed-orbit decision: the D-orbit through l(a, f) is
/// closed iff f = 0, a is abelian, and a is an abelian ideal of some Borel
/// (searched over Weyl positions of the standard one for h-stable a).
struct ClosureCertificate {
    enum class Verdict { Closed, NotClosed } verdict = Verdict::NotClosed;
    enum class Reason { None, NonzeroCocycle, NonAbelian, NotBorelIdeal } reason = Reason::None;

    /// Closed: the Weyl element whose positive system contains Lambda as an
    /// upper set.
    std::optional<WeylElement> borel_witness;

    /// NonAbelian: alpha with f_alpha != 0, plus the basis pair it detects.
    std::optional<GStarElement> alpha_witness;
    std::size_t pair_i = 0, pair_j = 0;

    /// NonzeroCocycle: the offending F.
    std::optional<Matrix> f_witness;

    /// NotBorelIdeal: per-position failure summary over the whole Weyl group.
    std::string detail;

    bool closed() const { return verdict == Verdict::Closed; }
};

ClosureCertificate certify_closed_orbit(const LieAlgebra& algebra, const Subalgebra& a,
                                        const Cocycle& f);

struct OrbitRow {
    IdealDescriptor ideal;
    std::size_t dim_a;
    std::set<int> parabolic_j;
    std::size_t orbit_dim;
    bool certified_closed;
};

/// One row per abelian ideal: Lambda, dim a, parabolic type J of the
/// normalizer, and the closed-orbit dimension |Phi-| - |Phi- in span J|.
std::vector<OrbitRow> orbit_table(const LieAlgebra& algebra);

} // namespace lagsub
