#include "lagsub/ideals.hpp"

#include <algorithm>

#include "lagsub/error.hpp"

namespace lagsub {

bool operator<(const IdealDescriptor& a, const IdealDescriptor& b) {
    if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
    return a.roots < b.roots;
}

std::string IdealDescriptor::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ", ";
        s += roots[i].str();
    }
    return s + "}";
}

namespace {

/// up_masks[i] = bitmask of every positive root reachable from root i by
/// adding positive roots (including i itself).
std::vector<std::uint64_t> upward_closures(const RootSystem& rs) {
    const auto& pos = rs.positive_roots();
    const std::size_t n = pos.size();
    if (n > 64) throw CapExceeded("more than 64 positive roots");
    std::vector<std::uint64_t> up(n);
    // roots are sorted by height, so a single descending sweep closes
    // transitively: up(i) = {i} plus up(j) for every cover i+mu = root j
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t m = 1ULL << i;
        for (std::size_t k = 0; k < n; ++k) {
            Root s = pos[i] + pos[k];
            if (s.is_zero() || !rs.is_root(s)) continue;
            m |= up[rs.index_of(s)];
        }
        up[i] = m;
    }
    return up;
}

IdealDescriptor from_mask(const RootSystem& rs, std::uint64_t mask) {
    IdealDescriptor d;
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
        if (mask & (1ULL << i)) d.roots.push_back(rs.positive_roots()[i]);
    return d;
}

} // namespace

bool is_upper_set(const RootSystem& rs, const std::vector<Root>& lambda) {
    for (const Root& r : lambda)
        if (!r.is_positive() || !rs.is_root(r))
            throw NotARoot(r.str() + " is not a positive root of " + rs.cartan().type_string());
    std::set<Root> in(lambda.begin(), lambda.end());
    for (const Root& l : lambda)
        for (const Root& mu : rs.positive_roots()) {
            Root s = l + mu;
            if (rs.is_root(s) && !in.count(s)) return false;
        }
    return true;
}

std::vector<IdealDescriptor> enumerate_ad_nilpotent_ideals(const RootSystem& rs) {
    const std::size_t n = rs.num_positive();
    auto up = upward_closures(rs);
    std::vector<std::uint64_t> found;
    // descending-height DFS: a root may be included only when everything
    // above it is already in
    std::vector<std::pair<std::size_t, std::uint64_t>> stack{{n, 0}};
    while (!stack.empty()) {
        auto [i, mask] = stack.back();
        stack.pop_back();
        if (i == 0) {
            found.push_back(mask);
            continue;
        }
        std::size_t r = i - 1;
        stack.push_back({r, mask}); // exclude root r
        std::uint64_t need = up[r] & ~(1ULL << r);
        if ((mask & need) == need) stack.push_back({r, mask | (1ULL << r)}); // include
    }
    std::vector<IdealDescriptor> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(from_mask(rs, m));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_abelian(const RootSystem& rs, const IdealDescriptor& ideal) {
    for (std::size_t i = 0; i < ideal.roots.size(); ++i)
        for (std::size_t j = i; j < ideal.roots.size(); ++j) {
            Root s = ideal.roots[i] + ideal.roots[j];
            if (rs.is_root(s)) return false;
        }
    return true;
}

std::vector<IdealDescriptor> enumerate_abelian_ideals(const RootSystem& rs) {
    std::vector<IdealDescriptor> out;
    for (const IdealDescriptor& d : enumerate_ad_nilpotent_ideals(rs))
        if (is_abelian(rs, d)) out.push_back(d);
    const std::size_t expected = 1ULL << static_cast<unsigned>(rs.rank());
    if (out.size() != expected)
        throw PetersonMismatch(rs.cartan().type_string() + ": found " +
                               std::to_string(out.size()) + " abelian ideals, expected 2^" +
                               std::to_string(rs.rank()) + " = " + std::to_string(expected));
    return out;
}

Subalgebra subalgebra_of_ideal(const LieAlgebra& algebra, const IdealDescriptor& ideal) {
    return Subalgebra::from_roots(algebra, ideal.roots);
}

bool is_h_stable(const LieAlgebra& algebra, const Subalgebra& a) {
    for (int i = 0; i < algebra.rank(); ++i)
        for (const GElement& v : a.basis())
            if (!a.span().contains(algebra.bracket(algebra.h(i), v).coeffs)) return false;
    return true;
}

NormalizerResult normalizer(const LieAlgebra& algebra, const Subalgebra& a) {
    const std::size_t n = algebra.dim(), k = a.dim();
    // rows: for each basis vector v_i of a, the residual of [b_j, v_i]
    // against span(a), as a linear condition on x = sum x_j b_j
    Matrix cond(k * n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec resid = a.span().reduce(
                algebra.bracket(algebra.basis_vector(j), a.basis()[i]).coeffs);
            for (std::size_t t = 0; t < n; ++t) cond.at(i * n + t, j) = resid[t];
        }
    NormalizerResult res{kernel_basis(cond), std::nullopt};
    if (is_h_stable(algebra, a)) {
        std::set<int> levi;
        for (int i = 0; i < algebra.rank(); ++i)
            if (res.subspace.contains(algebra.e(-Root::simple(i, algebra.rank())).coeffs))
                levi.insert(i);
        res.levi = std::move(levi);
    }
    return res;
}

namespace {

/// Weight decomposition of an h-stable subalgebra: the roots whose vectors
/// lie inside, and the dimension of the toral part a ^ h.
struct WeightDecomposition {
    std::vector<Root> lambda;
    std::size_t toral_dim;
    std::vector<Vec> toral_basis; // h-coordinates only
};

WeightDecomposition decompose_h_stable(const LieAlgebra& algebra, const Subalgebra& a) {
    WeightDecomposition d;
    const RootSystem& rs = algebra.roots();
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        Root r = rs.root_at(i);
        if (a.span().contains(algebra.e(r).coeffs)) d.lambda.push_back(r);
    }
    // toral part: solutions of (x in a, x supported on h)
    const std::size_t l = static_cast<std::size_t>(algebra.rank());
    Matrix hrows(l, algebra.dim());
    for (std::size_t i = 0; i < l; ++i) hrows.at(i, i) = 1;
    std::size_t sum_dim = Subspace::span([&] {
                              Matrix m(a.dim() + l, algebra.dim());
                              for (std::size_t i = 0; i < a.dim(); ++i)
                                  m.set_row(i, a.basis()[i].coeffs);
                              for (std::size_t i = 0; i < l; ++i) m.set_row(a.dim() + i, hrows.row(i));
                              return m;
                          }())
                              .dim();
    d.toral_dim = a.dim() + l - sum_dim;
    if (d.toral_dim > 0) {
        // exhibit toral vectors: reduce h-basis against a + complement logic is
        // overkill; solve for span(a) vectors with zero e-part instead
        Matrix eparts(a.dim(), algebra.dim() - l);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t t = l; t < algebra.dim(); ++t)
                eparts.at(i, t - l) = a.basis()[i].coeffs[t];
        Subspace combos = kernel_basis(eparts.transpose()); // coefficients c with sum c_i v_i in h
        for (std::size_t r = 0; r < combos.dim(); ++r) {
            Vec c = combos.basis().row(r);
            Vec h(l);
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t t = 0; t < l; ++t) h[t] += c[i] * a.basis()[i].coeffs[t];
            d.toral_basis.push_back(std::move(h));
        }
    }
    return d;
}

} // namespace

ClosureCertificate certify_closed_orbit(const LieAlgebra& algebra, const Subalgebra& a,
                                        const Cocycle& f) {
    if (!is_h_stable(algebra, a))
        throw NotHStable("certify_closed_orbit: subalgebra is not h-stable; conjugate it to a "
                         "standard position first");
    const RootSystem& rs = algebra.roots();
    WeightDecomposition dec = decompose_h_stable(algebra, a);
    if (dec.lambda.size() + dec.toral_dim != a.dim())
        throw NotHStable("certify_closed_orbit: weight decomposition does not fill the "
                         "subalgebra");

    ClosureCertificate cert;
    cert.verdict = ClosureCertificate::Verdict::NotClosed;

    if (!f.is_zero()) {
        cert.reason = ClosureCertificate::Reason::NonzeroCocycle;
        cert.f_witness = f.F();
        return cert;
    }

    // abelian check by brackets, with the dual functional as witness
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            GElement w = algebra.bracket(a.basis()[i], a.basis()[j]);
            if (w.is_zero()) continue;
            std::size_t m = 0;
            while (w.coeffs[m].is_zero()) ++m;
            cert.reason = ClosureCertificate::Reason::NonAbelian;
            cert.alpha_witness = algebra.dual_basis_vector(m);
            cert.pair_i = i;
            cert.pair_j = j;
            return cert;
        }

    // search for a Borel position: Lambda must sit inside w(Phi+) as an
    // upper set, and a nonzero toral part is incompatible with abelian
    auto weyl = enumerate_weyl_group(rs, rs.weyl_order());
    std::size_t n_subset_fail = 0, n_upper_fail = 0, n_toral_fail = 0;
    std::string first_example;
    for (const WeylElement& w : weyl) {
        std::vector<Root> sys = positive_system_of(w, rs);
        std::set<Root> in_sys(sys.begin(), sys.end());

        std::string violation;
        if (dec.toral_dim > 0) {
            // some mu in w(Phi+) has mu(t) != 0; an ideal would pull e_mu
            // into a and break commutativity with t
            const Vec& t = dec.toral_basis.front();
            for (const Root& mu : sys) {
                Rational pairing;
                for (std::size_t i = 0; i < t.size(); ++i)
                    pairing += t[i] * Rational(rs.pairing(mu, static_cast<int>(i)));
                if (!pairing.is_zero()) {
                    violation = "toral part pairs with " + mu.str();
                    ++n_toral_fail;
                    break;
                }
            }
        }
        if (violation.empty()) {
            for (const Root& l : dec.lambda)
                if (!in_sys.count(l)) {
                    violation = l.str() + " lies outside the positive system";
                    ++n_subset_fail;
                    break;
                }
        }
        if (violation.empty()) {
            std::set<Root> in_lambda(dec.lambda.begin(), dec.lambda.end());
            for (const Root& l : dec.lambda) {
                for (const Root& mu : sys) {
                    Root s = l + mu;
                    if (rs.is_root(s) && !in_lambda.count(s)) {
                        violation = l.str() + " + " + mu.str() + " escapes Lambda";
                        ++n_upper_fail;
                        break;
                    }
                }
                if (!violation.empty()) break;
            }
        }
        if (violation.empty()) {
            cert.verdict = ClosureCertificate::Verdict::Closed;
            cert.borel_witness = w;
            return cert;
        }
        if (first_example.empty()) first_example = violation;
    }
    cert.reason = ClosureCertificate::Reason::NotBorelIdeal;
    cert.detail = "no Borel position among " + std::to_string(weyl.size()) +
                  " Weyl chambers admits Lambda as an abelian ideal (" +
                  std::to_string(n_toral_fail) + " toral failures, " +
                  std::to_string(n_subset_fail) + " containment failures, " +
                  std::to_string(n_upper_fail) + " upper-set failures; first: " + first_example +
                  ")";
    return cert;
}

std::vector<OrbitRow> orbit_table(const LieAlgebra& algebra) {
    const RootSystem& rs = algebra.roots();
    std::vector<OrbitRow> rows;
    for (const IdealDescriptor& ideal : enumerate_abelian_ideals(rs)) {
        Subalgebra a = subalgebra_of_ideal(algebra, ideal);
        NormalizerResult nr = normalizer(algebra, a);
        if (!nr.levi) throw Error("orbit_table: ideal subalgebra is not h-stable");
        // negative roots supported on the Levi subset J stay in the parabolic
        std::size_t in_levi = 0;
        for (const Root& r : rs.positive_roots()) {
            bool inside = true;
            for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                if (r.coeffs[i] != 0 && !nr.levi->count(static_cast<int>(i))) {
                    inside = false;
                    break;
                }
            if (inside) ++in_levi;
        }
        std::size_t orbit_dim = rs.num_positive() - in_levi;
        // N_g(a) = p_J exactly; the dimensions must agree
        std::size_t p_dim = algebra.dim() - orbit_dim;
        if (nr.subspace.dim() != p_dim)
            throw Error("orbit_table: normalizer of " + ideal.str() + " has dimension " +
                        std::to_string(nr.subspace.dim()) + ", parabolic p_J gives " +
                        std::to_string(p_dim));
        ClosureCertificate cert =
            certify_closed_orbit(algebra, a, Cocycle::zero(a));
        rows.push_back(OrbitRow{ideal, ideal.size(), *nr.levi, orbit_dim, cert.closed()});
    }
    return rows;
}

} // namespace lagsub
