#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lagsub/cartan.hpp"
#include "lagsub/rational.hpp"

namespace lagsub {

/// A root as its integer coordinates over the simple roots.
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}
    static Root simple(int i, int rank) {
        std::vector<int> c(static_cast<std::size_t>(rank), 0);
        c[static_cast<std::size_t>(i)] = 1;
        return Root(std::move(c));
    }

    int height() const;
    bool is_positive() const; // all coeffs >= 0 and not all zero
    bool is_zero() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    /// Canonical order: height ascending, then lexicographic on coeffs.
    friend bool operator<(const Root& a, const Root& b);

    std::string str() const;
};

/// Root system generated from a Cartan matrix.  Positive roots are listed in
/// canonical order; all-roots indexing puts the negatives after them in the
/// mirrored order, so index(-lambda) = index(lambda) + |Phi+|.
class RootSystem {
public:
    static RootSystem build(const CartanMatrix& c);

    const CartanMatrix& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    std::size_t num_roots() const { return 2 * positive_.size(); }
    const Root& highest_root() const { return positive_.back(); }

    bool is_root(const Root& r) const { return find_index(r) >= 0; }
    /// Index into the all-roots basis order; throws NotARoot when absent.
    std::size_t index_of(const Root& r) const;
    Root root_at(std::size_t idx) const;

    /// lambda + mu when that is again a root; nullopt otherwise.  Both
    /// arguments must be roots.
    std::optional<Root> sum_as_root(const Root& lambda, const Root& mu) const;

    /// Greatest p >= 0 with mu - p*lambda a root (the root-string depth).
    int root_string_p(const Root& lambda, const Root& mu) const;

    /// <lambda, alpha_i^vee>
    int pairing(const Root& lambda, int i) const;

    /// (lambda, lambda) with the symmetrizing form (alpha_i, alpha_j) = d_i a_ij.
    long length_sq(const Root& lambda) const;
    const std::vector<long>& symmetrizer() const { return d_; }

    /// Coefficients of lambda^vee over the simple coroots; integral for roots.
    std::vector<Rational> coroot_coeffs(const Root& lambda) const;

    unsigned long long weyl_order() const { return cartan_.weyl_order(); }

private:
    explicit RootSystem(CartanMatrix c) : cartan_(std::move(c)) {}
    long find_index(const Root& r) const;

    CartanMatrix cartan_;
    std::vector<Root> positive_;
    std::vector<long> d_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Weyl group element as a permutation of the all-roots index space.
class WeylElement {
public:
    explicit WeylElement(std::vector<std::uint32_t> perm) : perm_(std::move(perm)) {}
    static WeylElement identity(std::size_t num_roots);

    std::size_t size() const { return perm_.size(); }
    std::uint32_t apply_index(std::uint32_t i) const { return perm_[i]; }
    Root apply(const RootSystem& rs, const Root& r) const;

    /// (this o other): apply other first.
    WeylElement compose(const WeylElement& other) const;
    WeylElement inverse() const;

    const std::vector<std::uint32_t>& perm() const { return perm_; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

private:
    std::vector<std::uint32_t> perm_;
};

WeylElement simple_reflection(const RootSystem& rs, int i);

/// Full Weyl group by breadth-first closure over the simple reflections.
/// Throws CapExceeded (reporting the known order) when the group order
/// exceeds cap.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap);

/// w(Phi+), sorted canonically.
std::vector<Root> positive_system_of(const WeylElement& w, const RootSystem& rs);

} // namespace lagsub
