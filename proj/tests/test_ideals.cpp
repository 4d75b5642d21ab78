#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/ideals.hpp"
#include "test_util.hpp"

using namespace lagsub;

namespace {
LieAlgebra algebra(const std::string& type) {
    return LieAlgebra::build(RootSystem::build(CartanMatrix::parse(type)));
}

std::set<std::set<Root>> as_sets(const std::vector<IdealDescriptor>& v) {
    std::set<std::set<Root>> out;
    for (const auto& d : v) out.insert(std::set<Root>(d.roots.begin(), d.roots.end()));
    return out;
}

/// Brute-force oracle: filter all subsets of Phi+ by the upper-set
/// definition (and optionally the sum-free condition) with bitmasks.
std::pair<std::size_t, std::size_t> brute_force_counts(const RootSystem& rs) {
    const std::size_t n = rs.num_positive();
    REQUIRE(n <= 24);
    const auto& pos = rs.positive_roots();
    std::vector<std::uint32_t> up(n, 0), sums(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        up[i] = 1u << i;
        for (std::size_t k = 0; k < n; ++k) {
            Root s = pos[i] + pos[k];
            if (rs.is_root(s)) {
                up[i] |= 1u << rs.index_of(s);
                sums[i] |= 1u << k; // k with root i + root k still a root
            }
        }
    }
    // close transitively (heights ascend with the index)
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t k = 0; k < n; ++k)
            if (up[i] & (1u << k)) up[i] |= up[k];
    std::size_t ideals = 0, abelian = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool upper = true;
        for (std::size_t i = 0; i < n && upper; ++i)
            if ((mask & (1u << i)) && (mask & up[i]) != up[i]) upper = false;
        if (!upper) continue;
        ++ideals;
        bool ab = true;
        for (std::size_t i = 0; i < n && ab; ++i)
            if ((mask & (1u << i)) && (sums[i] & mask)) ab = false;
        // note sums[i] & (1<<i) covers lambda + lambda, never a root anyway
        if (ab) ++abelian;
    }
    return {ideals, abelian};
}
} // namespace

TEST_CASE("ad-nilpotent ideal enumeration frozen examples") {
    RootSystem a1 = RootSystem::build(CartanMatrix::parse("A1"));
    CHECK(enumerate_ad_nilpotent_ideals(a1).size() == 2);

    RootSystem a2 = RootSystem::build(CartanMatrix::parse("A2"));
    auto ideals = enumerate_ad_nilpotent_ideals(a2);
    CHECK(ideals.size() == 5);
    Root r10({1, 0}), r01({0, 1}), theta({1, 1});
    std::set<std::set<Root>> expect{
        {}, {theta}, {theta, r10}, {theta, r01}, {theta, r10, r01}};
    CHECK(as_sets(ideals) == expect);

    RootSystem b2 = RootSystem::build(CartanMatrix::parse("B2"));
    CHECK(enumerate_ad_nilpotent_ideals(b2).size() == 6);

    // every enumerated set satisfies the upper-set definition
    for (const auto& d : ideals) CHECK(is_upper_set(a2, d.roots));
}

TEST_CASE("enumeration agrees with the brute-force oracle up to rank 4") {
    for (const char* type :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
        RootSystem rs = RootSystem::build(CartanMatrix::parse(type));
        auto [ideals, abelian] = brute_force_counts(rs);
        CHECK_MESSAGE(enumerate_ad_nilpotent_ideals(rs).size() == ideals, type);
        CHECK_MESSAGE(enumerate_abelian_ideals(rs).size() == abelian, type);
    }
}

TEST_CASE("is_abelian root-level examples") {
    RootSystem a2 = RootSystem::build(CartanMatrix::parse("A2"));
    Root r10({1, 0}), r01({0, 1}), theta({1, 1});
    CHECK(is_abelian(a2, IdealDescriptor{{}}));
    CHECK(is_abelian(a2, IdealDescriptor{{r10, theta}}));
    CHECK_FALSE(is_abelian(a2, IdealDescriptor{{r01, r10, theta}}));
}

TEST_CASE("abelian ideal lists and the Peterson count") {
    RootSystem a1 = RootSystem::build(CartanMatrix::parse("A1"));
    CHECK(enumerate_abelian_ideals(a1).size() == 2);

    RootSystem a2 = RootSystem::build(CartanMatrix::parse("A2"));
    auto ab2 = enumerate_abelian_ideals(a2);
    Root r10({1, 0}), r01({0, 1}), theta({1, 1});
    CHECK(as_sets(ab2) == std::set<std::set<Root>>{
                              {}, {theta}, {theta, r10}, {theta, r01}});

    RootSystem b2 = RootSystem::build(CartanMatrix::parse("B2"));
    auto abb2 = enumerate_abelian_ideals(b2);
    Root a2r({0, 1}), a1r({1, 0}), a12({1, 1}), th({1, 2});
    CHECK(as_sets(abb2) == std::set<std::set<Root>>{
                               {}, {th}, {th, a12}, {th, a12, a1r}});
}

TEST_CASE("root-level abelian test agrees with brackets on every ideal") {
    for (const char* type : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
        LieAlgebra L = algebra(type);
        for (const auto& d : enumerate_ad_nilpotent_ideals(L.roots())) {
            Subalgebra a = subalgebra_of_ideal(L, d);
            CHECK(is_abelian(L.roots(), d) == a.is_abelian_by_brackets());
        }
    }
}

TEST_CASE("abelian ideals are closed under intersection") {
    for (const char* type : {"A3", "B3", "C3", "G2", "D4"}) {
        RootSystem rs = RootSystem::build(CartanMatrix::parse(type));
        auto ab = enumerate_abelian_ideals(rs);
        auto sets = as_sets(ab);
        for (const auto& x : ab)
            for (const auto& y : ab) {
                std::set<Root> xs(x.roots.begin(), x.roots.end());
                std::set<Root> inter;
                for (const Root& r : y.roots)
                    if (xs.count(r)) inter.insert(r);
                CHECK(sets.count(inter));
            }
    }
}

TEST_CASE("normalizer frozen examples") {
    LieAlgebra L = algebra("A2");
    Root r10({1, 0}), theta({1, 1});

    Subalgebra line = Subalgebra::from_roots(L, {theta});
    NormalizerResult n1 = normalizer(L, line);
    CHECK(n1.subspace.dim() == 5); // the Borel
    REQUIRE(n1.levi.has_value());
    CHECK(n1.levi->empty());
    // b = h + n is inside
    for (int i = 0; i < 2; ++i) CHECK(n1.subspace.contains(L.h(i).coeffs));
    for (const Root& r : L.roots().positive_roots())
        CHECK(n1.subspace.contains(L.e(r).coeffs));
    CHECK_FALSE(n1.subspace.contains(L.e(-r10).coeffs));

    Subalgebra two = Subalgebra::from_roots(L, {r10, theta});
    NormalizerResult n2 = normalizer(L, two);
    CHECK(n2.subspace.dim() == 6);
    REQUIRE(n2.levi.has_value());
    CHECK(*n2.levi == std::set<int>{1}); // alpha_2 (0-based index 1)

    Subalgebra nothing = Subalgebra::zero(L);
    NormalizerResult n0 = normalizer(L, nothing);
    CHECK(n0.subspace.dim() == L.dim());
    REQUIRE(n0.levi.has_value());
    CHECK(*n0.levi == std::set<int>{0, 1});
}

TEST_CASE("the Borel normalizes every abelian ideal") {
    for (const char* type : {"A2", "B2", "B3", "G2"}) {
        LieAlgebra L = algebra(type);
        for (const auto& d : enumerate_abelian_ideals(L.roots())) {
            Subalgebra a = subalgebra_of_ideal(L, d);
            NormalizerResult nr = normalizer(L, a);
            for (int i = 0; i < L.rank(); ++i) CHECK(nr.subspace.contains(L.h(i).coeffs));
            for (const Root& r : L.roots().positive_roots())
                CHECK(nr.subspace.contains(L.e(r).coeffs));
        }
    }
}

TEST_CASE("certify_closed_orbit on the A2 cases") {
    LieAlgebra L = algebra("A2");
    SemidirectDouble D(L);
    Root r10({1, 0}), r01({0, 1}), theta({1, 1});

    // abelian ideal, F = 0: closed, witnessed by the identity position
    Subalgebra good = Subalgebra::from_roots(L, {r10, theta});
    ClosureCertificate c1 = certify_closed_orbit(L, good, Cocycle::zero(good));
    CHECK(c1.closed());
    REQUIRE(c1.borel_witness.has_value());
    CHECK(*c1.borel_witness == WeylElement::identity(L.roots().num_roots()));

    // the full nilradical is not abelian: expect an alpha witness that
    // separates the two Lagrangian points
    Subalgebra nil = Subalgebra::from_roots(L, {r01, r10, theta});
    ClosureCertificate c2 = certify_closed_orbit(L, nil, Cocycle::zero(nil));
    CHECK_FALSE(c2.closed());
    CHECK(c2.reason == ClosureCertificate::Reason::NonAbelian);
    REQUIRE(c2.alpha_witness.has_value());
    Matrix fa = f_alpha(nil, *c2.alpha_witness);
    CHECK_FALSE(fa.is_zero());
    CHECK_FALSE(subspace_equal(build_lagrangian(nil, Cocycle(nil, fa)),
                               build_lagrangian(nil, Cocycle::zero(nil))));

    // abelian ideal with nonzero cocycle
    Matrix fm(2, 2);
    fm.at(0, 1) = 1;
    fm.at(1, 0) = -1;
    ClosureCertificate c3 = certify_closed_orbit(L, good, Cocycle(good, fm));
    CHECK_FALSE(c3.closed());
    CHECK(c3.reason == ClosureCertificate::Reason::NonzeroCocycle);
    REQUIRE(c3.f_witness.has_value());
    CHECK(*c3.f_witness == fm);

    // a single simple root space is an abelian ideal of a *different* Borel
    Subalgebra simple_line = Subalgebra::from_roots(L, {r10});
    ClosureCertificate c4 = certify_closed_orbit(L, simple_line, Cocycle::zero(simple_line));
    CHECK(c4.closed());
    REQUIRE(c4.borel_witness.has_value());
    CHECK_FALSE(*c4.borel_witness == WeylElement::identity(L.roots().num_roots()));

    // toral subalgebras are never ideals of a Borel
    Subalgebra toral(L, {L.h(0)});
    ClosureCertificate c5 = certify_closed_orbit(L, toral, Cocycle::zero(toral));
    CHECK_FALSE(c5.closed());
    CHECK(c5.reason == ClosureCertificate::Reason::NotBorelIdeal);
    CHECK(c5.detail.find("toral") != std::string::npos);

    // non-h-stable input is rejected, not guessed
    Subalgebra skew(L, {L.h(0) + L.e(r10)});
    CHECK_THROWS_AS(certify_closed_orbit(L, skew, Cocycle::zero(skew)), NotHStable);
}

TEST_CASE("certification agrees with the brute-force characterization") {
    testutil::Rng rng(31);
    for (const char* type : {"A2", "B2", "G2"}) {
        LieAlgebra L = algebra(type);
        for (const auto& d : enumerate_ad_nilpotent_ideals(L.roots())) {
            Subalgebra a = subalgebra_of_ideal(L, d);
            bool abelian = is_abelian(L.roots(), d);

            ClosureCertificate zero_cert = certify_closed_orbit(L, a, Cocycle::zero(a));
            CHECK(zero_cert.closed() == abelian); // upper sets are ideals of the standard Borel

            // seeded skew cocycle; for abelian ideals any skew matrix works
            if (a.dim() >= 2 && abelian) {
                Matrix fm(a.dim(), a.dim());
                fm.at(0, 1) = Rational(rng.range(1, 3));
                fm.at(1, 0) = -fm.at(0, 1);
                ClosureCertificate c = certify_closed_orbit(L, a, Cocycle(a, fm));
                CHECK_FALSE(c.closed());
                CHECK(c.reason == ClosureCertificate::Reason::NonzeroCocycle);
            }
        }
    }
}

TEST_CASE("orbit table for A1 and A2") {
    LieAlgebra a1 = algebra("A1");
    auto rows1 = orbit_table(a1);
    REQUIRE(rows1.size() == 2);
    CHECK(rows1[0].dim_a == 0);
    CHECK(rows1[0].parabolic_j == std::set<int>{0});
    CHECK(rows1[0].orbit_dim == 0);
    CHECK(rows1[1].dim_a == 1);
    CHECK(rows1[1].parabolic_j.empty());
    CHECK(rows1[1].orbit_dim == 1);
    for (const auto& r : rows1) CHECK(r.certified_closed);

    LieAlgebra a2 = algebra("A2");
    auto rows2 = orbit_table(a2);
    REQUIRE(rows2.size() == 4);
    // rows sorted by ideal size then lexicographically
    CHECK(rows2[0].dim_a == 0);
    CHECK(rows2[0].parabolic_j == std::set<int>{0, 1});
    CHECK(rows2[0].orbit_dim == 0);
    CHECK(rows2[1].dim_a == 1);
    CHECK(rows2[1].parabolic_j.empty());
    CHECK(rows2[1].orbit_dim == 3);
    // the two 2-dimensional ideals have complementary parabolic types
    std::set<std::set<int>> types{rows2[2].parabolic_j, rows2[3].parabolic_j};
    CHECK(types == std::set<std::set<int>>{{0}, {1}});
    CHECK(rows2[2].orbit_dim == 2);
    CHECK(rows2[3].orbit_dim == 2);
    for (const auto& r : rows2) CHECK(r.certified_closed);
}

TEST_CASE("orbit table sanity for heavier types") {
    for (const char* type : {"B3", "G2", "D4"}) {
        LieAlgebra L = algebra(type);
        auto rows = orbit_table(L);
        CHECK(rows.size() == (1ULL << static_cast<unsigned>(L.rank())));
        for (const auto& r : rows) {
            CHECK(r.certified_closed);
            CHECK(r.dim_a == r.ideal.size());
            if (r.dim_a == 0) CHECK(r.orbit_dim == 0);
            if (r.dim_a > 0) CHECK(r.orbit_dim > 0);
        }
    }
}
