#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lagsub/error.hpp"
#include "lagsub/rootsys.hpp"

using namespace lagsub;

namespace {
RootSystem rs_of(const std::string& type) { return RootSystem::build(CartanMatrix::parse(type)); }

Root root(std::vector<int> c) { return Root(std::move(c)); }
} // namespace

TEST_CASE("cartan matrix validation") {
    CHECK(CartanMatrix::parse("A1").rank() == 1);
    CHECK(CartanMatrix::parse("G2").type_string() == "G2");
    CHECK_THROWS_AS(CartanMatrix::parse("D3"), InvalidCartanMatrix); // = A3, hinted not aliased
    CHECK_THROWS_AS(CartanMatrix::parse("B1"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::parse("G3"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::parse("F5"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::parse("E9"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::parse("A7"), CapExceeded);
    CHECK(CartanMatrix::parse("A7", 8).rank() == 7);
    CHECK_THROWS_AS(CartanMatrix::parse("Z4"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::parse("B"), InvalidCartanMatrix);
    CHECK_THROWS_AS(CartanMatrix::from_entries('A', 2, {{2, -2}, {-1, 2}}), InvalidCartanMatrix);
    CHECK(CartanMatrix::from_entries('B', 2, {{2, -1}, {-2, 2}}).type_string() == "B2");
}

TEST_CASE("positive root counts match the classical values") {
    // Closure construction cross-checked against the closed-form counts.
    const std::pair<const char*, std::size_t> expected[] = {
        {"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"A5", 15}, {"A6", 21},
        {"B2", 4}, {"B3", 9},  {"B4", 16}, {"B5", 25}, {"B6", 36}, {"C3", 9},
        {"C4", 16}, {"D4", 12}, {"D5", 20}, {"D6", 30}, {"E6", 36}, {"F4", 24},
        {"G2", 6},
    };
    for (const auto& [type, count] : expected) {
        RootSystem rs = rs_of(type);
        CHECK_MESSAGE(rs.num_positive() == count, type);
    }
}

TEST_CASE("A1 and A2 root lists") {
    RootSystem a1 = rs_of("A1");
    CHECK(a1.positive_roots() == std::vector<Root>{root({1})});
    CHECK(a1.is_root(root({-1})));
    CHECK_FALSE(a1.is_root(root({2})));

    RootSystem a2 = rs_of("A2");
    // canonical order: height ascending, lexicographic tie-break on coeffs
    CHECK(a2.positive_roots() == std::vector<Root>{root({0, 1}), root({1, 0}), root({1, 1})});
    CHECK(a2.num_roots() == 6);
}

TEST_CASE("G2 highest root") {
    RootSystem g2 = rs_of("G2");
    CHECK(g2.highest_root() == root({3, 2}));
    // alpha_1 is the short root
    CHECK(g2.length_sq(root({1, 0})) < g2.length_sq(root({0, 1})));
}

TEST_CASE("every positive root is a nonneg simple combination; height 1 = simple") {
    for (const char* type : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = rs_of(type);
        int simple_count = 0;
        for (const Root& r : rs.positive_roots()) {
            CHECK(r.is_positive());
            if (r.height() == 1) ++simple_count;
        }
        CHECK(simple_count == rs.rank());
    }
}

TEST_CASE("sum_as_root examples and symmetry") {
    RootSystem a2 = rs_of("A2");
    CHECK(a2.sum_as_root(root({1, 0}), root({0, 1})) == root({1, 1}));
    CHECK_FALSE(a2.sum_as_root(root({1, 0}), root({1, 0})).has_value());
    CHECK_FALSE(a2.sum_as_root(root({1, 1}), root({1, 0})).has_value());
    CHECK_THROWS_AS(a2.sum_as_root(root({2, 0}), root({0, 1})), NotARoot);
    // lambda + (-lambda) = 0 is not a root
    CHECK_FALSE(a2.sum_as_root(root({1, 0}), root({-1, 0})).has_value());

    for (const char* type : {"B2", "G2", "A3"}) {
        RootSystem rs = rs_of(type);
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (std::size_t j = 0; j < rs.num_roots(); ++j)
                CHECK(rs.sum_as_root(rs.root_at(i), rs.root_at(j)) ==
                      rs.sum_as_root(rs.root_at(j), rs.root_at(i)));
    }
}

TEST_CASE("root string depths") {
    RootSystem a2 = rs_of("A2");
    CHECK(a2.root_string_p(root({1, 0}), root({0, 1})) == 0);

    RootSystem b2 = rs_of("B2");
    CHECK(b2.root_string_p(root({0, 1}), root({1, 0})) == 0);
    CHECK(b2.root_string_p(root({0, 1}), root({1, 1})) == 1);

    RootSystem g2 = rs_of("G2");
    CHECK(g2.root_string_p(root({1, 0}), root({0, 1})) == 0);
    // the long string: alpha_2 + 3 alpha_1 is a root, so p(alpha_1, 3a1+a2) = 3
    CHECK(g2.root_string_p(root({1, 0}), root({3, 1})) == 3);

    CHECK_THROWS_AS(a2.root_string_p(root({1, 0}), root({1, 0})), NotARoot);
    CHECK_THROWS_AS(a2.root_string_p(root({1, 0}), root({-1, 0})), NotARoot);
}

TEST_CASE("weyl group orders by BFS closure") {
    const std::pair<const char*, std::size_t> expected[] = {
        {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"D4", 192}, {"F4", 1152},
    };
    for (const auto& [type, order] : expected) {
        RootSystem rs = rs_of(type);
        auto w = enumerate_weyl_group(rs, 2000);
        CHECK_MESSAGE(w.size() == order, type);
    }
}

TEST_CASE("weyl cap exceeded reports the known order") {
    RootSystem b3 = rs_of("B3");
    try {
        enumerate_weyl_group(b3, 10);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("48") != std::string::npos);
    }
}

TEST_CASE("weyl elements act orthogonally and compose") {
    RootSystem b2 = rs_of("B2");
    auto group = enumerate_weyl_group(b2, 100);
    for (const auto& w : group) {
        for (std::size_t k = 0; k < b2.num_roots(); ++k) {
            Root r = b2.root_at(k);
            CHECK(b2.length_sq(w.apply(b2, r)) == b2.length_sq(r));
            // negation commutes with the action
            CHECK(w.apply(b2, -r) == -w.apply(b2, r));
        }
        CHECK(w.compose(w.inverse()) == WeylElement::identity(b2.num_roots()));
    }
}

TEST_CASE("positive_system_of examples") {
    RootSystem a2 = rs_of("A2");
    auto id = WeylElement::identity(a2.num_roots());
    CHECK(positive_system_of(id, a2) == a2.positive_roots());

    auto s1 = simple_reflection(a2, 0);
    std::vector<Root> expect{root({-1, 0}), root({0, 1}), root({1, 1})};
    std::sort(expect.begin(), expect.end());
    CHECK(positive_system_of(s1, a2) == expect);

    // the longest element negates all roots
    auto group = enumerate_weyl_group(a2, 100);
    bool found_w0 = false;
    for (const auto& w : group) {
        auto sys = positive_system_of(w, a2);
        std::vector<Root> neg;
        for (const Root& r : a2.positive_roots()) neg.push_back(-r);
        std::sort(neg.begin(), neg.end());
        if (sys == neg) found_w0 = true;
    }
    CHECK(found_w0);
}

TEST_CASE("every positive system has one root per opposite pair") {
    for (const char* type : {"A2", "B2", "G2", "B3"}) {
        RootSystem rs = rs_of(type);
        auto group = enumerate_weyl_group(rs, 2000);
        for (const auto& w : group) {
            auto sys = positive_system_of(w, rs);
            CHECK(sys.size() == rs.num_positive());
            std::set<Root> in(sys.begin(), sys.end());
            for (const Root& r : rs.positive_roots())
                CHECK(in.count(r) + in.count(-r) == 1);
        }
    }
}

TEST_CASE("coroot coefficients are integral") {
    for (const char* type : {"B3", "C3", "G2", "F4", "D4"}) {
        RootSystem rs = rs_of(type);
        for (const Root& r : rs.positive_roots())
            for (const Rational& c : rs.coroot_coeffs(r)) CHECK(c.is_integer());
    }
}
