#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "aif/constructions.hpp"
#include "aif/error.hpp"
#include "aif/family.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace aif;
using testing::complete;
using testing::fam;
using testing::set_of;

TEST_CASE("params and subsets are validated") {
    CHECK_THROWS_AS(Params::make(5, 5), ParamError);
    CHECK_THROWS_AS(Params::make(65, 3), ParamError);
    CHECK_THROWS_AS(Params::make(5, 0), ParamError);
    const Params p = Params::make(6, 3);
    CHECK_THROWS_AS(KSubset(p, set_of({1, 2})), ParamError);
    CHECK_THROWS_AS(KSubset(p, set_of({1, 2, 7})), ParamError);
    const std::vector<Element> unsorted = {2, 1, 3};
    CHECK_THROWS_AS(KSubset::from_elements(p, unsorted), ParamError);
    CHECK(KSubset(p, set_of({1, 2, 3})).elements() == std::vector<Element>{1, 2, 3});
}

TEST_CASE("intersects") {
    const Params p2 = Params::make(6, 2), p3 = Params::make(6, 3);
    CHECK(intersects(KSubset(p2, set_of({1, 2})), KSubset(p2, set_of({2, 3}))));
    CHECK_FALSE(intersects(KSubset(p2, set_of({1, 2})), KSubset(p2, set_of({3, 4}))));
    CHECK_FALSE(intersects(KSubset(p3, set_of({1, 2, 3})), KSubset(p3, set_of({4, 5, 6}))));
    CHECK_THROWS_AS(intersects(KSubset(p2, set_of({1, 2})), KSubset(p3, set_of({1, 2, 3}))), ParamError);
}

TEST_CASE("families are stored sorted and reject duplicates") {
    const auto f = fam(5, 2, {{3, 4}, {1, 2}, {1, 5}});
    CHECK(std::is_sorted(f.masks().begin(), f.masks().end()));
    CHECK_THROWS_AS(fam(5, 2, {{1, 2}, {1, 2}}), ParamError);
    CHECK(SetFamily::collect(Params::make(5, 2), {set_of({1, 2}), set_of({1, 2})}).size() == 1);
}

TEST_CASE("intersecting and almost-intersecting predicates") {
    CHECK(is_intersecting(full_star(5, 2, 1)));
    CHECK_FALSE(is_intersecting(fam(4, 2, {{1, 2}, {3, 4}})));
    CHECK(is_intersecting(SetFamily(Params::make(4, 2))));
    CHECK(is_almost_intersecting(fam(4, 2, {{1, 2}, {3, 4}})));
    CHECK_FALSE(is_almost_intersecting(full_star(6, 3, 1)));
    CHECK_FALSE(is_almost_intersecting(fam(6, 2, {{1, 2}, {3, 4}, {5, 6}})));
}

TEST_CASE("disjoint partner counts") {
    const auto c42 = complete(5, 4, 2);
    const auto counts = disjoint_partner_counts(c42);
    CHECK(std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; }));
    const auto three = disjoint_partner_counts(fam(6, 2, {{1, 2}, {3, 4}, {5, 6}}));
    CHECK(std::all_of(three.begin(), three.end(), [](int c) { return c == 2; }));
    const auto star = disjoint_partner_counts(full_star(6, 3, 2));
    CHECK(std::all_of(star.begin(), star.end(), [](int c) { return c == 0; }));
}

TEST_CASE("degrees") {
    CHECK(degree(full_star(6, 3, 1), 1) == 10);
    CHECK_THROWS_AS(degree(full_star(6, 3, 1), 7), ParamError);
    const auto hm = hilton_milner(9, 4);
    const auto md = max_degree(hm);
    CHECK(md.element == 1);
    CHECK(md.value == 56 - 4);  // C(8,3) - C(4,3)
    const auto empty = max_degree(SetFamily(Params::make(5, 2)));
    CHECK(empty.element == 1);
    CHECK(empty.value == 0);
    for (int x = 1; x <= 7; ++x) {
        const auto m = max_degree(full_star(7, 3, x));
        CHECK(m.element == x);
        CHECK(m.value == 15);
    }
}

TEST_CASE("links") {
    const auto l = link(full_star(6, 3, 1), 1);
    CHECK(l.params().k == 2);
    CHECK(oracle::from(l) == oracle::combinations(6, 2, 2));
    CHECK(oracle::from(without(hilton_milner(8, 3), 1)) == oracle::Family{{2, 3, 4}});
    CHECK(oracle::from(link_avoiding(fam(3, 2, {{1, 2}, {1, 3}, {2, 3}}), 1, 3)) == oracle::Family{{2}});
    CHECK_THROWS_AS(link_avoiding(full_star(5, 2, 1), 1, 1), ParamError);
    const auto b = b_r(9, 4, 3);
    for (int x = 1; x <= 9; ++x) CHECK(link(b, x).size() + without(b, x).size() == b.size());
}

TEST_CASE("isomorphism") {
    const auto c = complete(5, 4, 2);
    const Permutation rev = {5, 4, 3, 2, 1};
    const auto image = apply_permutation(c, rev);
    const auto w = family_isomorphic(c, image);
    REQUIRE(w.has_value());
    CHECK(apply_permutation(c, *w) == image);
    CHECK_FALSE(family_isomorphic(b_r(8, 3, 3), b_r(8, 3, 4)).has_value());
    CHECK(family_isomorphic(c, c).has_value());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = b_plus(10, 3);
        Permutation perm(10);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto g = apply_permutation(f, perm);
        const auto fw = family_isomorphic(f, g);
        const auto bw = family_isomorphic(g, f);
        REQUIRE(fw.has_value());
        REQUIRE(bw.has_value());
        CHECK(apply_permutation(f, *fw) == g);
        CHECK(apply_permutation(g, *bw) == f);
    }
}

TEST_CASE("predicates agree with the naive oracle on random families") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % 2);
        std::vector<Mask> masks;
        for_each_subset(n, k, [&](Mask m) {
            if (rng() % 4 == 0) masks.push_back(m);
        });
        const SetFamily f(Params::make(n, k), masks);
        const auto o = oracle::from(f);
        CHECK(is_intersecting(f) == oracle::intersecting(o));
        CHECK(is_almost_intersecting(f) == oracle::almost_intersecting(o));
        const auto counts = disjoint_partner_counts(f);
        CHECK(is_intersecting(f) == std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; }));
    }
}
