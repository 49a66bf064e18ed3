#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcong/fcmatrix.hpp"
#include "twistcong/lattice.hpp"
#include "twistcong/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

using namespace twistcong;

TEST_CASE("monoid tables") {
    auto m = build_monoid(2, 1);
    CHECK(m.size() == 31);
    CHECK(build_monoid(1, 1).size() == 5);
    CHECK(build_monoid(2, 2).size() == 46);

    for (int x = 0; x < m.size(); ++x) CHECK(m.index_of(m.elems[x]) == x);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, m.size() - 1);
    for (int t = 0; t < 4000; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(m.prod(m.prod(a, b), c) == m.prod(a, m.prod(b, c)));
    }
}

TEST_CASE("closure basics") {
    auto m = build_monoid(2, 1);
    CHECK(congruence_closure(m, {}) == ext_diagonal(m));

    std::vector<std::pair<int, int>> all_pairs;
    for (int x = 0; x < m.size(); ++x) all_pairs.push_back({0, x});
    CHECK(congruence_closure(m, all_pairs) == ext_universal(m));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, m.size() - 1);
    for (int t = 0; t < 30; ++t) {
        auto c = congruence_closure(m, {{pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
        CHECK(ext_compatible(m, c));
        // closing the closure's own pairs changes nothing
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < m.size(); ++x)
            for (int y = x + 1; y < m.size(); ++y)
                if (c.related(x, y)) pairs.push_back({x, y});
        CHECK(congruence_closure(m, pairs) == c);
    }
}

TEST_CASE("full congruence sets by brute force") {
    std::map<std::pair<int, int>, int> expected{
        {{1, 0}, 3}, {{1, 1}, 7}, {{1, 2}, 14}, {{2, 0}, 9}, {{2, 1}, 43}};
    for (auto [nd, count] : expected) {
        auto m = build_monoid(nd.first, nd.second);
        auto all = all_congruences(m);
        CHECK(static_cast<int>(all.size()) == count);
        std::set<ExtCong> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
        CHECK(uniq.count(ext_diagonal(m)) == 1);
        CHECK(uniq.count(ext_universal(m)) == 1);
        for (const auto& c : all) CHECK(ext_compatible(m, c));
    }
}

TEST_CASE("congruence set is closed under meet and join") {
    auto m = build_monoid(2, 1);
    auto all = all_congruences(m);
    std::set<ExtCong> uniq(all.begin(), all.end());
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(uniq.count(ext_meet(a, b)) == 1);
            CHECK(uniq.count(ext_join(m, a, b)) == 1);
        }
}

TEST_CASE("matrix expansion is faithful and order preserving") {
    for (auto [n, d] : {std::pair{1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
        auto m = build_monoid(n, d);
        auto mats = enumerate_fc(n, d);
        std::vector<ExtCong> exts;
        for (const auto& mat : mats) {
            auto e = ext_of_matrix(m, mat);
            CHECK(ext_compatible(m, e));
            exts.push_back(e);
        }
        std::set<ExtCong> uniq(exts.begin(), exts.end());
        CHECK(uniq.size() == mats.size());
        for (size_t i = 0; i < mats.size(); ++i)
            for (size_t j = 0; j < mats.size(); ++j)
                CHECK(fcong_leq(mats[i], mats[j]) == ext_leq(exts[i], exts[j]));
    }
}

TEST_CASE("matrix recovery round trip") {
    for (auto [n, d] : {std::pair{1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}) {
        auto m = build_monoid(n, d);
        for (const auto& mat : enumerate_fc(n, d))
            CHECK(match_to_fc(m, ext_of_matrix(m, mat)) == mat);
    }
}

TEST_CASE("brute force congruences biject with matrices") {
    for (auto [n, d] : {std::pair{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
        auto m = build_monoid(n, d);
        auto all = all_congruences(m);
        auto mats = enumerate_fc(n, d);
        REQUIRE(all.size() == mats.size());

        std::map<std::string, size_t> mat_index;
        for (size_t i = 0; i < mats.size(); ++i) mat_index[fc_to_string(mats[i])] = i;

        std::vector<size_t> image;
        for (const auto& c : all) {
            FCMatrix got = match_to_fc(m, c);
            auto it = mat_index.find(fc_to_string(got));
            REQUIRE(it != mat_index.end());
            image.push_back(it->second);
            CHECK(ext_of_matrix(m, got) == c);
        }
        std::set<size_t> uniq(image.begin(), image.end());
        CHECK(uniq.size() == all.size());

        // order isomorphism
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                CHECK(ext_leq(all[i], all[j]) == fcong_leq(mats[image[i]], mats[image[j]]));
    }
}

TEST_CASE("principal matrices equal brute force closures") {
    for (auto [n, d] : {std::pair{1, 2}, {2, 1}}) {
        auto m = build_monoid(n, d);
        for (int x = 0; x < m.size(); ++x)
            for (int y = 0; y < m.size(); ++y) {
                FCMatrix p = principal_fc(m.elems[x], m.elems[y], n, d);
                CHECK(ext_of_matrix(m, p) == congruence_closure(m, {{x, y}}));
            }
    }
}

TEST_CASE("generating pairs close to the right congruence") {
    for (auto [n, d] : {std::pair{2, 1}, {2, 2}}) {
        auto m = build_monoid(n, d);
        for (const auto& mat : enumerate_fc(n, d)) {
            auto pairs = fc_generating_set(mat);
            CHECK(pairs.size() <= 5);
            std::vector<std::pair<int, int>> seeds;
            for (const auto& [a, b] : pairs) seeds.push_back({m.index_of(a), m.index_of(b)});
            CHECK(congruence_closure(m, seeds) == ext_of_matrix(m, mat));
        }
    }
}

TEST_CASE("relational composition") {
    auto m = build_monoid(2, 1);
    auto all = all_congruences(m);
    auto diag = ext_diagonal(m);
    for (const auto& c : all) {
        CHECK(compose3_equal(c, c));
        CHECK(compose3_equal(c, diag));
    }
    // chain containment: a two-step composite reaches exactly the pairs with
    // a middle witness
    const auto& s = all[5];
    const auto& t = all[9];
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y) {
            bool direct = false;
            for (int z = 0; z < m.size() && !direct; ++z)
                if (s.related(x, z) && t.related(z, y)) direct = true;
            CHECK(compose_contains({s, t}, x, y) == direct);
        }
}
