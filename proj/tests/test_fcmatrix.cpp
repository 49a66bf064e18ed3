#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcong/fcmatrix.hpp"
#include "twistcong/lattice.hpp"
#include "twistcong/oracle.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace twistcong;

namespace {

// rows given bottom up: rows[q][i] is the entry string for cell (q, i)
FCMatrix mk(int n, int d, std::vector<std::vector<std::string>> rows) {
    REQUIRE(static_cast<int>(rows.size()) == n + 1);
    FCMatrix m = fc_blank(n, d);
    for (int q = 0; q <= n; ++q) {
        REQUIRE(static_cast<int>(rows[q].size()) == d + 1);
        for (int i = 0; i <= d; ++i) m.at(q, i) = centry_from_string(rows[q][i], q);
    }
    return m;
}

TwistedElement tp(std::int64_t i, int n, std::vector<std::vector<int>> blocks) {
    return TwistedElement::pair(i, make_partition(n, std::move(blocks)));
}

}  // namespace

TEST_CASE("builtin matrices are valid") {
    for (auto [n, d] : {std::pair{1, 0}, {1, 3}, {2, 1}, {3, 2}, {4, 0}, {5, 4}}) {
        CHECK(fc_valid(fc_delta(n, d)));
        CHECK(fc_valid(fc_universal(n, d)));
        CHECK(fc_valid(fc_atom(n, d)));
        CHECK(fc_valid(fc_coatom(n, d)));
        CHECK(fc_valid(fc_rees(n, d, {GridIndex{1, 0}})));
        CHECK(fc_valid(fc_rees(n, d, {GridIndex{0, d}})));
        CHECK(fc_atom(n, d) == fc_rees(n, d, {GridIndex{0, d}}));
        if (d >= 1) CHECK(fc_valid(fc_rees(n, d, {GridIndex{n, d}, GridIndex{0, 0}})));
    }
}

TEST_CASE("shape classification accepts the four low forms") {
    // aligned
    CHECK(fc_valid(mk(2, 2, {{"D", "R", "R"}, {"D", "R", "R"}, {"D", "D", "D"}})));
    // matched mu band
    CHECK(fc_valid(mk(2, 2, {{"mu", "mu", "R"}, {"mu_up", "mu", "mu"}, {"D", "D", "D"}})));
    // stagger with a slot entry
    CHECK(fc_valid(mk(2, 2, {{"R", "R", "R"}, {"D", "mu_down", "R"}, {"D", "D", "D"}})));
    // isolated mu pair at distance two
    CHECK(fc_valid(mk(2, 3, {{"D", "mu", "R", "R"}, {"D", "D", "D", "mu"}, {"D", "D", "D", "D"}})));
}

TEST_CASE("invalid matrices are rejected") {
    // unmatched mu alone in row 0
    CHECK(!fc_valid(mk(2, 1, {{"mu", "R"}, {"D", "D"}, {"D", "D"}})));
    // R above a non-R cell
    CHECK(!fc_valid(mk(2, 1, {{"D", "R"}, {"D", "R"}, {"R", "R"}})));
    // group label above a non-joining cell
    CHECK(!fc_valid(mk(3, 1, {{"D", "D"}, {"D", "D"}, {"D", "D"}, {"N:S3", "D"}})));
    // decreasing group run
    CHECK(!fc_valid(mk(4, 1, {{"R", "R"}, {"R", "R"}, {"R", "R"}, {"R", "R"}, {"N:S4", "N:K4"}})));
    // directional slot labels are not matrix entries
    CHECK(!fc_valid(mk(2, 1, {{"D", "R"}, {"lam", "R"}, {"D", "D"}})));
    // degree 1 collapses directional labels, so they are rejected there
    CHECK(!fc_valid(mk(1, 1, {{"D", "R"}, {"mu_up", "R"}})));
    // wrong dimensions
    FCMatrix bad = fc_delta(2, 1);
    bad.grid.pop_back();
    CHECK(!fc_valid(bad));
}

TEST_CASE("enumeration counts match the frozen table") {
    CHECK(enumerate_fc(1, 0).size() == 3);
    CHECK(enumerate_fc(1, 1).size() == 7);
    CHECK(enumerate_fc(1, 2).size() == 14);
    CHECK(enumerate_fc(2, 0).size() == 9);
    CHECK(enumerate_fc(2, 1).size() == 43);
    CHECK(enumerate_fc(2, 2).size() == 136);
    CHECK(enumerate_fc(3, 0).size() == 12);
    CHECK(enumerate_fc(3, 1).size() == 76);
    CHECK(enumerate_fc(3, 2).size() == 329);
    CHECK(enumerate_fc(4, 0).size() == 16);
    CHECK(enumerate_fc(4, 1).size() == 134);
    CHECK_THROWS_AS(enumerate_fc(3, 2, 100), std::length_error);
}

TEST_CASE("enumeration yields valid distinct matrices") {
    for (auto [n, d] : {std::pair{1, 3}, {2, 2}, {3, 1}}) {
        auto all = enumerate_fc(n, d);
        std::set<std::string> seen;
        for (const auto& m : all) {
            CHECK(fc_valid(m));
            CHECK(seen.insert(fc_to_string(m)).second);
            auto low = classify_low(m);
            CHECK(low.has_value());
            for (int q = 2; q <= n; ++q) CHECK(classify_high(m, q).has_value());
        }
        CHECK(seen.count(fc_to_string(fc_delta(n, d))) == 1);
        CHECK(seen.count(fc_to_string(fc_universal(n, d))) == 1);
        CHECK(seen.count(fc_to_string(fc_atom(n, d))) == 1);
        CHECK(seen.count(fc_to_string(fc_coatom(n, d))) == 1);
    }
}

TEST_CASE("inclusion is a partial order with the expected extremes") {
    auto all = enumerate_fc(2, 1);
    const FCMatrix bot = fc_delta(2, 1), top = fc_universal(2, 1);
    for (const auto& a : all) {
        CHECK(fcong_leq(a, a));
        CHECK(fcong_leq(bot, a));
        CHECK(fcong_leq(a, top));
    }
    int above_atom = 0;
    for (const auto& a : all)
        if (fcong_leq(fc_atom(2, 1), a)) ++above_atom;
    CHECK(above_atom == 42);  // everything except the bottom

    for (const auto& a : all)
        for (const auto& b : all) {
            if (fcong_leq(a, b) && fcong_leq(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (fcong_leq(a, b) && fcong_leq(b, c)) CHECK(fcong_leq(a, c));
        }
}

TEST_CASE("membership and inclusion agree extensionally") {
    // inclusion of member sets over the actual monoid must match fcong_leq
    for (auto [n, d] : {std::pair{1, 2}, {2, 1}}) {
        auto m = build_monoid(n, d);
        auto all = enumerate_fc(n, d);
        std::vector<ExtCong> exts;
        for (const auto& mat : all) exts.push_back(ext_of_matrix(m, mat));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j) {
                CHECK(fcong_leq(all[i], all[j]) == ext_leq(exts[i], exts[j]));
                if (i != j) CHECK(!(exts[i] == exts[j]));
            }
    }
}

TEST_CASE("principal matrices: basic shapes") {
    const int n = 2, d = 1;
    auto zero = TwistedElement::zero(n);
    auto id = tp(0, 2, {{1, -1}, {2, -2}});
    auto sw = tp(0, 2, {{1, -2}, {2, -1}});

    CHECK(principal_fc(id, id, n, d) == fc_delta(n, d));
    CHECK(principal_fc(zero, zero, n, d) == fc_delta(n, d));

    // zero against a pair gives the Rees matrix of its corner ideal
    CHECK(principal_fc(id, zero, n, d) == fc_rees(n, d, {GridIndex{2, 0}}));
    auto low = tp(1, 2, {{1}, {2}, {-1}, {-2}});
    CHECK(principal_fc(low, zero, n, d) == fc_rees(n, d, {GridIndex{0, 1}}));
    CHECK(principal_fc(low, zero, n, d) == fc_atom(n, d));

    // swap against identity: group cells on top, mu band below, R overflow
    FCMatrix ps = principal_fc(id, sw, n, d);
    CHECK(ps == mk(2, 1, {{"mu", "R"}, {"mu", "mu"}, {"N:S2", "N:S2"}}));

    // symmetric in the pair
    CHECK(principal_fc(sw, id, n, d) == ps);
}

TEST_CASE("principal matrices contain their generating pair") {
    for (auto [n, d] : {std::pair{1, 2}, {2, 1}}) {
        auto es = elements_of(n, d);
        for (const auto& a : es)
            for (const auto& b : es) {
                FCMatrix p = principal_fc(a, b, n, d);
                CHECK(fc_valid(p));
                CHECK(fcg_contains(p, a, b));
                CHECK(fcg_contains(p, b, a));
            }
    }
}

TEST_CASE("matched pairs of the mu band") {
    FCMatrix m = mk(2, 2, {{"mu", "mu", "R"}, {"mu_up", "mu", "mu"}, {"D", "D", "D"}});
    auto mp = matched_pairs(m);
    REQUIRE(mp.size() == 2);  // the slot cell is not a plain mu
    // offset is fixed by the first R columns: row 0 turns at 2, row 1 never
    for (const auto& [u, v] : mp) {
        CHECK(u.q == 0);
        CHECK(v.q == 1);
        CHECK(v.i - u.i == 1);
    }

    FCMatrix iso = mk(2, 3, {{"D", "mu", "R", "R"}, {"D", "D", "D", "mu"}, {"D", "D", "D", "D"}});
    auto mp2 = matched_pairs(iso);
    REQUIRE(mp2.size() == 1);
    CHECK(mp2[0].first.i == 1);
    CHECK(mp2[0].second.i == 3);
}

TEST_CASE("meet and join match the order tables") {
    for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
        auto lat = build_lattice(n, d);
        const auto& mats = lat.mats;
        for (int i = 0; i < lat.size(); ++i)
            for (int j = 0; j < lat.size(); ++j) {
                CHECK(fc_meet(mats[i], mats[j]) == mats[lat.meet[i][j]]);
                CHECK(fc_join(mats[i], mats[j]) == mats[lat.join[i][j]]);
            }
    }
}

TEST_CASE("generating sets are small and rebuild the matrix") {
    for (auto [n, d] : {std::pair{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
        auto all = enumerate_fc(n, d);
        const int bound = (5 * n + 1) / 2;
        for (const auto& m : all) {
            auto pairs = fc_generating_set(m);
            CHECK(static_cast<int>(pairs.size()) <= bound);
            FCMatrix joined = fc_delta(n, d);
            for (const auto& [a, b] : pairs) joined = fc_join(joined, principal_fc(a, b, n, d));
            CHECK(joined == m);
        }
    }
}

TEST_CASE("string form") {
    CHECK(fc_to_string(fc_universal(1, 1)) == "R R\nR R\n");
    CHECK(fc_to_string(fc_delta(1, 1)) == "D D\nD D\n");
    // rows print top row first
    CHECK(fc_to_string(fc_atom(1, 1)) == "D D\nD R\n");
    CHECK(fc_min(fc_atom(2, 3), 0) == 3);
    CHECK(fc_min(fc_atom(2, 3), 1) == 4);
}
