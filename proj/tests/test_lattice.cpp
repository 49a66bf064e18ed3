#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "twistcong/fcmatrix.hpp"
#include "twistcong/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace twistcong;

namespace {

FCMatrix col(int n, std::vector<std::string> cells_bottom_up) {
    REQUIRE(static_cast<int>(cells_bottom_up.size()) == n + 1);
    FCMatrix m = fc_blank(n, 0);
    for (int q = 0; q <= n; ++q) m.at(q, 0) = centry_from_string(cells_bottom_up[q], q);
    return m;
}

FiniteLattice five(const std::vector<std::pair<int, int>>& strict) {
    std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) le[i][i] = true;
    for (auto [a, b] : strict) le[a][b] = true;
    // close transitively
    for (int k = 0; k < 5; ++k)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    return lattice_from_leq({"bot", "a", "b", "c", "top"}, {}, le);
}

// expected degree-n counter-free lattice: a doubled diamond, then a chain of
// ideal collapses interleaved with group refinements
std::vector<FCMatrix> expected_column_lattice(int n) {
    auto pad = [&](std::vector<std::string> cells) {
        while (static_cast<int>(cells.size()) < n + 1) cells.push_back("D");
        return col(n, cells);
    };
    std::vector<FCMatrix> out;
    out.push_back(pad({"D"}));
    out.push_back(pad({"R"}));
    out.push_back(pad({"R", "mu_up"}));
    out.push_back(pad({"R", "mu_down"}));
    out.push_back(pad({"R", "mu"}));
    out.push_back(pad({"R", "mu", "N:S2"}));
    out.push_back(pad({"R", "R"}));
    out.push_back(pad({"R", "R", "N:S2"}));
    std::vector<std::string> rees{"R", "R", "R"};
    for (int q = 3; q <= n; ++q) {
        out.push_back(pad(rees));
        auto chain = ns_nontrivial_chain(q);
        for (size_t t = 0; t + 1 < chain.size(); ++t) {
            auto with_n = rees;
            std::string s = chain[t].label == NSLabel::klein4       ? "N:K4"
                            : chain[t].label == NSLabel::alternating ? "N:A" + std::to_string(q)
                                                                     : "N:S" + std::to_string(q);
            with_n.push_back(s);
            out.push_back(pad(with_n));
        }
        auto full = rees;
        full.push_back("N:S" + std::to_string(q));
        out.push_back(pad(full));
        rees.push_back("R");
    }
    out.push_back(pad(rees));
    return out;
}

}  // namespace

TEST_CASE("degree zero yields a chain") {
    auto l = build_lattice(0, 3);
    CHECK(l.size() == 5);
    CHECK(l.covers.size() == 4);
    CHECK(is_distributive(l));
    CHECK(atoms(l).size() == 1);
    CHECK(coatoms(l).size() == 1);
    CHECK(lat_bottom(l) == 0);
}

TEST_CASE("counter-free lattices are the expected chains of diamonds") {
    for (int n : {4, 5}) {
        auto l = build_lattice(n, 0);
        CHECK(l.size() == 3 * n + 4);
        CHECK(is_distributive(l));
        CHECK(is_modular(l));
        CHECK(!find_pentagon(l).has_value());
        CHECK(!find_diamond(l).has_value());

        auto expect = expected_column_lattice(n);
        REQUIRE(expect.size() == l.mats.size());
        std::vector<int> where;
        for (const auto& m : expect) {
            auto it = std::find(l.mats.begin(), l.mats.end(), m);
            REQUIRE(it != l.mats.end());
            where.push_back(static_cast<int>(it - l.mats.begin()));
        }

        // covers of the doubled diamond, then the tail chain; pairs are
        // (order-lower, order-upper) in lattice node indices
        std::set<std::pair<int, int>> want;
        auto cov = [&](int a, int b) { want.insert({where[a], where[b]}); };
        // indices into expect: 0 D, 1 R0, 2 up, 3 down, 4 mu, 5 muS2, 6 R1,
        // 7 RS2, then 8.. the tail
        for (auto [a, b] : std::vector<std::pair<int, int>>{
                 {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}})
            cov(a, b);
        for (size_t t = 7; t + 1 < expect.size(); ++t) cov(static_cast<int>(t), static_cast<int>(t) + 1);

        std::set<std::pair<int, int>> got(l.covers.begin(), l.covers.end());
        CHECK(got == want);
    }
}

TEST_CASE("small twisted lattices are modular but not distributive") {
    for (auto [n, d] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
        auto l = build_lattice(n, d);
        CHECK(is_modular(l));
        CHECK(!is_distributive(l));
        CHECK(!find_pentagon(l).has_value());
        CHECK(find_diamond(l).has_value());
        CHECK(atoms(l).size() == 1);
        CHECK(coatoms(l).size() == 1);
        CHECK(is_upper_semimodular(l));
        CHECK(is_lower_semimodular(l));
        CHECK(l.mats[atoms(l)[0]] == fc_atom(n, d));
        CHECK(l.mats[coatoms(l)[0]] == fc_coatom(n, d));

        // the modular law, directly
        for (int a = 0; a < l.size(); ++a)
            for (int b = 0; b < l.size(); ++b)
                for (int c = 0; c < l.size(); ++c)
                    if (l.leq(a, c)) CHECK(l.join[a][l.meet[b][c]] == l.meet[l.join[a][b]][c]);

        // a diamond witness really is one
        auto w = *find_diamond(l);
        auto [bot, x, y, z, top] = w;
        for (int u : {x, y, z}) {
            CHECK(l.leq(bot, u));
            CHECK(l.leq(u, top));
        }
        CHECK(l.meet[x][y] == bot);
        CHECK(l.meet[x][z] == bot);
        CHECK(l.meet[y][z] == bot);
        CHECK(l.join[x][y] == top);
        CHECK(l.join[x][z] == top);
        CHECK(l.join[y][z] == top);
    }
}

TEST_CASE("forbidden sublattice detectors") {
    // pentagon: bot < a < c < top with b off to the side
    auto n5 = five({{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
    CHECK(find_pentagon(n5).has_value());
    CHECK(!find_diamond(n5).has_value());
    CHECK(!is_modular(n5));
    CHECK(!is_distributive(n5));
    CHECK(!is_upper_semimodular(n5));
    CHECK(!is_lower_semimodular(n5));

    // diamond: three incomparable middle elements
    auto m3 = five({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(!find_pentagon(m3).has_value());
    CHECK(find_diamond(m3).has_value());
    CHECK(is_modular(m3));
    CHECK(!is_distributive(m3));
    CHECK(is_upper_semimodular(m3));
    CHECK(is_lower_semimodular(m3));

    // two maximal elements: no join, so not a lattice
    std::vector<std::vector<bool>> le(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i) le[i][i] = true;
    le[0][1] = le[0][2] = true;
    CHECK_THROWS_AS(lattice_from_leq({"x", "y", "z"}, {}, le), std::invalid_argument);
}

TEST_CASE("covers regenerate the order") {
    auto l = build_lattice(2, 1);
    CHECK(l.size() == 43);
    std::vector<std::vector<bool>> reach(l.size(), std::vector<bool>(l.size(), false));
    for (int i = 0; i < l.size(); ++i) reach[i][i] = true;
    for (auto [a, b] : l.covers) reach[a][b] = true;
    for (int k = 0; k < l.size(); ++k)
        for (int i = 0; i < l.size(); ++i)
            for (int j = 0; j < l.size(); ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) CHECK(reach[i][j] == l.le[i][j]);

    // absorption ties the two tables together
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) {
            CHECK(l.join[i][l.meet[i][j]] == i);
            CHECK(l.meet[i][l.join[i][j]] == i);
        }
}

TEST_CASE("exports") {
    auto l = build_lattice(1, 1);
    CHECK(l.size() == 7);

    auto dot = lattice_dot(l);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("n0") != std::string::npos);

    auto js = nlohmann::json::parse(lattice_json(l));
    CHECK(js["size"] == 7);
    CHECK(js["elements"].size() == 7);
    CHECK(js["covers"].size() == l.covers.size());

    auto csv = lattice_csv(l);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 2 * 7 * 7 + 1);

    auto rep = nlohmann::json::parse(property_report_json(l));
    for (const char* key : {"size", "atoms", "coatoms", "modular", "distributive",
                            "upper_semimodular", "lower_semimodular", "pentagon_witness",
                            "diamond_witness"})
        CHECK(rep.contains(key));
    CHECK(rep["modular"] == true);
    CHECK(rep["distributive"] == false);
    CHECK(rep["pentagon_witness"].is_null());
    CHECK(rep["diamond_witness"].is_array());
}
