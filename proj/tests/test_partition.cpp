#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcong/partition.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace twistcong;

namespace {

Partition P(int n, std::vector<std::vector<int>> blocks) {
    return make_partition(n, std::move(blocks));
}

// Transversal matching computed straight from the blocks, with transversals
// listed by least lower point instead of least upper point. Used to confirm
// that the group label of a pair does not depend on the listing order.
Permutation pd_by_lower(const Partition& a, const Partition& b) {
    // transversals as (lower part, upper part), listed by least lower point
    auto split = [](const Partition& p) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& blk : p.blocks) {
            std::vector<int> low, up;
            for (int x : blk) (x < 0 ? low : up).push_back(x < 0 ? -x : x);
            if (!low.empty() && !up.empty()) out.push_back({low, up});
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first.front() < y.first.front(); });
        return out;
    };
    auto la = split(a), lb = split(b);
    REQUIRE(la.size() == lb.size());
    // with both lists keyed by the shared lower parts, the permutation is
    // given by where each upper part moved
    Permutation p;
    p.q = static_cast<int>(la.size());
    p.img.assign(la.size(), -1);
    for (size_t i = 0; i < lb.size(); ++i) {
        auto it = std::find_if(la.begin(), la.end(),
                               [&](const auto& t) { return t.second == lb[i].second; });
        REQUIRE(it != la.end());
        p.img[i] = static_cast<int>(it - la.begin());
    }
    return p;
}

// Explicit element set of a normal subgroup, built by closing the given
// generators under composition and conjugation by all of S_q.
std::set<std::vector<int>> closure_set(int q, const std::vector<Permutation>& gens) {
    auto all = all_permutations(q);
    std::set<std::vector<int>> have;
    std::vector<Permutation> work = gens;
    have.insert(perm_identity(q).img);
    for (const auto& g : gens) have.insert(g.img);
    while (!work.empty()) {
        Permutation g = work.back();
        work.pop_back();
        for (const auto& s : all) {
            Permutation c = perm_compose(perm_compose(s, g), perm_inverse(s));
            if (have.insert(c.img).second) work.push_back(c);
        }
        for (const auto& himg : std::set<std::vector<int>>(have)) {
            Permutation h{q, std::vector<int>(himg)};
            Permutation m = perm_compose(g, h);
            if (have.insert(m.img).second) work.push_back(m);
        }
    }
    return have;
}

}  // namespace

TEST_CASE("canonical form and validation") {
    Partition a = P(2, {{-1, 1}, {2, -2}});
    CHECK(a.blocks == std::vector<std::vector<int>>{{1, -1}, {2, -2}});

    Partition b = P(3, {{-3}, {3, 1, -1}, {2, -2}});
    CHECK(b.blocks == std::vector<std::vector<int>>{{1, 3, -1}, {2, -2}, {-3}});

    CHECK_THROWS_AS(P(2, {{1, -1}}), std::invalid_argument);             // missing points
    CHECK_THROWS_AS(P(2, {{1, -1}, {2, -2}, {2}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(P(2, {{1, -1}, {2, -2, 3}}), std::invalid_argument);    // out of range
    CHECK_THROWS_AS(P(2, {{1, -1, 0}, {2, -2}}), std::invalid_argument);    // zero point
}

TEST_CASE("diagram product worked example") {
    // degree 6; the product glues the two middle rows and keeps one floating
    // component
    Partition a = P(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}});
    Partition b = P(6, {{1, 2}, {3, 4, -1}, {5, -4, -5, -6}, {6}, {-2, -3}});
    auto [ab, phi] = multiply(a, b);
    CHECK(ab == P(6, {{1, 4}, {2, 3, -1, -4, -5, -6}, {5, 6}, {-2, -3}}));
    CHECK(phi == 1);
}

TEST_CASE("identity and floating count basics") {
    Partition id3 = P(3, {{1, -1}, {2, -2}, {3, -3}});
    for (const auto& a : all_diagrams(3)) {
        auto [l, pl] = multiply(id3, a);
        auto [r, pr] = multiply(a, id3);
        CHECK(l == a);
        CHECK(r == a);
        CHECK(pl == 0);
        CHECK(pr == 0);
    }
    // fully disconnected squared: every middle pair floats
    Partition disc = P(2, {{1}, {2}, {-1}, {-2}});
    auto [dd, phi] = multiply(disc, disc);
    CHECK(dd == disc);
    CHECK(phi == 2);
}

TEST_CASE("exhaustive element counts") {
    CHECK(all_diagrams(0).size() == 1);
    CHECK(all_diagrams(1).size() == 2);
    CHECK(all_diagrams(2).size() == 15);
    CHECK(all_diagrams(3).size() == 203);
}

TEST_CASE("associativity and the floating cocycle") {
    auto d2 = all_diagrams(2);
    for (const auto& a : d2)
        for (const auto& b : d2)
            for (const auto& c : d2) {
                auto [ab, p_ab] = multiply(a, b);
                auto [bc, p_bc] = multiply(b, c);
                auto [l, p_l] = multiply(ab, c);
                auto [r, p_r] = multiply(a, bc);
                CHECK(l == r);
                CHECK(p_ab + p_l == p_bc + p_r);
            }

    auto d3 = all_diagrams(3);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<size_t> pick(0, d3.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto &a = d3[pick(rng)], &b = d3[pick(rng)], &c = d3[pick(rng)];
        auto [ab, p_ab] = multiply(a, b);
        auto [bc, p_bc] = multiply(b, c);
        auto [l, p_l] = multiply(ab, c);
        auto [r, p_r] = multiply(a, bc);
        CHECK(l == r);
        CHECK(p_ab + p_l == p_bc + p_r);
    }
}

TEST_CASE("rank, hat and row data") {
    Partition a = P(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}});
    CHECK(rank(a) == 1);
    CHECK(dom(a) == std::vector<int>{2, 3});
    CHECK(codom(a) == std::vector<int>{4, 5});
    CHECK(ker(a) == std::vector<std::vector<int>>{{1, 4}, {2, 3}, {5, 6}});
    CHECK(coker(a) == std::vector<std::vector<int>>{{1, 2, 6}, {3}, {4, 5}});

    Partition h = hat(a);
    CHECK(rank(h) == 0);
    CHECK(h == P(6, {{1, 4}, {2, 3}, {5, 6}, {-1, -2, -6}, {-3}, {-4, -5}}));
    CHECK(hat(h) == h);
    CHECK(ker(h) == ker(a));
    CHECK(coker(h) == coker(a));

    for (const auto& x : all_diagrams(3)) {
        CHECK(rank(hat(x)) == 0);
        CHECK(hat(hat(x)) == hat(x));
        CHECK(ker(hat(x)) == ker(x));
        CHECK(coker(hat(x)) == coker(x));
    }
}

TEST_CASE("green relations") {
    auto d2 = all_diagrams(2);
    for (const auto& a : d2)
        for (const auto& b : d2) {
            bool r = green(Green::R, a, b);
            bool l = green(Green::L, a, b);
            CHECK(green(Green::H, a, b) == (r && l));
            CHECK(green(Green::D, a, b) == (rank(a) == rank(b)));
            CHECK(r == (dom(a) == dom(b) && ker(a) == ker(b)));
            CHECK(l == (codom(a) == codom(b) && coker(a) == coker(b)));
        }

    // the group of units is the H-class of the identity
    Partition id3 = P(3, {{1, -1}, {2, -2}, {3, -3}});
    int units = 0;
    for (const auto& a : all_diagrams(3))
        if (green(Green::H, a, id3)) ++units;
    CHECK(units == 6);
}

TEST_CASE("permutation utilities") {
    CHECK(all_permutations(0).size() == 1);
    CHECK(all_permutations(4).size() == 24);

    Permutation s{3, {1, 0, 2}};  // swap 0,1
    Permutation c{3, {1, 2, 0}};  // 3-cycle
    CHECK(!perm_even(s));
    CHECK(perm_even(c));
    CHECK(perm_cycle_type(s) == std::vector<int>{2, 1});
    CHECK(perm_cycle_type(c) == std::vector<int>{3});
    CHECK(perm_compose(s, perm_inverse(s)) == perm_identity(3));
    CHECK(perm_is_identity(perm_compose(c, perm_compose(c, c))));

    for (const auto& p : all_permutations(4)) {
        CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(4));
        int sum = 0;
        for (int part : perm_cycle_type(p)) sum += part;
        CHECK(sum == 4);
    }
}

TEST_CASE("pairwise transversal matching") {
    // permutation diagrams: matching against the identity recovers the map
    auto perm_diag = [](const Permutation& p) {
        std::vector<std::vector<int>> blocks;
        for (int u = 0; u < p.q; ++u) blocks.push_back({u + 1, -(p.img[u] + 1)});
        return make_partition(p.q, blocks);
    };
    Partition id3 = perm_diag(perm_identity(3));
    for (const auto& p : all_permutations(3)) {
        Permutation got = pd(perm_diag(p), id3);
        CHECK(perm_cycle_type(got) == perm_cycle_type(p));
    }

    // H-related pairs must agree with the lower-point matching up to the
    // induced normal closure
    auto d3 = all_diagrams(3);
    int pairs = 0;
    for (const auto& a : d3) {
        if (rank(a) < 2) continue;
        for (const auto& b : d3) {
            if (!green(Green::H, a, b)) continue;
            Permutation up = pd(a, b);
            Permutation low = pd_by_lower(a, b);
            CHECK(normal_closure(up) == normal_closure(low));
            ++pairs;
        }
    }
    CHECK(pairs > 0);

    Partition x = P(2, {{1, -1}, {2, -2}});
    Partition y = P(2, {{1, 2}, {-1, -2}});
    CHECK_THROWS_AS(pd(x, y), std::invalid_argument);
}

TEST_CASE("normal subgroup chain and closures") {
    CHECK(ns_nontrivial_chain(2).size() == 1);
    CHECK(ns_nontrivial_chain(3).size() == 2);
    CHECK(ns_nontrivial_chain(4).size() == 3);
    CHECK(ns_nontrivial_chain(5).size() == 2);
    for (int q = 2; q <= 5; ++q) {
        auto ch = ns_nontrivial_chain(q);
        for (size_t i = 0; i + 1 < ch.size(); ++i) {
            CHECK(ns_leq(ch[i], ch[i + 1]));
            CHECK(!ns_leq(ch[i + 1], ch[i]));
        }
        CHECK(ch.back().label == NSLabel::full);
    }

    CHECK(normal_closure(perm_identity(3)).label == NSLabel::trivial);
    CHECK(normal_closure(Permutation{2, {1, 0}}).label == NSLabel::full);
    CHECK(normal_closure(Permutation{3, {1, 0, 2}}).label == NSLabel::full);
    CHECK(normal_closure(Permutation{3, {1, 2, 0}}).label == NSLabel::alternating);
    CHECK(normal_closure(Permutation{4, {1, 0, 3, 2}}).label == NSLabel::klein4);
    CHECK(normal_closure(Permutation{5, {1, 0, 3, 2, 4}}).label == NSLabel::alternating);
    CHECK(normal_closure(Permutation{4, {1, 2, 0, 3}}).label == NSLabel::alternating);
}

TEST_CASE("normal closure against explicit conjugation closure") {
    for (int q = 2; q <= 5; ++q) {
        // the closure only depends on the conjugacy class, so compute one
        // explicit set per cycle type
        std::map<std::vector<int>, std::set<std::vector<int>>> by_type;
        for (const auto& p : all_permutations(q)) {
            auto ct = perm_cycle_type(p);
            auto it = by_type.find(ct);
            if (it == by_type.end()) it = by_type.emplace(ct, closure_set(q, {p})).first;
            NormalSubgroup N = normal_closure(p);
            for (const auto& s : all_permutations(q))
                CHECK(subgroup_contains(N, s) == (it->second.count(s.img) > 0));
        }
    }
}

TEST_CASE("normal subgroup lattice operations") {
    for (int q : {2, 3, 4, 5, 6}) {
        std::vector<NormalSubgroup> all{NormalSubgroup{q, NSLabel::trivial}};
        for (const auto& N : ns_nontrivial_chain(q)) all.push_back(N);
        for (const auto& A : all)
            for (const auto& B : all) {
                auto M = ns_meet(A, B), J = ns_join(A, B);
                CHECK(ns_leq(M, A));
                CHECK(ns_leq(M, B));
                CHECK(ns_leq(A, J));
                CHECK(ns_leq(B, J));
                for (const auto& C : all) {
                    if (ns_leq(C, A) && ns_leq(C, B)) CHECK(ns_leq(C, M));
                    if (ns_leq(A, C) && ns_leq(B, C)) CHECK(ns_leq(J, C));
                }
            }
    }
}
