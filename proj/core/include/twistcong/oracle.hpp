#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twistcong/fcmatrix.hpp"
#include "twistcong/twisted.hpp"

namespace twistcong {

// Explicitly materialized finite monoid with its full product table. Elements
// are in canonical order (counters ascending, diagrams in canonical order,
// Zero last), so indices are stable across runs.
struct FiniteMonoid {
    int n = 0;
    std::int64_t d = 0;
    std::vector<TwistedElement> elems;
    std::vector<int> mul;  // row-major size() x size()

    int size() const { return static_cast<int>(elems.size()); }
    int prod(int x, int y) const {
        return mul[static_cast<std::size_t>(x) * elems.size() + static_cast<std::size_t>(y)];
    }
    int index_of(const TwistedElement& e) const;
};

FiniteMonoid build_monoid(int n, std::int64_t d, std::int64_t cap = 2500);

// A congruence held extensionally: cls[x] is x's class id. Ids are dense and
// ordered by each class's least element, which makes equality structural.
struct ExtCong {
    std::vector<int> cls;

    bool related(int x, int y) const { return cls[x] == cls[y]; }
    int classes() const;
    bool operator==(const ExtCong&) const = default;
    bool operator<(const ExtCong& o) const { return cls < o.cls; }
};

ExtCong ext_diagonal(const FiniteMonoid& m);
ExtCong ext_universal(const FiniteMonoid& m);

// Least congruence containing the seed pairs (indices into m.elems):
// pair-expansion closure under left and right multiplication.
ExtCong congruence_closure(const FiniteMonoid& m, const std::vector<std::pair<int, int>>& seeds);

// Refinement order, intersection, and join (= closure of the union).
bool ext_leq(const ExtCong& a, const ExtCong& b);
ExtCong ext_meet(const ExtCong& a, const ExtCong& b);
ExtCong ext_join(const FiniteMonoid& m, const ExtCong& a, const ExtCong& b);

// Compatibility invariant: one-sided multiplications preserve classes.
bool ext_compatible(const FiniteMonoid& m, const ExtCong& c);

// The full congruence set: principal closures plus pairwise joins to a
// fixpoint. Sorted coarsest-last (by descending class count, then class map).
std::vector<ExtCong> all_congruences(const FiniteMonoid& m);

// Member set of a symbolic matrix over m's element order.
ExtCong ext_of_matrix(const FiniteMonoid& m, const FCMatrix& mat);

// The unique matrix with the same member set, found by per-cell label
// extraction and verified by re-expansion. Throws std::runtime_error if the
// extraction does not re-expand to c.
FCMatrix match_to_fc(const FiniteMonoid& m, const ExtCong& c);

// Relational composition x (r1 o r2) y iff exists z with x r1 z and z r2 y.
// compose3_equal decides s o t o s == t o s o t.
bool compose3_equal(const ExtCong& s, const ExtCong& t);
bool compose_contains(const std::vector<ExtCong>& chain, int x, int y);

}  // namespace twistcong
