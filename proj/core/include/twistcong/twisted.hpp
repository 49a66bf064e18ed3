#pragma once

#include <cstdint>
#include <vector>

#include "twistcong/partition.hpp"

namespace twistcong {

// Element of the twisted monoid over P_n: a pair (i, alpha) with i a natural
// counter, or the absorbing Zero that only the finite quotients have.
struct TwistedElement {
    bool is_zero = false;
    int n = 0;
    std::int64_t i = 0;
    Partition alpha;

    static TwistedElement pair(std::int64_t i, Partition alpha);
    static TwistedElement zero(int n);

    bool operator==(const TwistedElement&) const = default;
};

bool twisted_less(const TwistedElement& a, const TwistedElement& b);

// (i, a)(j, b) = (i + j + floating(a, b), ab); undefined for Zero.
TwistedElement t_mul_infinite(const TwistedElement& a, const TwistedElement& b);

// Same product in the quotient with counters capped at d: any product whose
// counter would exceed d collapses to Zero, and Zero absorbs.
TwistedElement t_mul_d(const TwistedElement& a, const TwistedElement& b, std::int64_t d);

// Green's relations: counters must agree and the diagrams must be related.
// Zero is related only to itself.
bool t_green(Green rel, const TwistedElement& a, const TwistedElement& b);

struct GridIndex {
    int q = 0;
    std::int64_t i = 0;

    bool operator==(const GridIndex&) const = default;
};

// Position of a nonzero element in the rank/counter grid.
GridIndex grid_index(const TwistedElement& a);

// Membership in the ideal spanned by corner (q, i): rank at most q, counter
// at least i. Zero lies in every finite ideal.
bool in_ideal(const TwistedElement& a, int q, std::int64_t i);

// Every element of the d-quotient including Zero, counters ascending and
// diagrams in canonical order within a counter, Zero last. Guarded by a size
// cap; intended for brute-force work at small n.
std::vector<TwistedElement> elements_of(int n, std::int64_t d, std::int64_t cap = 2500);

}  // namespace twistcong
