#pragma once

#include <cstdint>
#include <string>

namespace twistcong {

// Congruence of the additive monoid of naturals: either the trivial one or
// arith(m, d) = pairs that agree, or both reach m and differ by a multiple
// of d. arith(m, 1) identifies the whole tail from m.
struct NatCong {
    bool triv = true;
    std::int64_t m = 0;
    std::int64_t d = 1;

    static NatCong trivial() { return NatCong{true, 0, 1}; }
    static NatCong arith(std::int64_t m, std::int64_t d);
    static NatCong universal() { return arith(0, 1); }

    bool operator==(const NatCong&) const = default;
};

bool nc_contains(const NatCong& c, std::int64_t i, std::int64_t j);
// Refinement order: trivial below every arith; arith(m1,d1) <= arith(m2,d2)
// iff m1 >= m2 and d2 | d1.
bool nc_leq(const NatCong& a, const NatCong& b);
NatCong nc_meet(const NatCong& a, const NatCong& b);
NatCong nc_join(const NatCong& a, const NatCong& b);

std::string nc_to_string(const NatCong& c);

}  // namespace twistcong
