#include "twistcong/natcong.hpp"

#include <numeric>
#include <stdexcept>

namespace twistcong {

NatCong NatCong::arith(std::int64_t m, std::int64_t d) {
    if (m < 0 || d < 1) throw std::invalid_argument("NatCong::arith: need m >= 0, d >= 1");
    return NatCong{false, m, d};
}

bool nc_contains(const NatCong& c, std::int64_t i, std::int64_t j) {
    if (i < 0 || j < 0) throw std::invalid_argument("nc_contains: negative argument");
    if (i == j) return true;
    if (c.triv) return false;
    return i >= c.m && j >= c.m && (i - j) % c.d == 0;
}

bool nc_leq(const NatCong& a, const NatCong& b) {
    if (a.triv) return true;
    if (b.triv) return false;
    return a.m >= b.m && a.d % b.d == 0;
}

NatCong nc_meet(const NatCong& a, const NatCong& b) {
    if (a.triv || b.triv) return NatCong::trivial();
    return NatCong::arith(std::max(a.m, b.m), std::lcm(a.d, b.d));
}

NatCong nc_join(const NatCong& a, const NatCong& b) {
    if (a.triv) return b;
    if (b.triv) return a;
    return NatCong::arith(std::min(a.m, b.m), std::gcd(a.d, b.d));
}

std::string nc_to_string(const NatCong& c) {
    if (c.triv) return "trivial";
    return "(" + std::to_string(c.m) + "," + std::to_string(c.m + c.d) + ")#";
}

}  // namespace twistcong
