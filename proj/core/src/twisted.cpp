#include "twistcong/twisted.hpp"

#include <stdexcept>

namespace twistcong {

TwistedElement TwistedElement::pair(std::int64_t i, Partition alpha) {
    if (i < 0) throw std::invalid_argument("TwistedElement: negative counter");
    TwistedElement e;
    e.is_zero = false;
    e.n = alpha.n;
    e.i = i;
    e.alpha = std::move(alpha);
    return e;
}

TwistedElement TwistedElement::zero(int n) {
    TwistedElement e;
    e.is_zero = true;
    e.n = n;
    return e;
}

bool twisted_less(const TwistedElement& a, const TwistedElement& b) {
    // Zero sorts last; otherwise counter, then diagram.
    if (a.is_zero != b.is_zero) return b.is_zero;
    if (a.is_zero) return false;
    if (a.i != b.i) return a.i < b.i;
    return partition_less(a.alpha, b.alpha);
}

TwistedElement t_mul_infinite(const TwistedElement& a, const TwistedElement& b) {
    if (a.is_zero || b.is_zero)
        throw std::invalid_argument("t_mul_infinite: Zero is not an element here");
    if (a.n != b.n) throw std::invalid_argument("t_mul_infinite: mixed degrees");
    auto [prod, floating] = multiply(a.alpha, b.alpha);
    return TwistedElement::pair(a.i + b.i + floating, std::move(prod));
}

TwistedElement t_mul_d(const TwistedElement& a, const TwistedElement& b, std::int64_t d) {
    if (d < 0) throw std::invalid_argument("t_mul_d: negative d");
    if (a.n != b.n) throw std::invalid_argument("t_mul_d: mixed degrees");
    if (a.is_zero || b.is_zero) return TwistedElement::zero(a.n);
    if (a.i > d || b.i > d) throw std::invalid_argument("t_mul_d: counter beyond d");
    auto [prod, floating] = multiply(a.alpha, b.alpha);
    const std::int64_t k = a.i + b.i + floating;
    if (k > d) return TwistedElement::zero(a.n);
    return TwistedElement::pair(k, std::move(prod));
}

bool t_green(Green rel, const TwistedElement& a, const TwistedElement& b) {
    if (a.n != b.n) throw std::invalid_argument("t_green: mixed degrees");
    if (a.is_zero || b.is_zero) return a.is_zero == b.is_zero;
    return a.i == b.i && green(rel, a.alpha, b.alpha);
}

GridIndex grid_index(const TwistedElement& a) {
    if (a.is_zero) throw std::invalid_argument("grid_index: Zero has no grid position");
    return GridIndex{rank(a.alpha), a.i};
}

bool in_ideal(const TwistedElement& a, int q, std::int64_t i) {
    if (a.is_zero) return true;
    return rank(a.alpha) <= q && a.i >= i;
}

std::vector<TwistedElement> elements_of(int n, std::int64_t d, std::int64_t cap) {
    if (n < 0 || d < 0) throw std::invalid_argument("elements_of: bad parameters");
    if (n > 5)
        throw std::invalid_argument("elements_of: exhaustive listing is limited to n <= 5");
    const auto diagrams = all_diagrams(n);
    const std::int64_t total = (d + 1) * static_cast<std::int64_t>(diagrams.size()) + 1;
    if (total > cap) throw std::length_error("elements_of: size exceeds cap");
    std::vector<TwistedElement> out;
    out.reserve(static_cast<size_t>(total));
    for (std::int64_t i = 0; i <= d; ++i)
        for (const auto& a : diagrams) out.push_back(TwistedElement::pair(i, a));
    out.push_back(TwistedElement::zero(n));
    return out;
}

}  // namespace twistcong
