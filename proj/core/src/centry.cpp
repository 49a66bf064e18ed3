#include "twistcong/centry.hpp"

#include <stdexcept>

namespace twistcong {

namespace {

// Index into the low-row order tables.
int low_index(Sym s) {
    switch (s) {
        case Sym::del: return 0;
        case Sym::mu_up: return 1;
        case Sym::mu_down: return 2;
        case Sym::mu: return 3;
        case Sym::lam: return 4;
        case Sym::rho: return 5;
        case Sym::R: return 6;
        default: throw std::invalid_argument("low_index: N label in a low row");
    }
}

// leq[a][b] for the double diamond D < mu_up,mu_down < mu < lam,rho < R.
constexpr bool kLowLeq[7][7] = {
    // D    up   down mu   lam  rho  R
    {true, true, true, true, true, true, true},       // D
    {false, true, false, true, true, true, true},     // mu_up
    {false, false, true, true, true, true, true},     // mu_down
    {false, false, false, true, true, true, true},    // mu
    {false, false, false, false, true, false, true},  // lam
    {false, false, false, false, false, true, true},  // rho
    {false, false, false, false, false, false, true}, // R
};

// Chain position in a high row: D < K4 < A_q < S_q < R.
int high_rank(const CEntry& e) {
    if (e.sym == Sym::del) return 0;
    if (e.sym == Sym::R) return 4;
    if (e.sym != Sym::N) throw std::invalid_argument("high_rank: diagram label in a high row");
    switch (e.nlabel) {
        case NSLabel::klein4: return 1;
        case NSLabel::alternating: return 2;
        case NSLabel::full: return 3;
        case NSLabel::trivial: return 0;
    }
    return 0;
}

Sym low_sym(int idx) {
    static constexpr Sym syms[7] = {Sym::del,  Sym::mu_up, Sym::mu_down, Sym::mu,
                                    Sym::lam, Sym::rho,   Sym::R};
    return syms[idx];
}

}  // namespace

bool centry_allowed(const CEntry& e, int q) {
    if (q <= 1) return e.sym != Sym::N;
    if (e.sym == Sym::N)
        return ns_nontrivial(NormalSubgroup{q, e.nlabel}) &&
               ns_valid(NormalSubgroup{q, e.nlabel});
    return e.sym == Sym::del || e.sym == Sym::R;
}

bool leqC(const CEntry& a, const CEntry& b, int q) {
    if (q <= 1) return kLowLeq[low_index(a.sym)][low_index(b.sym)];
    return high_rank(a) <= high_rank(b);
}

CEntry joinC(const CEntry& a, const CEntry& b, int q) {
    if (q >= 2) return high_rank(a) >= high_rank(b) ? a : b;
    if (leqC(a, b, q)) return b;
    if (leqC(b, a, q)) return a;
    // Incomparable pairs: the two diamonds.
    const int ia = low_index(a.sym), ib = low_index(b.sym);
    if ((ia == 1 && ib == 2) || (ia == 2 && ib == 1)) return ce(Sym::mu);
    return ce(Sym::R);  // lam vs rho
}

CEntry meetC(const CEntry& a, const CEntry& b, int q) {
    if (q >= 2) return high_rank(a) <= high_rank(b) ? a : b;
    if (leqC(a, b, q)) return a;
    if (leqC(b, a, q)) return b;
    const int ia = low_index(a.sym), ib = low_index(b.sym);
    if ((ia == 1 && ib == 2) || (ia == 2 && ib == 1)) return ce(Sym::del);
    return ce(Sym::mu);  // lam vs rho
}

std::string centry_to_string(const CEntry& e, int q) {
    switch (e.sym) {
        case Sym::del: return "D";
        case Sym::mu_up: return "mu_up";
        case Sym::mu_down: return "mu_down";
        case Sym::mu: return "mu";
        case Sym::lam: return "lam";
        case Sym::rho: return "rho";
        case Sym::R: return "R";
        case Sym::N:
            switch (e.nlabel) {
                case NSLabel::klein4: return "N:K4";
                case NSLabel::alternating: return "N:A" + std::to_string(q);
                case NSLabel::full: return "N:S" + std::to_string(q);
                case NSLabel::trivial: break;
            }
            throw std::invalid_argument("centry_to_string: trivial N label");
    }
    throw std::invalid_argument("centry_to_string: bad label");
}

CEntry centry_from_string(const std::string& s, int q) {
    if (s == "D") return ce(Sym::del);
    if (s == "mu_up") return ce(Sym::mu_up);
    if (s == "mu_down") return ce(Sym::mu_down);
    if (s == "mu") return ce(Sym::mu);
    if (s == "lam") return ce(Sym::lam);
    if (s == "rho") return ce(Sym::rho);
    if (s == "R") return ce(Sym::R);
    if (s.size() >= 4 && s[0] == 'N' && s[1] == ':') {
        const char kind = s[2];
        const int deg = std::stoi(s.substr(3));
        if (deg != q)
            throw std::invalid_argument("centry_from_string: degree " + s.substr(3) +
                                        " does not match row " + std::to_string(q));
        if (kind == 'K' && deg == 4) return ce_n(NSLabel::klein4);
        if (kind == 'A') return ce_n(NSLabel::alternating);
        if (kind == 'S') return ce_n(NSLabel::full);
    }
    throw std::invalid_argument("centry_from_string: unknown label: " + s);
}

}  // namespace twistcong
