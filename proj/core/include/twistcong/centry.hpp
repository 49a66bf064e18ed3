#pragma once

#include <cstdint>
#include <string>

#include "twistcong/partition.hpp"

namespace twistcong {

// Cell label of a congruence matrix. Rows 0 and 1 use the diagram labels
// (everything except N); rows q >= 2 use D, N-labels over S_q, and R.
enum class Sym : std::uint8_t { del, mu_up, mu_down, mu, lam, rho, R, N };

struct CEntry {
    Sym sym = Sym::del;
    // Group part, meaningful only when sym == N; the degree is the row index.
    NSLabel nlabel = NSLabel::trivial;

    bool operator==(const CEntry&) const = default;
};

inline CEntry ce(Sym s) { return CEntry{s, NSLabel::trivial}; }
inline CEntry ce_n(NSLabel l) { return CEntry{Sym::N, l}; }

// Whether the label may appear at all in row q (n-independent part).
bool centry_allowed(const CEntry& e, int q);

// The per-row label order: rows 0,1 form the double diamond
// D < mu_up, mu_down < mu < lam, rho < R; rows q >= 2 form the chain
// D < N-labels ascending < R.
bool leqC(const CEntry& a, const CEntry& b, int q);
CEntry joinC(const CEntry& a, const CEntry& b, int q);
CEntry meetC(const CEntry& a, const CEntry& b, int q);

// Entry strings: "D", "mu_up", "mu_down", "mu", "lam", "rho", "R",
// "N:S2", "N:A3", "N:K4", ...
std::string centry_to_string(const CEntry& e, int q);
CEntry centry_from_string(const std::string& s, int q);

}  // namespace twistcong
