#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcong/centry.hpp"
#include "twistcong/twisted.hpp"

namespace twistcong {

// Label matrix describing one congruence of the d-quotient: rows 0..n bottom
// up, columns 0..d. Valid matrices are in bijection with the congruences.
struct FCMatrix {
    int n = 0;
    int d = 0;
    // grid[q][i], q = rank row, i = counter column.
    std::vector<std::vector<CEntry>> grid;

    CEntry& at(int q, int i) { return grid[q][i]; }
    const CEntry& at(int q, int i) const { return grid[q][i]; }

    bool operator==(const FCMatrix&) const = default;
};

FCMatrix fc_blank(int n, int d);  // all Delta
FCMatrix fc_delta(int n, int d);  // trivial congruence (same as blank)
FCMatrix fc_universal(int n, int d);
// Unique atom: identifies the top-counter rank-0 class with Zero.
FCMatrix fc_atom(int n, int d);
// Unique coatom: everything except a residual symmetric group at the top.
FCMatrix fc_coatom(int n, int d);
// Rees congruence of the ideal spanned by the given (rank, counter) corners.
FCMatrix fc_rees(int n, int d, const std::vector<GridIndex>& corners);

// Shape of rows 0 and 1 together.
//   aligned: both rows turn R at column k.
//   mu_run:  contiguous matched-mu band from i, row 0 turns R at k.
//   stagger: row 0 turns R at k, row 1 holds a single slot entry before l.
//   lone_mu: isolated matched mu pair at distance l-k >= 2.
enum class LowKind { aligned, mu_run, stagger, lone_mu };

struct LowShape {
    LowKind kind = LowKind::aligned;
    int i = 0;  // mu band start (mu_run)
    int k = 0;  // row 0 R start
    int l = 0;  // row 1 R start (stagger/lone_mu)
    CEntry zeta = ce(Sym::del);
};

// Shape of a single row q >= 2: leading Deltas, a weakly increasing run of
// group labels, then R.
struct HighShape {
    int start = 0;   // first group cell
    int rstart = 0;  // first R cell (d+1 if none)
    std::vector<NSLabel> labels;
};

std::optional<LowShape> classify_low(const FCMatrix& m);
std::optional<HighShape> classify_high(const FCMatrix& m, int q);

// Empty result means valid. Degree 1 monoids additionally reject the shapes
// that would duplicate another matrix's congruence (no directional labels,
// no unmatched plain mu).
std::vector<std::string> validate_fc(const FCMatrix& m);
bool fc_valid(const FCMatrix& m);

// First R column of row q (0 or 1), d+1 if the row has no R.
int fc_min(const FCMatrix& m, int q);

// Membership of a pair in the congruence described by m.
bool fcg_contains(const FCMatrix& m, const TwistedElement& a, const TwistedElement& b);

// Inclusion of congruences (not just the entrywise label order).
bool fcong_leq(const FCMatrix& a, const FCMatrix& b);

// All valid matrices for (n, d) in a fixed deterministic order. Throws when
// the count would exceed cap.
std::vector<FCMatrix> enumerate_fc(int n, int d, std::int64_t cap = 10000000);

// Principal congruence of a pair of elements of the d-quotient.
FCMatrix principal_fc(const TwistedElement& a, const TwistedElement& b, int n, int d);

// Matched mu cells: ((0,i),(1,j)) pairs whose classes join across ranks.
std::vector<std::pair<GridIndex, GridIndex>> matched_pairs(const FCMatrix& m);

FCMatrix fc_meet(const FCMatrix& a, const FCMatrix& b);
FCMatrix fc_join(const FCMatrix& a, const FCMatrix& b);

// Small generating set for the congruence of m: pairs whose principal
// congruences join to cg(m). At most ceil(5n/2) pairs.
std::vector<std::pair<TwistedElement, TwistedElement>> fc_generating_set(const FCMatrix& m);

std::string fc_to_string(const FCMatrix& m);

}  // namespace twistcong
