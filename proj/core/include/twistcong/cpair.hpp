#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcong/centry.hpp"
#include "twistcong/natcong.hpp"
#include "twistcong/twisted.hpp"

namespace twistcong {

// One row of a congruence matrix over the infinite monoid: an explicit finite
// prefix followed by a repeated limit entry. Canonical form keeps no trailing
// copies of the limit inside the prefix.
struct CRow {
    std::vector<CEntry> prefix;
    CEntry limit = ce(Sym::del);

    bool operator==(const CRow&) const = default;
};

CEntry crow_at(const CRow& r, std::int64_t i);
CRow crow_canonical(CRow r);
CRow crow_all(CEntry limit);
// lead repeated k times, then tail forever.
CRow crow_tail(CEntry lead, std::int64_t k, CEntry tail);

// Chain-and-matrix description of a congruence of the infinite monoid:
// theta[q] relates counters inside rank q, rows[q] labels the classes.
struct CPair {
    int n = 0;
    std::vector<NatCong> theta;  // theta[0..n]
    std::vector<CRow> rows;      // rows[0..n], row 0 at the bottom

    bool operator==(const CPair&) const = default;
};

CEntry cpair_at(const CPair& p, int q, std::int64_t i);

// A congruence symbolically: the pair read plainly, or through the extension
// clause that also glues odd-difference classes in the exceptional row.
struct CCong {
    CPair pair;
    bool exceptional = false;

    bool operator==(const CCong&) const = default;
};

CPair cpair_delta(int n);
CPair cpair_universal(int n);

// Joint shape of rows 0 and 1 (row types of the bottom two rows).
//   t1: both rows all-Delta.
//   t2: matched mu tails from i with a slot entry zeta at (1,i); thetas trivial.
//   t3: row 1 all-Delta, row 0 = Delta^m xi^inf, theta_0 = (m,m+1)#.
//   t4: both rows Delta^m xi^inf, theta_0 = theta_1 = (m,m+d)#.
//   t5: mu band from i to the tails, zeta at (1,i), tails xi from m / m+1.
//   t6: row 0 tail from m, row 1 tail from l > m with slot zeta at (1,l-1).
//   t7: lone mu at (0,m-1) and (1,l-1) with tails xi from m / l, m < l-1.
enum class LowType { t1, t2, t3, t4, t5, t6, t7 };

struct LowParams {
    LowType type = LowType::t1;
    std::int64_t i = 0;  // leading Deltas (t2, t5)
    std::int64_t m = 0;  // row-0 tail start = min theta_0 (t3..t7)
    std::int64_t l = 0;  // row-1 tail start (t6, t7)
    std::int64_t d = 1;  // shared period of theta_0, theta_1 (t4..t7)
    CEntry zeta = ce(Sym::del);
    CEntry xi = ce(Sym::del);
};

// Deterministic recognizer for rows 0-1 plus theta_0, theta_1. Empty result
// means the bottom block matches no row type.
std::optional<LowParams> classify_low_rows(const CPair& p);

// Rewrites a pair into the canonical representative of its congruence:
// trims rows, and for degree 1 applies the label collapses (directional mus
// read as Delta, lam/rho as R) plus the tail rewrites that remove duplicate
// presentations (dead slot mu, period-1 mu tails, all-Delta with collapsing
// theta_0).
CPair canonical_cpair(CPair p);

// Empty result means valid; entries name the row, column and failed clause.
std::vector<std::string> validate_cpair(const CPair& p);
bool cpair_valid(const CPair& p);

// The unique row q >= 2 whose theta has even period and whose labels admit
// the extension clause, if any.
std::optional<int> exceptional_row(const CPair& p);

// Membership of a concrete element pair, by the clause list (C1)-(C8).
bool cg_contains(const CPair& p, const TwistedElement& a, const TwistedElement& b);
// Same plus the exceptional clause (C9); rejects non-exceptional pairs.
bool cgx_contains(const CPair& p, const TwistedElement& a, const TwistedElement& b);
bool ccong_contains(const CCong& c, const TwistedElement& a, const TwistedElement& b);

// Inclusion order on congruences (not merely the entrywise label order):
// entrywise comparison plus the mu-anchor matching rule for types t2/t5/t7,
// the doubled-period divisibility when an exceptional congruence sits below
// a plain one, and the odd-ratio rule between two exceptional ones.
bool cong_leq(const CCong& s1, const CCong& s2);

// Congruence generated by one ordered pair of elements, as a symbolic pair.
CCong principal_cpair(const TwistedElement& a, const TwistedElement& b);

// Generating pairs for the congruence: ideal corners two at a time, counter
// fixers per rank, bottom-row type fixers, and one fixer per distinct group
// label. At most ceil(5n/2) pairs; every pair is a member, and exceptional
// congruences get a witness outside the plain reading.
std::vector<std::pair<TwistedElement, TwistedElement>> generating_set(const CCong& s);

enum class GenCheck { verified, inconclusive };

// Sound-but-incomplete certificate: all pairs are members (with an outside
// witness when exceptional), and the entrywise supremum of their principal
// pairs dominates s. Full equality checking lives with the finite quotients.
GenCheck verify_generators(const CCong& s,
                           const std::vector<std::pair<TwistedElement, TwistedElement>>& omega);

// A congruence strictly between the trivial one and s; rejects the trivial
// congruence. Witness that the lattice has no atoms.
CCong strictly_smaller(const CCong& s);

// Member l >= 2 of the infinite antichain, over degree n >= 2.
CPair antichain_member(std::int64_t l, int n = 2);

// The unique maximal proper congruence.
CPair coatom(int n);

std::string cpair_to_string(const CPair& p);

}  // namespace twistcong
