#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcong/fcmatrix.hpp"

namespace twistcong {

// A finite lattice with full order, cover, and operation tables. When built
// from fC-matrices, mats carries them (same indexing as names); otherwise the
// nodes are opaque.
struct FiniteLattice {
    std::vector<std::string> names;
    std::vector<FCMatrix> mats;  // empty when nodes are opaque
    std::vector<std::vector<bool>> le;
    std::vector<std::pair<int, int>> covers;  // (lower, upper), lexicographic
    std::vector<std::vector<int>> meet, join;

    int size() const { return static_cast<int>(names.size()); }
    bool leq(int a, int b) const { return le[a][b]; }
};

// Builds covers and the meet/join tables from a reflexive partial order;
// throws std::invalid_argument if some pair lacks a meet or join.
FiniteLattice lattice_from_leq(std::vector<std::string> names, std::vector<FCMatrix> mats,
                               std::vector<std::vector<bool>> le);

// Congruence lattice of the d-twisted quotient. n = 0 yields the chain of
// d+2 Rees congruences with opaque nodes.
FiniteLattice build_lattice(int n, int d, std::int64_t cap = 10000000);

// One-line node label for a matrix (rows printed top row first).
std::string fc_label(const FCMatrix& m);

int lat_bottom(const FiniteLattice& l);
int lat_top(const FiniteLattice& l);
std::vector<int> atoms(const FiniteLattice& l);
std::vector<int> coatoms(const FiniteLattice& l);
std::vector<int> covers_of(const FiniteLattice& l, int x);

// Five-element forbidden sublattices, closed under the ambient operations.
// Pentagon: {bot, a, c, b, top} with bot < a < c < top and b incomparable to
// both, a^b = c^b = bot, avb = cvb = top. Diamond: {bot, x, y, z, top} with
// the three middle elements pairwise incomparable, pairwise meets bot and
// joins top.
std::optional<std::array<int, 5>> find_pentagon(const FiniteLattice& l);
std::optional<std::array<int, 5>> find_diamond(const FiniteLattice& l);

bool is_modular(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);
bool is_upper_semimodular(const FiniteLattice& l);
bool is_lower_semimodular(const FiniteLattice& l);

// Exports. DOT is the Hasse diagram; JSON lists elements and covers; CSV
// carries the meet and join tables; the report carries the property summary.
std::string lattice_dot(const FiniteLattice& l);
std::string lattice_json(const FiniteLattice& l);
std::string lattice_csv(const FiniteLattice& l);
std::string property_report_json(const FiniteLattice& l);

}  // namespace twistcong
