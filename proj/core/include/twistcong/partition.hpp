#pragma once

#include <utility>
#include <vector>

namespace twistcong {

// Set partition of the 2n points {1..n, 1'..n'}.
// Points are encoded as signed ints: +k is k (upper row), -k is k' (lower row).
// Blocks are kept canonical: within a block, upper points ascending then lower
// points ascending; blocks ordered by their least point (uppers before lowers).
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const Partition&) const = default;
};

// Total order consistent with the canonical block form. Used for dedup,
// map keys and the deterministic element order of enumerations.
bool partition_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_less(a, b);
    }
};

// Validates and canonicalizes. Throws std::invalid_argument unless the blocks
// cover {+-1..+-n} exactly once with no stray points.
Partition make_partition(int n, std::vector<std::vector<int>> blocks);

// Diagram product together with the floating-block count of the stacked
// picture: the number of connected components contained entirely in the
// middle row when a is drawn on top of b.
std::pair<Partition, int> multiply(const Partition& a, const Partition& b);

// Number of transversal blocks (blocks meeting both rows).
int rank(const Partition& a);

// Splits every transversal block into its upper and lower half.
Partition hat(const Partition& a);

// Upper-row data: dom(a) = upper points lying in transversals, ker(a) = the
// induced partition of {1..n}. Lower-row duals use absolute point values.
std::vector<int> dom(const Partition& a);
std::vector<int> codom(const Partition& a);
std::vector<std::vector<int>> ker(const Partition& a);
std::vector<std::vector<int>> coker(const Partition& a);

enum class Green { R, L, H, D };

// Green's relations: R iff same dom and ker, L iff same codom and coker,
// H = R and L, D iff equal rank.
bool green(Green rel, const Partition& a, const Partition& b);

// Permutation of {0..q-1}, image form.
struct Permutation {
    int q = 0;
    std::vector<int> img;

    bool operator==(const Permutation&) const = default;
};

Permutation perm_identity(int q);
bool perm_is_identity(const Permutation& p);
bool perm_even(const Permutation& p);
// Cycle type, descending.
std::vector<int> perm_cycle_type(const Permutation& p);
Permutation perm_inverse(const Permutation& p);
Permutation perm_compose(const Permutation& a, const Permutation& b);

// Permutational difference of an H-related pair: transversals of both
// diagrams are listed by least upper point; position i maps to the position
// of a's transversal whose lower part equals that of b's i-th transversal.
// Only ever consumed up to conjugacy and inversion. Throws unless a H b.
Permutation pd(const Partition& a, const Partition& b);

enum class NSLabel { trivial, klein4, alternating, full };

// Normal subgroup of S_q, restricted to the ones that are normal for every q:
// 1, K4 (q = 4 only), A_q, S_q.
struct NormalSubgroup {
    int q = 0;
    NSLabel label = NSLabel::trivial;

    bool operator==(const NormalSubgroup&) const = default;
};

bool ns_valid(const NormalSubgroup& N);
bool ns_nontrivial(const NormalSubgroup& N);
// Containment; both arguments must have the same degree.
bool ns_leq(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup ns_meet(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup ns_join(const NormalSubgroup& a, const NormalSubgroup& b);
// All nontrivial normal subgroups of S_q, ascending.
std::vector<NormalSubgroup> ns_nontrivial_chain(int q);

// Smallest normal subgroup of S_q containing p.
NormalSubgroup normal_closure(const Permutation& p);
bool subgroup_contains(const NormalSubgroup& N, const Permutation& p);

// Every diagram of P_n, in canonical order. Size is Bell(2n); intended for
// small n (exhaustive tests and brute-force lattices).
std::vector<Partition> all_diagrams(int n);

// All permutations of {0..q-1} in lexicographic order.
std::vector<Permutation> all_permutations(int q);

}  // namespace twistcong
