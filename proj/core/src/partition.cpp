#include "twistcong/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twistcong {

namespace {

// Rank of a point in the order 1 < 2 < ... < n < 1' < 2' < ... < n'.
int point_key(int p, int n) {
    return p > 0 ? p - 1 : n + (-p) - 1;
}

void canonicalize_blocks(int n, std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end(),
                  [n](int x, int y) { return point_key(x, n) < point_key(y, n); });
    }
    std::sort(blocks.begin(), blocks.end(),
              [n](const std::vector<int>& x, const std::vector<int>& y) {
                  return point_key(x.front(), n) < point_key(y.front(), n);
              });
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int m) : parent(m) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[y] = x;
    }
};

}  // namespace

bool partition_less(const Partition& a, const Partition& b) {
    if (a.n != b.n) return a.n < b.n;
    const int n = a.n;
    const size_t na = a.blocks.size(), nb = b.blocks.size();
    for (size_t i = 0; i < na && i < nb; ++i) {
        const auto& x = a.blocks[i];
        const auto& y = b.blocks[i];
        const size_t sx = x.size(), sy = y.size();
        for (size_t j = 0; j < sx && j < sy; ++j) {
            const int kx = point_key(x[j], n), ky = point_key(y[j], n);
            if (kx != ky) return kx < ky;
        }
        if (sx != sy) return sx < sy;
    }
    return na < nb;
}

Partition make_partition(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw std::invalid_argument("make_partition: negative n");
    std::vector<int> seen(2 * n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("make_partition: empty block");
        for (int p : b) {
            if (p == 0 || p > n || p < -n)
                throw std::invalid_argument("make_partition: point out of range: " +
                                            std::to_string(p));
            if (seen[point_key(p, n)]++)
                throw std::invalid_argument("make_partition: repeated point: " +
                                            std::to_string(p));
        }
    }
    for (int k = 0; k < 2 * n; ++k)
        if (!seen[k])
            throw std::invalid_argument("make_partition: missing point");
    canonicalize_blocks(n, blocks);
    return Partition{n, std::move(blocks)};
}

std::pair<Partition, int> multiply(const Partition& a, const Partition& b) {
    if (a.n != b.n) throw std::invalid_argument("multiply: mixed degrees");
    const int n = a.n;
    // Three-row picture: vertices 0..n-1 top, n..2n-1 middle, 2n..3n-1 bottom.
    // a joins top to middle, b joins middle to bottom.
    UnionFind uf(3 * n);
    for (const auto& blk : a.blocks) {
        const int anchor = blk[0] > 0 ? blk[0] - 1 : n + (-blk[0]) - 1;
        for (int p : blk) uf.unite(anchor, p > 0 ? p - 1 : n + (-p) - 1);
    }
    for (const auto& blk : b.blocks) {
        const int anchor = blk[0] > 0 ? n + blk[0] - 1 : 2 * n + (-blk[0]) - 1;
        for (int p : blk) uf.unite(anchor, p > 0 ? n + p - 1 : 2 * n + (-p) - 1);
    }

    std::vector<std::vector<int>> comp(3 * n);
    for (int v = 0; v < 3 * n; ++v) comp[uf.find(v)].push_back(v);

    std::vector<std::vector<int>> blocks;
    int floating = 0;
    for (int r = 0; r < 3 * n; ++r) {
        if (comp[r].empty()) continue;
        std::vector<int> blk;
        bool touches_mid = false;
        for (int v : comp[r]) {
            if (v < n) blk.push_back(v + 1);
            else if (v < 2 * n) touches_mid = true;
            else blk.push_back(-(v - 2 * n + 1));
        }
        if (blk.empty()) {
            // Component wholly inside the middle row.
            if (touches_mid) ++floating;
        } else {
            blocks.push_back(std::move(blk));
        }
    }
    canonicalize_blocks(n, blocks);
    return {Partition{n, std::move(blocks)}, floating};
}

int rank(const Partition& a) {
    int q = 0;
    for (const auto& b : a.blocks) {
        // Canonical blocks start with uppers; a transversal has an upper
        // first element and a lower last element.
        if (b.front() > 0 && b.back() < 0) ++q;
    }
    return q;
}

Partition hat(const Partition& a) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : a.blocks) {
        std::vector<int> up, low;
        for (int p : b) (p > 0 ? up : low).push_back(p);
        if (!up.empty() && !low.empty()) {
            blocks.push_back(std::move(up));
            blocks.push_back(std::move(low));
        } else {
            blocks.push_back(b);
        }
    }
    canonicalize_blocks(a.n, blocks);
    return Partition{a.n, std::move(blocks)};
}

std::vector<int> dom(const Partition& a) {
    std::vector<int> out;
    for (const auto& b : a.blocks)
        if (b.front() > 0 && b.back() < 0)
            for (int p : b)
                if (p > 0) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> codom(const Partition& a) {
    std::vector<int> out;
    for (const auto& b : a.blocks)
        if (b.front() > 0 && b.back() < 0)
            for (int p : b)
                if (p < 0) out.push_back(-p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> ker(const Partition& a) {
    std::vector<std::vector<int>> out;
    for (const auto& b : a.blocks) {
        std::vector<int> up;
        for (int p : b)
            if (p > 0) up.push_back(p);
        if (!up.empty()) out.push_back(std::move(up));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> coker(const Partition& a) {
    std::vector<std::vector<int>> out;
    for (const auto& b : a.blocks) {
        std::vector<int> low;
        for (int p : b)
            if (p < 0) low.push_back(-p);
        if (!low.empty()) {
            std::sort(low.begin(), low.end());
            out.push_back(std::move(low));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool green(Green rel, const Partition& a, const Partition& b) {
    if (a.n != b.n) throw std::invalid_argument("green: mixed degrees");
    switch (rel) {
        case Green::R:
            return dom(a) == dom(b) && ker(a) == ker(b);
        case Green::L:
            return codom(a) == codom(b) && coker(a) == coker(b);
        case Green::H:
            return green(Green::R, a, b) && green(Green::L, a, b);
        case Green::D:
            return rank(a) == rank(b);
    }
    return false;
}

Permutation perm_identity(int q) {
    Permutation p{q, std::vector<int>(q)};
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool perm_is_identity(const Permutation& p) {
    for (int i = 0; i < p.q; ++i)
        if (p.img[i] != i) return false;
    return true;
}

std::vector<int> perm_cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.q, false);
    std::vector<int> type;
    for (int i = 0; i < p.q; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p.img[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

bool perm_even(const Permutation& p) {
    int transpositions = 0;
    for (int len : perm_cycle_type(p)) transpositions += len - 1;
    return transpositions % 2 == 0;
}

Permutation perm_inverse(const Permutation& p) {
    Permutation r{p.q, std::vector<int>(p.q)};
    for (int i = 0; i < p.q; ++i) r.img[p.img[i]] = i;
    return r;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
    if (a.q != b.q) throw std::invalid_argument("perm_compose: mixed degrees");
    Permutation r{a.q, std::vector<int>(a.q)};
    for (int i = 0; i < a.q; ++i) r.img[i] = b.img[a.img[i]];
    return r;
}

Permutation pd(const Partition& a, const Partition& b) {
    if (!green(Green::H, a, b)) throw std::invalid_argument("pd: arguments not H-related");
    // Transversals listed by least upper point. H-related diagrams share the
    // family of upper parts and the family of lower parts.
    auto transversals = [](const Partition& x) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> ts;
        for (const auto& blk : x.blocks) {
            if (!(blk.front() > 0 && blk.back() < 0)) continue;
            std::vector<int> up, low;
            for (int p : blk) (p > 0 ? up : low).push_back(p);
            std::sort(low.begin(), low.end());
            ts.emplace_back(std::move(up), std::move(low));
        }
        std::sort(ts.begin(), ts.end(),
                  [](const auto& s, const auto& t) { return s.first.front() < t.first.front(); });
        return ts;
    };
    auto ta = transversals(a);
    auto tb = transversals(b);
    const int q = static_cast<int>(ta.size());
    Permutation p{q, std::vector<int>(q)};
    for (int i = 0; i < q; ++i) {
        int j = 0;
        while (j < q && ta[j].second != tb[i].second) ++j;
        p.img[i] = j;
    }
    return p;
}

bool ns_valid(const NormalSubgroup& N) {
    switch (N.label) {
        case NSLabel::trivial: return N.q >= 0;
        case NSLabel::klein4: return N.q == 4;
        case NSLabel::alternating: return N.q >= 3;
        case NSLabel::full: return N.q >= 2;
    }
    return false;
}

bool ns_nontrivial(const NormalSubgroup& N) {
    return N.label != NSLabel::trivial;
}

namespace {
int ns_rank(NSLabel l) {
    switch (l) {
        case NSLabel::trivial: return 0;
        case NSLabel::klein4: return 1;
        case NSLabel::alternating: return 2;
        case NSLabel::full: return 3;
    }
    return 0;
}
}  // namespace

bool ns_leq(const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.q != b.q) throw std::invalid_argument("ns_leq: mixed degrees");
    return ns_rank(a.label) <= ns_rank(b.label);
}

NormalSubgroup ns_meet(const NormalSubgroup& a, const NormalSubgroup& b) {
    return ns_leq(a, b) ? a : b;
}

NormalSubgroup ns_join(const NormalSubgroup& a, const NormalSubgroup& b) {
    return ns_leq(a, b) ? b : a;
}

std::vector<NormalSubgroup> ns_nontrivial_chain(int q) {
    std::vector<NormalSubgroup> out;
    if (q == 4) out.push_back({4, NSLabel::klein4});
    if (q >= 3) out.push_back({q, NSLabel::alternating});
    if (q >= 2) out.push_back({q, NSLabel::full});
    return out;
}

NormalSubgroup normal_closure(const Permutation& p) {
    if (perm_is_identity(p)) return {p.q, NSLabel::trivial};
    if (p.q == 4) {
        auto ct = perm_cycle_type(p);
        if (ct == std::vector<int>{2, 2}) return {4, NSLabel::klein4};
    }
    if (perm_even(p)) return {p.q, NSLabel::alternating};
    return {p.q, NSLabel::full};
}

bool subgroup_contains(const NormalSubgroup& N, const Permutation& p) {
    if (N.q != p.q) throw std::invalid_argument("subgroup_contains: mixed degrees");
    switch (N.label) {
        case NSLabel::trivial: return perm_is_identity(p);
        case NSLabel::klein4:
            return perm_is_identity(p) || perm_cycle_type(p) == std::vector<int>{2, 2};
        case NSLabel::alternating: return perm_even(p);
        case NSLabel::full: return true;
    }
    return false;
}

std::vector<Partition> all_diagrams(int n) {
    // Restricted growth strings over the 2n points in canonical order.
    std::vector<Partition> out;
    const int m = 2 * n;
    std::vector<int> assign(m, 0);
    auto emit = [&]() {
        int nblocks = 0;
        for (int v : assign) nblocks = std::max(nblocks, v + 1);
        std::vector<std::vector<int>> blocks(nblocks);
        for (int k = 0; k < m; ++k) {
            const int point = k < n ? k + 1 : -(k - n + 1);
            blocks[assign[k]].push_back(point);
        }
        out.push_back(Partition{n, std::move(blocks)});
    };
    if (m == 0) {
        out.push_back(Partition{0, {}});
        return out;
    }
    // Depth-first sweep; assign[k] <= 1 + max of the prefix.
    std::vector<int> maxpfx(m, 0);
    int k = 0;
    assign[0] = 0;
    maxpfx[0] = 0;
    while (true) {
        if (k == m - 1) {
            emit();
            while (k >= 0) {
                const int cap = k == 0 ? 0 : maxpfx[k - 1] + 1;
                if (assign[k] < cap) {
                    ++assign[k];
                    maxpfx[k] = std::max(k == 0 ? 0 : maxpfx[k - 1], assign[k]);
                    break;
                }
                --k;
            }
            if (k < 0) break;
        } else {
            ++k;
            assign[k] = 0;
            maxpfx[k] = maxpfx[k - 1];
        }
    }
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

std::vector<Permutation> all_permutations(int q) {
    std::vector<Permutation> out;
    std::vector<int> img(q);
    std::iota(img.begin(), img.end(), 0);
    do {
        out.push_back(Permutation{q, img});
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace twistcong
