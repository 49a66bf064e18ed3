#include "twistcong/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twistcong {

namespace {

// Canonical relabeling: class ids in order of first appearance.
ExtCong canonical(std::vector<int> raw) {
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    for (int& v : raw) {
        if (remap[v] == -1) remap[v] = next++;
        v = remap[v];
    }
    return ExtCong{std::move(raw)};
}

struct UF {
    std::vector<int> up;
    explicit UF(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        up[b] = a;
        return true;
    }
};

ExtCong from_uf(UF& uf) {
    std::vector<int> raw(uf.up.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = uf.find(static_cast<int>(i));
    return canonical(std::move(raw));
}

}  // namespace

int FiniteMonoid::index_of(const TwistedElement& e) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), e, twisted_less);
    if (it == elems.end() || !(*it == e))
        throw std::invalid_argument("index_of: element not in monoid");
    return static_cast<int>(it - elems.begin());
}

FiniteMonoid build_monoid(int n, std::int64_t d, std::int64_t cap) {
    FiniteMonoid m;
    m.n = n;
    m.d = d;
    m.elems = elements_of(n, d, cap);
    const int sz = m.size();
    m.mul.assign(static_cast<std::size_t>(sz) * sz, -1);
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
            m.mul[static_cast<std::size_t>(x) * sz + y] =
                m.index_of(t_mul_d(m.elems[x], m.elems[y], d));
    return m;
}

int ExtCong::classes() const {
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

ExtCong ext_diagonal(const FiniteMonoid& m) {
    std::vector<int> raw(m.size());
    std::iota(raw.begin(), raw.end(), 0);
    return ExtCong{std::move(raw)};
}

ExtCong ext_universal(const FiniteMonoid& m) {
    return ExtCong{std::vector<int>(m.size(), 0)};
}

ExtCong congruence_closure(const FiniteMonoid& m, const std::vector<std::pair<int, int>>& seeds) {
    const int sz = m.size();
    UF uf(sz);
    std::deque<std::pair<int, int>> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        if (!uf.unite(x, y)) continue;
        for (int a = 0; a < sz; ++a) {
            const int lx = m.prod(a, x), ly = m.prod(a, y);
            if (uf.find(lx) != uf.find(ly)) work.emplace_back(lx, ly);
            const int rx = m.prod(x, a), ry = m.prod(y, a);
            if (uf.find(rx) != uf.find(ry)) work.emplace_back(rx, ry);
        }
    }
    return from_uf(uf);
}

bool ext_leq(const ExtCong& a, const ExtCong& b) {
    // a refines b: each a-class lies inside one b-class.
    std::vector<int> img(a.classes(), -1);
    for (size_t x = 0; x < a.cls.size(); ++x) {
        int& t = img[a.cls[x]];
        if (t == -1)
            t = b.cls[x];
        else if (t != b.cls[x])
            return false;
    }
    return true;
}

ExtCong ext_meet(const ExtCong& a, const ExtCong& b) {
    std::vector<int> raw(a.cls.size());
    std::map<std::pair<int, int>, int> ids;
    for (size_t x = 0; x < raw.size(); ++x) {
        auto key = std::make_pair(a.cls[x], b.cls[x]);
        raw[x] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
    return canonical(std::move(raw));
}

ExtCong ext_join(const FiniteMonoid& m, const ExtCong& a, const ExtCong& b) {
    // Seed with representative chains of both class maps; classes of a join of
    // congruences need the multiplicative closure in general, so reuse the
    // closure engine.
    std::vector<std::pair<int, int>> seeds;
    auto add = [&](const ExtCong& c) {
        std::vector<int> rep(c.classes(), -1);
        for (size_t x = 0; x < c.cls.size(); ++x) {
            int& r = rep[c.cls[x]];
            if (r == -1)
                r = static_cast<int>(x);
            else
                seeds.emplace_back(r, static_cast<int>(x));
        }
    };
    add(a);
    add(b);
    return congruence_closure(m, seeds);
}

bool ext_compatible(const FiniteMonoid& m, const ExtCong& c) {
    const int sz = m.size();
    for (int x = 0; x < sz; ++x)
        for (int y = x + 1; y < sz; ++y) {
            if (!c.related(x, y)) continue;
            for (int a = 0; a < sz; ++a) {
                if (!c.related(m.prod(a, x), m.prod(a, y))) return false;
                if (!c.related(m.prod(x, a), m.prod(y, a))) return false;
            }
        }
    return true;
}

std::vector<ExtCong> all_congruences(const FiniteMonoid& m) {
    const int sz = m.size();
    std::set<ExtCong> found;
    found.insert(ext_diagonal(m));
    for (int x = 0; x < sz; ++x)
        for (int y = x + 1; y < sz; ++y) found.insert(congruence_closure(m, {{x, y}}));

    // Close under pairwise joins.
    std::vector<ExtCong> fresh(found.begin(), found.end());
    while (!fresh.empty()) {
        std::vector<ExtCong> next;
        for (const auto& a : fresh)
            for (const auto& b : found) {
                ExtCong j = ext_join(m, a, b);
                if (found.insert(j).second) next.push_back(std::move(j));
            }
        fresh = std::move(next);
    }

    std::vector<ExtCong> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const ExtCong& a, const ExtCong& b) {
        const int ca = a.classes(), cb = b.classes();
        if (ca != cb) return ca > cb;
        return a.cls < b.cls;
    });
    return out;
}

ExtCong ext_of_matrix(const FiniteMonoid& m, const FCMatrix& mat) {
    const int sz = m.size();
    UF uf(sz);
    for (int x = 0; x < sz; ++x)
        for (int y = x + 1; y < sz; ++y)
            if (fcg_contains(mat, m.elems[x], m.elems[y])) uf.unite(x, y);
    return from_uf(uf);
}

namespace {

// Per-cell label extraction for match_to_fc.
CEntry extract_cell(const FiniteMonoid& m, const ExtCong& c, int q, int i,
                    const std::vector<std::vector<int>>& cell_elems, int zero_idx) {
    const auto& cell = cell_elems[q * (m.d + 1) + i];
    if (cell.empty()) throw std::runtime_error("match_to_fc: empty grid cell");
    if (c.related(cell.front(), zero_idx)) return ce(Sym::R);
    if (q >= 2) {
        NormalSubgroup acc{q, NSLabel::trivial};
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b)
                if (c.related(cell[a], cell[b]))
                    acc = ns_join(acc, normal_closure(pd(m.elems[cell[a]].alpha,
                                                         m.elems[cell[b]].alpha)));
        return ns_nontrivial(acc) ? ce_n(acc.label) : ce(Sym::del);
    }
    if (q == 0) {
        // mu at rank 0 shows up only through cross pairs into rank 1.
        for (int x : cell)
            for (int j = 0; j <= static_cast<int>(m.d); ++j)
                for (int y : cell_elems[1 * (m.d + 1) + j])
                    if (c.related(x, y)) return ce(Sym::mu);
        return ce(Sym::del);
    }
    // q == 1: compare the within-cell relation against the three hat-equal
    // candidate sets; fall back to cross pairs for the degree-1 case.
    bool any = false, is_mu = true, is_up = true, is_down = true;
    for (size_t a = 0; a < cell.size(); ++a)
        for (size_t b = a + 1; b < cell.size(); ++b) {
            const Partition &al = m.elems[cell[a]].alpha, &be = m.elems[cell[b]].alpha;
            const bool rel = c.related(cell[a], cell[b]);
            const bool he = hat(al) == hat(be);
            any = any || rel;
            if (rel != (he)) is_mu = false;
            if (rel != (he && green(Green::R, al, be))) is_up = false;
            if (rel != (he && green(Green::L, al, be))) is_down = false;
        }
    if (any) {
        if (is_mu) return ce(Sym::mu);
        if (is_up) return ce(Sym::mu_up);
        if (is_down) return ce(Sym::mu_down);
        throw std::runtime_error("match_to_fc: rank-1 cell matches no label");
    }
    for (int x : cell)
        for (int j = 0; j <= static_cast<int>(m.d); ++j)
            for (int y : cell_elems[0 * (m.d + 1) + j])
                if (c.related(x, y)) return ce(Sym::mu);
    return ce(Sym::del);
}

}  // namespace

FCMatrix match_to_fc(const FiniteMonoid& m, const ExtCong& c) {
    const int n = m.n, d = static_cast<int>(m.d);
    std::vector<std::vector<int>> cell_elems((n + 1) * (d + 1));
    int zero_idx = -1;
    for (int x = 0; x < m.size(); ++x) {
        if (m.elems[x].is_zero) {
            zero_idx = x;
            continue;
        }
        const auto g = grid_index(m.elems[x]);
        cell_elems[g.q * (d + 1) + static_cast<int>(g.i)].push_back(x);
    }
    FCMatrix mat = fc_blank(n, d);
    for (int q = 0; q <= n; ++q)
        for (int i = 0; i <= d; ++i)
            mat.at(q, i) = extract_cell(m, c, q, i, cell_elems, zero_idx);
    if (!fc_valid(mat)) throw std::runtime_error("match_to_fc: extracted matrix is invalid");
    if (!(ext_of_matrix(m, mat) == c))
        throw std::runtime_error("match_to_fc: re-expansion mismatch");
    return mat;
}

namespace {

using Rel = std::vector<std::vector<bool>>;

Rel rel_of(const ExtCong& c) {
    const int sz = static_cast<int>(c.cls.size());
    Rel r(sz, std::vector<bool>(sz, false));
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) r[x][y] = c.related(x, y);
    return r;
}

Rel rel_compose(const Rel& a, const Rel& b) {
    const int sz = static_cast<int>(a.size());
    Rel r(sz, std::vector<bool>(sz, false));
    for (int x = 0; x < sz; ++x)
        for (int z = 0; z < sz; ++z)
            if (a[x][z])
                for (int y = 0; y < sz; ++y)
                    if (b[z][y]) r[x][y] = true;
    return r;
}

}  // namespace

bool compose3_equal(const ExtCong& s, const ExtCong& t) {
    const Rel rs = rel_of(s), rt = rel_of(t);
    return rel_compose(rel_compose(rs, rt), rs) == rel_compose(rel_compose(rt, rs), rt);
}

bool compose_contains(const std::vector<ExtCong>& chain, int x, int y) {
    std::vector<int> frontier{x};
    for (const auto& c : chain) {
        std::vector<char> hit(c.classes(), 0);
        for (int v : frontier) hit[c.cls[v]] = 1;
        std::vector<int> next;
        for (size_t v = 0; v < c.cls.size(); ++v)
            if (hit[c.cls[v]]) next.push_back(static_cast<int>(v));
        frontier = std::move(next);
    }
    return std::find(frontier.begin(), frontier.end(), y) != frontier.end();
}

}  // namespace twistcong
