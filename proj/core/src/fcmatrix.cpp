#include "twistcong/fcmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistcong {

namespace {

const CEntry kDel = ce(Sym::del);
const CEntry kMu = ce(Sym::mu);
const CEntry kR = ce(Sym::R);

bool is_mu_family(const CEntry& e) {
    return e.sym == Sym::mu || e.sym == Sym::mu_up || e.sym == Sym::mu_down;
}

// Rebuilds rows 0 and 1 from a shape; the classifier verifies against this.
std::pair<std::vector<CEntry>, std::vector<CEntry>> build_low(const LowShape& s, int d) {
    std::vector<CEntry> r0(d + 1, kDel), r1(d + 1, kDel);
    auto fillR = [d](std::vector<CEntry>& row, int from) {
        for (int c = from; c <= d; ++c) row[c] = kR;
    };
    switch (s.kind) {
        case LowKind::aligned:
            fillR(r0, s.k);
            fillR(r1, s.k);
            break;
        case LowKind::mu_run:
            for (int c = s.i; c < s.k; ++c) r0[c] = kMu;
            fillR(r0, s.k);
            r1[s.i] = s.zeta;
            for (int c = s.i + 1; c <= s.k; ++c) r1[c] = kMu;
            fillR(r1, s.k + 1);
            break;
        case LowKind::stagger:
            fillR(r0, s.k);
            r1[s.l - 1] = s.zeta;
            fillR(r1, s.l);
            break;
        case LowKind::lone_mu:
            r0[s.k - 1] = kMu;
            fillR(r0, s.k);
            r1[s.l - 1] = kMu;
            fillR(r1, s.l);
            break;
    }
    return {std::move(r0), std::move(r1)};
}

bool shape_params_ok(const LowShape& s, int d) {
    switch (s.kind) {
        case LowKind::aligned: return 0 <= s.k && s.k <= d + 1;
        case LowKind::mu_run:
            return 0 <= s.i && s.i < s.k && s.k <= d &&
                   (s.zeta == kDel || is_mu_family(s.zeta));
        case LowKind::stagger:
            return 0 <= s.k && s.k < s.l && s.l <= d + 1 &&
                   (s.zeta == kDel || is_mu_family(s.zeta));
        case LowKind::lone_mu: return 0 < s.k && s.k < s.l - 1 && s.l - 1 <= d;
    }
    return false;
}

}  // namespace

FCMatrix fc_blank(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("fc_blank: bad dimensions");
    FCMatrix m;
    m.n = n;
    m.d = d;
    m.grid.assign(n + 1, std::vector<CEntry>(d + 1, kDel));
    return m;
}

FCMatrix fc_delta(int n, int d) { return fc_blank(n, d); }

FCMatrix fc_universal(int n, int d) {
    FCMatrix m = fc_blank(n, d);
    for (auto& row : m.grid) std::fill(row.begin(), row.end(), kR);
    return m;
}

FCMatrix fc_atom(int n, int d) {
    FCMatrix m = fc_blank(n, d);
    m.at(0, d) = kR;
    return m;
}

FCMatrix fc_coatom(int n, int d) {
    FCMatrix m = fc_universal(n, d);
    if (n >= 2)
        m.at(n, 0) = ce_n(NSLabel::full);
    else
        m.at(n, 0) = kDel;
    return m;
}

FCMatrix fc_rees(int n, int d, const std::vector<GridIndex>& corners) {
    FCMatrix m = fc_blank(n, d);
    for (const auto& c : corners) {
        if (c.q < 0 || c.q > n || c.i < 0 || c.i > d)
            throw std::invalid_argument("fc_rees: corner out of range");
        for (int q = 0; q <= c.q; ++q)
            for (int i = static_cast<int>(c.i); i <= d; ++i) m.at(q, i) = kR;
    }
    return m;
}

std::optional<LowShape> classify_low(const FCMatrix& m) {
    const int d = m.d;
    const auto& r0 = m.grid[0];
    const auto& r1 = m.grid[1];

    // Row 0 must read D* mu* R*.
    int i0 = 0;
    while (i0 <= d && r0[i0] == kDel) ++i0;
    int mu_end = i0;
    while (mu_end <= d && r0[mu_end] == kMu) ++mu_end;
    const int m0 = mu_end - i0;
    const int k0 = mu_end;  // row 0 R start
    for (int c = k0; c <= d; ++c)
        if (r0[c] != kR) return std::nullopt;

    // Row 1: D* [run of non-D] R*, where only the run's first cell may be a
    // directional label.
    int r1start = d + 1;
    for (int c = 0; c <= d; ++c)
        if (r1[c] == kR) {
            r1start = c;
            break;
        }
    for (int c = r1start; c <= d; ++c)
        if (r1[c] != kR) return std::nullopt;
    int p = 0;
    while (p < r1start && r1[p] == kDel) ++p;
    for (int c = p; c < r1start; ++c)
        if (!is_mu_family(r1[c])) return std::nullopt;
    for (int c = p + 1; c < r1start; ++c)
        if (r1[c] != kMu) return std::nullopt;
    const int run_len = r1start - p;

    LowShape s;
    if (m0 == 0) {
        if (run_len == 0) {
            if (r1start == k0) {
                s = LowShape{LowKind::aligned, 0, k0, 0, kDel};
            } else {
                if (k0 >= r1start) return std::nullopt;
                s = LowShape{LowKind::stagger, 0, k0, r1start, kDel};
            }
        } else if (run_len == 1) {
            if (k0 > p) return std::nullopt;
            s = LowShape{LowKind::stagger, 0, k0, p + 1, r1[p]};
        } else {
            return std::nullopt;
        }
    } else if (m0 == 1 && run_len == 1 && p > k0) {
        s = LowShape{LowKind::lone_mu, 0, k0, p + 1, kDel};
    } else {
        // Matched band: row 1 run must end at k0 and start at i0 or i0+1.
        if (run_len == 0 || r1start != k0 + 1) return std::nullopt;
        CEntry zeta = kDel;
        if (p == i0) {
            zeta = r1[p];
        } else if (p != i0 + 1) {
            return std::nullopt;
        }
        s = LowShape{LowKind::mu_run, i0, k0, 0, zeta};
    }

    if (!shape_params_ok(s, d)) return std::nullopt;
    if (build_low(s, d) != std::make_pair(r0, r1)) return std::nullopt;
    return s;
}

std::optional<HighShape> classify_high(const FCMatrix& m, int q) {
    const int d = m.d;
    const auto& row = m.grid[q];
    int i = 0;
    while (i <= d && row[i] == kDel) ++i;
    int k = i;
    HighShape s;
    s.start = i;
    while (k <= d && row[k].sym == Sym::N) {
        const NormalSubgroup cur{q, row[k].nlabel};
        if (!ns_valid(cur) || !ns_nontrivial(cur)) return std::nullopt;
        if (k > i && !ns_leq(NormalSubgroup{q, row[k - 1].nlabel}, cur)) return std::nullopt;
        s.labels.push_back(row[k].nlabel);
        ++k;
    }
    s.rstart = k;
    for (int c = k; c <= d; ++c)
        if (row[c] != kR) return std::nullopt;
    return s;
}

std::vector<std::string> validate_fc(const FCMatrix& m) {
    std::vector<std::string> bad;
    if (m.n < 0 || m.d < 0 || static_cast<int>(m.grid.size()) != m.n + 1) {
        bad.push_back("grid has wrong row count");
        return bad;
    }
    for (int q = 0; q <= m.n; ++q)
        if (static_cast<int>(m.grid[q].size()) != m.d + 1) {
            bad.push_back("row " + std::to_string(q) + " has wrong length");
            return bad;
        }
    for (int q = 0; q <= m.n; ++q)
        for (int i = 0; i <= m.d; ++i)
            if (!centry_allowed(m.at(q, i), q))
                bad.push_back("label not allowed at (" + std::to_string(q) + "," +
                              std::to_string(i) + ")");
    if (!bad.empty()) return bad;

    std::optional<LowShape> low;
    if (m.n == 0) {
        // Single row: counters only; row 0 must be D* R*.
        int k = 0;
        while (k <= m.d && m.at(0, k) == kDel) ++k;
        for (int c = k; c <= m.d; ++c)
            if (m.at(0, c) != kR) bad.push_back("row 0 is not a Delta prefix with an R tail");
    } else {
        low = classify_low(m);
        if (!low) bad.push_back("rows 0,1 match no valid shape");
    }
    for (int q = 2; q <= m.n; ++q)
        if (!classify_high(m, q))
            bad.push_back("row " + std::to_string(q) + " is not Delta*,labels,R*");
    if (!bad.empty()) return bad;

    // No N-symbol above Delta or a directional label or another N-symbol.
    for (int q = 2; q <= m.n; ++q)
        for (int i = 0; i <= m.d; ++i)
            if (m.at(q, i).sym == Sym::N) {
                const Sym below = m.at(q - 1, i).sym;
                if (below != Sym::mu && below != Sym::R)
                    bad.push_back("group label over a non-joining cell at (" +
                                  std::to_string(q) + "," + std::to_string(i) + ")");
            }
    // Every R sits on an R.
    for (int q = 1; q <= m.n; ++q)
        for (int i = 0; i <= m.d; ++i)
            if (m.at(q, i) == kR && m.at(q - 1, i) != kR)
                bad.push_back("R not supported from below at (" + std::to_string(q) + "," +
                              std::to_string(i) + ")");

    if (m.n == 1 && low) {
        // Degree 1 collapses the directional relations and every within-class
        // mu relation, so only these shapes name distinct congruences.
        const bool plain =
            low->kind == LowKind::aligned || low->kind == LowKind::lone_mu ||
            ((low->kind == LowKind::mu_run || low->kind == LowKind::stagger) &&
             low->zeta == kDel);
        if (!plain) bad.push_back("degree 1 admits no slot label here");
    }
    return bad;
}

bool fc_valid(const FCMatrix& m) { return validate_fc(m).empty(); }

int fc_min(const FCMatrix& m, int q) {
    for (int i = 0; i <= m.d; ++i)
        if (m.at(q, i) == kR) return i;
    return m.d + 1;
}

bool fcg_contains(const FCMatrix& m, const TwistedElement& a, const TwistedElement& b) {
    if (a.n != m.n || b.n != m.n) throw std::invalid_argument("fcg_contains: mixed degrees");
    if (a.is_zero && b.is_zero) return true;
    if (a.is_zero || b.is_zero) {
        const TwistedElement& x = a.is_zero ? b : a;
        const auto g = grid_index(x);
        if (g.i > m.d) throw std::invalid_argument("fcg_contains: counter beyond d");
        return m.at(g.q, static_cast<int>(g.i)) == kR;
    }
    const auto ga = grid_index(a), gb = grid_index(b);
    if (ga.i > m.d || gb.i > m.d)
        throw std::invalid_argument("fcg_contains: counter beyond d");
    const CEntry ea = m.at(ga.q, static_cast<int>(ga.i));
    const CEntry eb = m.at(gb.q, static_cast<int>(gb.i));
    if (ea == kR && eb == kR) return true;
    if (ea != eb) return false;
    switch (ea.sym) {
        case Sym::del:
            return ga.i == gb.i && a.alpha == b.alpha;
        case Sym::N:
            return ga.i == gb.i && green(Green::H, a.alpha, b.alpha) &&
                   subgroup_contains(NormalSubgroup{ga.q, ea.nlabel}, pd(a.alpha, b.alpha));
        case Sym::mu_down:
            return hat(a.alpha) == hat(b.alpha) && green(Green::L, a.alpha, b.alpha);
        case Sym::mu_up:
            return hat(a.alpha) == hat(b.alpha) && green(Green::R, a.alpha, b.alpha);
        case Sym::mu: {
            if (hat(a.alpha) != hat(b.alpha)) return false;
            if (ga.q == gb.q && ga.i == gb.i) return true;
            return ga.i - gb.i == fc_min(m, ga.q) - fc_min(m, gb.q);
        }
        default:
            return false;
    }
}

namespace {

// First columns of the mu band in rows 0 and 1, for the offset comparisons.
std::pair<int, int> mu_anchor(const LowShape& s) {
    if (s.kind == LowKind::mu_run) return {s.i, s.i + 1};
    return {s.k - 1, s.l - 1};  // lone_mu
}

bool has_offset_band(const LowShape& s) {
    return s.kind == LowKind::mu_run || s.kind == LowKind::lone_mu;
}

}  // namespace

bool fcong_leq(const FCMatrix& a, const FCMatrix& b) {
    if (a.n != b.n || a.d != b.d) throw std::invalid_argument("fcong_leq: mixed dimensions");
    for (int q = 0; q <= a.n; ++q)
        for (int i = 0; i <= a.d; ++i)
            if (!leqC(a.at(q, i), b.at(q, i), q)) return false;
    if (a.n == 0) return true;
    const auto sa = classify_low(a);
    if (!sa) throw std::invalid_argument("fcong_leq: first matrix is invalid");
    if (!has_offset_band(*sa)) return true;
    const auto [a0, a1] = mu_anchor(*sa);
    if (fc_min(b, 0) <= a0 && fc_min(b, 1) <= a1) return true;
    const auto sb = classify_low(b);
    if (!sb) throw std::invalid_argument("fcong_leq: second matrix is invalid");
    return has_offset_band(*sb) &&
           fc_min(b, 1) - fc_min(b, 0) == fc_min(a, 1) - fc_min(a, 0);
}

std::vector<FCMatrix> enumerate_fc(int n, int d, std::int64_t cap) {
    if (n < 1 || d < 0) throw std::invalid_argument("enumerate_fc: need n >= 1, d >= 0");
    std::vector<FCMatrix> out;
    auto push = [&](FCMatrix&& m) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
            throw std::length_error("enumerate_fc: cap exceeded");
        out.push_back(std::move(m));
    };

    std::vector<LowShape> lows;
    for (int k = 0; k <= d + 1; ++k) lows.push_back({LowKind::aligned, 0, k, 0, kDel});
    const std::vector<CEntry> zetas = {kDel, ce(Sym::mu_up), ce(Sym::mu_down), kMu};
    for (int i = 0; i < d; ++i)
        for (int k = i + 1; k <= d; ++k)
            for (const auto& z : zetas) {
                if (n == 1 && z != kDel) continue;
                lows.push_back({LowKind::mu_run, i, k, 0, z});
            }
    for (int k = 0; k <= d; ++k)
        for (int l = k + 1; l <= d + 1; ++l)
            for (const auto& z : zetas) {
                if (z != kDel && n == 1) continue;
                lows.push_back({LowKind::stagger, 0, k, l, z});
            }
    for (int k = 1; k < d; ++k)
        for (int l = k + 2; l <= d + 1; ++l) lows.push_back({LowKind::lone_mu, 0, k, l, kDel});

    // Recursive extension by rows 2..n against the verticality rules.
    FCMatrix work = fc_blank(n, d);
    auto extend = [&](auto&& self, int q, int below_r, int below_join) -> void {
        if (q > n) {
            push(FCMatrix(work));
            return;
        }
        const auto chain = ns_nontrivial_chain(q);
        for (int i = below_join; i <= d + 1; ++i) {
            for (int k = std::max(i, below_r); k <= d + 1; ++k) {
                // Weakly increasing label assignments on columns i..k-1.
                std::vector<int> pick(std::max(0, k - i), 0);
                auto emit = [&]() {
                    auto& row = work.grid[q];
                    std::fill(row.begin(), row.end(), kDel);
                    for (int c = i; c < k; ++c) row[c] = ce_n(chain[pick[c - i]].label);
                    for (int c = k; c <= d; ++c) row[c] = kR;
                    self(self, q + 1, k, k);
                };
                if (pick.empty()) {
                    if (i == k) emit();
                    continue;
                }
                // Odometer over weakly increasing sequences.
                while (true) {
                    emit();
                    int t = static_cast<int>(pick.size()) - 1;
                    while (t >= 0 && pick[t] == static_cast<int>(chain.size()) - 1) --t;
                    if (t < 0) break;
                    const int v = pick[t] + 1;
                    for (size_t u = t; u < pick.size(); ++u) pick[u] = v;
                }
            }
        }
    };

    for (const auto& s : lows) {
        auto [r0, r1] = build_low(s, d);
        work.grid[0] = std::move(r0);
        work.grid[1] = std::move(r1);
        if (n == 1) {
            push(FCMatrix(work));
            continue;
        }
        // Row 2 joining constraint: group labels need a mu or R below.
        int join2 = d + 1;
        while (join2 > 0 &&
               (work.grid[1][join2 - 1] == kMu || work.grid[1][join2 - 1] == kR))
            --join2;
        int r1start = d + 1;
        for (int c = 0; c <= d; ++c)
            if (work.grid[1][c] == kR) {
                r1start = c;
                break;
            }
        extend(extend, 2, r1start, join2);
    }
    return out;
}

namespace {

// Con-struction guard shared by principal_fc and the generators: must the
// pair fall into the plain ideal case?
bool rees_case(const GridIndex& ga, const GridIndex& gb, const Partition& al,
               const Partition& be) {
    const int q = ga.q, r = gb.q;
    if (q >= 2) return !(ga.i == gb.i && green(Green::H, al, be));
    if (q == r) return ga.i != gb.i || hat(al) != hat(be);
    // q = 1, r = 0.
    return gb.i >= ga.i || hat(al) != be;
}

}  // namespace

FCMatrix principal_fc(const TwistedElement& a, const TwistedElement& b, int n, int d) {
    if (a.n != n || b.n != n) throw std::invalid_argument("principal_fc: mixed degrees");
    if (!a.is_zero && a.i > d) throw std::invalid_argument("principal_fc: counter beyond d");
    if (!b.is_zero && b.i > d) throw std::invalid_argument("principal_fc: counter beyond d");
    if (a == b) return fc_delta(n, d);
    if (a.is_zero || b.is_zero) {
        const TwistedElement& x = a.is_zero ? b : a;
        return fc_rees(n, d, {grid_index(x)});
    }

    TwistedElement lo = a, hi = b;
    {
        const auto ga = grid_index(lo), gb = grid_index(hi);
        if (ga.q < gb.q || (ga.q == gb.q && ga.i > gb.i)) std::swap(lo, hi);
    }
    const auto ga = grid_index(lo), gb = grid_index(hi);
    const int q = ga.q, r = gb.q;
    const int i = static_cast<int>(ga.i), j = static_cast<int>(gb.i);
    const Partition &al = lo.alpha, &be = hi.alpha;

    if (rees_case(ga, gb, al, be)) return fc_rees(n, d, {ga, gb});

    FCMatrix m = fc_blank(n, d);
    if (q >= 3) {
        // Same H-class, counter i = j; the residual group drives row q.
        const NormalSubgroup N = normal_closure(pd(al, be));
        for (int c = i; c <= d; ++c) {
            m.at(q, c) = ce_n(N.label);
            for (int s = 0; s < q; ++s) m.at(s, c) = kR;
        }
        return m;
    }
    if (q == 2) {
        for (int c = i; c <= d; ++c) {
            m.at(2, c) = ce_n(NSLabel::full);
            m.at(1, c) = kMu;
            m.at(0, c) = c == d ? kR : kMu;
        }
        return m;
    }
    if (q == 1 && r == 1) {
        // Same column, same hat, distinct diagrams.
        CEntry z = kMu;
        const bool up = green(Green::R, al, be), down = green(Green::L, al, be);
        if (up) z = ce(Sym::mu_up);
        if (down) z = ce(Sym::mu_down);
        m.at(1, i) = z;
        for (int c = i + 1; c <= d; ++c) m.at(1, c) = kMu;
        for (int c = i; c < d; ++c) m.at(0, c) = kMu;
        m.at(0, d) = kR;
        return m;
    }
    // q = 1, r = 0, j < i, hat(al) = be.
    if (i == j + 1) {
        for (int c = j + 1; c <= d; ++c) m.at(1, c) = kMu;
        for (int c = j; c < d; ++c) m.at(0, c) = kMu;
        m.at(0, d) = kR;
        return m;
    }
    // Isolated matched pair with tails.
    m.at(0, j) = kMu;
    for (int c = j + 1; c <= d; ++c) m.at(0, c) = kR;
    m.at(1, i) = kMu;
    for (int c = i + 1; c <= d; ++c) m.at(1, c) = kR;
    return m;
}

std::vector<std::pair<GridIndex, GridIndex>> matched_pairs(const FCMatrix& m) {
    std::vector<std::pair<GridIndex, GridIndex>> out;
    if (m.n < 1) return out;
    const int off = fc_min(m, 1) - fc_min(m, 0);
    for (int i = 0; i <= m.d; ++i) {
        const int j = i + off;
        if (j < 0 || j > m.d) continue;
        if (m.at(0, i) == kMu && m.at(1, j) == kMu)
            out.push_back({GridIndex{0, i}, GridIndex{1, j}});
    }
    return out;
}

namespace {

// Cross-rank joinability of cells (0,i) and (1,j) inside one congruence:
// either a matched mu pair or both inside the ideal.
bool linked(const FCMatrix& m, int i, int j) {
    if (m.at(0, i) == kR && m.at(1, j) == kR) return true;
    return m.at(0, i) == kMu && m.at(1, j) == kMu &&
           i - j == fc_min(m, 0) - fc_min(m, 1);
}

}  // namespace

FCMatrix fc_meet(const FCMatrix& a, const FCMatrix& b) {
    if (a.n != b.n || a.d != b.d) throw std::invalid_argument("fc_meet: mixed dimensions");
    FCMatrix m = fc_blank(a.n, a.d);
    for (int q = 0; q <= a.n; ++q)
        for (int i = 0; i <= a.d; ++i) m.at(q, i) = meetC(a.at(q, i), b.at(q, i), q);
    if (a.n == 0) return m;
    // A rank-0 cell only keeps mu if some rank-1 partner is joinable in both
    // arguments; the label meet alone cannot see that.
    for (int i = 0; i <= a.d; ++i) {
        if (m.at(0, i) != kMu) continue;
        bool common = false;
        for (int j = 0; j <= a.d && !common; ++j)
            common = linked(a, i, j) && linked(b, i, j);
        if (!common) m.at(0, i) = kDel;
    }
    if (a.n == 1) {
        // Degree 1 has no within-class mu pairs, so row 1 mu also needs a
        // common partner below.
        for (int j = 0; j <= a.d; ++j) {
            if (m.at(1, j) != kMu) continue;
            bool common = false;
            for (int i = 0; i <= a.d && !common; ++i)
                common = linked(a, i, j) && linked(b, i, j);
            if (!common) m.at(1, j) = kDel;
        }
    }
    return m;
}

FCMatrix fc_join(const FCMatrix& a, const FCMatrix& b) {
    if (a.n != b.n || a.d != b.d) throw std::invalid_argument("fc_join: mixed dimensions");
    FCMatrix m = fc_blank(a.n, a.d);
    for (int q = 0; q <= a.n; ++q)
        for (int i = 0; i <= a.d; ++i) m.at(q, i) = joinC(a.at(q, i), b.at(q, i), q);
    if (a.n == 0) return m;

    const auto la = matched_pairs(a), lb = matched_pairs(b);
    // Two bands with different offsets force their shared cells into the
    // ideal: the composite relates same-rank elements across columns.
    auto conflict = [&](const std::pair<GridIndex, GridIndex>& x,
                        const std::pair<GridIndex, GridIndex>& y) {
        if (x.first.i == y.first.i && x.second.i != y.second.i) {
            m.at(0, static_cast<int>(x.first.i)) = kR;
            m.at(1, static_cast<int>(x.second.i)) = kR;
            m.at(1, static_cast<int>(y.second.i)) = kR;
        }
        if (x.second.i == y.second.i && x.first.i != y.first.i) {
            m.at(1, static_cast<int>(x.second.i)) = kR;
            m.at(0, static_cast<int>(x.first.i)) = kR;
            m.at(0, static_cast<int>(y.first.i)) = kR;
        }
    };
    for (const auto& x : la)
        for (const auto& y : lb) conflict(x, y);

    // Escalate to a fixpoint: R spreads right along rows and down columns,
    // and across band links whose other end reached the ideal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q <= a.n; ++q)
            for (int i = 0; i <= a.d; ++i) {
                if (m.at(q, i) != kR) continue;
                if (i < a.d && m.at(q, i + 1) != kR) {
                    m.at(q, i + 1) = kR;
                    changed = true;
                }
                if (q > 0 && m.at(q - 1, i) != kR) {
                    m.at(q - 1, i) = kR;
                    changed = true;
                }
            }
        auto pull = [&](const std::pair<GridIndex, GridIndex>& x) {
            CEntry& e0 = m.at(0, static_cast<int>(x.first.i));
            CEntry& e1 = m.at(1, static_cast<int>(x.second.i));
            if ((e0 == kR) != (e1 == kR)) {
                e0 = kR;
                e1 = kR;
                changed = true;
            }
        };
        for (const auto& x : la) pull(x);
        for (const auto& x : lb) pull(x);
    }
    return m;
}

namespace {

// Canonical rank-q diagram: straight strings on 1..q, singletons elsewhere.
Partition straight(int n, int q) {
    std::vector<std::vector<int>> blocks;
    for (int t = 1; t <= q; ++t) blocks.push_back({t, -t});
    for (int t = q + 1; t <= n; ++t) {
        blocks.push_back({t});
        blocks.push_back({-t});
    }
    return make_partition(n, std::move(blocks));
}

// Rank-q diagram whose strings are twisted by p relative to straight(n, q).
Partition twisted_by(int n, int q, const Permutation& p) {
    std::vector<std::vector<int>> blocks;
    for (int t = 1; t <= q; ++t) blocks.push_back({t, -(p.img[t - 1] + 1)});
    for (int t = q + 1; t <= n; ++t) {
        blocks.push_back({t});
        blocks.push_back({-t});
    }
    return make_partition(n, std::move(blocks));
}

Permutation seed_perm(int q, NSLabel target) {
    Permutation p = perm_identity(q);
    switch (target) {
        case NSLabel::full:
            std::swap(p.img[0], p.img[1]);
            break;
        case NSLabel::alternating:
            p.img[0] = 1;
            p.img[1] = 2;
            p.img[2] = 0;
            break;
        case NSLabel::klein4:
            std::swap(p.img[0], p.img[1]);
            std::swap(p.img[2], p.img[3]);
            break;
        case NSLabel::trivial:
            break;
    }
    return p;
}

}  // namespace

std::vector<std::pair<TwistedElement, TwistedElement>> fc_generating_set(const FCMatrix& m) {
    if (!fc_valid(m)) throw std::invalid_argument("fc_generating_set: invalid matrix");
    const int n = m.n, d = m.d;
    std::vector<std::pair<TwistedElement, TwistedElement>> pairs;
    if (n < 1) throw std::invalid_argument("fc_generating_set: need n >= 1");

    // Ideal corners, top rank first.
    std::vector<GridIndex> corners;
    int prev = -1;  // R start of the row above (none yet)
    for (int q = n; q >= 0; --q) {
        const int f = fc_min(m, q);
        if (f <= d && (prev == -1 || f < prev)) corners.push_back({q, f});
        if (f <= d) prev = f;
    }
    auto corner_elt = [&](const GridIndex& c) {
        return TwistedElement::pair(c.i, straight(n, c.q));
    };
    size_t t = 0;
    for (; t + 1 < corners.size(); t += 2) {
        const auto &c1 = corners[t], &c2 = corners[t + 1];
        if (c1.q == 1 && c2.q == 0) {
            // Need a rank-0 partner that is not the hat of the rank-1 side.
            if (n >= 2) {
                Partition beta = make_partition(
                    n, [n] {
                        std::vector<std::vector<int>> blocks{{1, 2}};
                        for (int u = 3; u <= n; ++u) blocks.push_back({u});
                        for (int u = 1; u <= n; ++u) blocks.push_back({-u});
                        return blocks;
                    }());
                pairs.push_back({corner_elt(c1), TwistedElement::pair(c2.i, beta)});
            } else {
                pairs.push_back({corner_elt(c1), TwistedElement::zero(n)});
                pairs.push_back({corner_elt(c2), TwistedElement::zero(n)});
            }
        } else {
            pairs.push_back({corner_elt(c1), corner_elt(c2)});
        }
    }
    if (t < corners.size())
        pairs.push_back({corner_elt(corners[t]), TwistedElement::zero(n)});

    // One H-pair per distinct group label, at its first column.
    for (int q = 2; q <= n; ++q) {
        const auto hs = classify_high(m, q);
        NSLabel last = NSLabel::trivial;
        for (size_t u = 0; u < hs->labels.size(); ++u) {
            if (u > 0 && hs->labels[u] == last) continue;
            last = hs->labels[u];
            const int col = hs->start + static_cast<int>(u);
            pairs.push_back({TwistedElement::pair(col, straight(n, q)),
                             TwistedElement::pair(col, twisted_by(n, q, seed_perm(q, last)))});
        }
    }

    // Bottom band / slot fixer.
    const auto low = *classify_low(m);
    auto rank1_at = [&](int col) { return TwistedElement::pair(col, straight(n, 1)); };
    switch (low.kind) {
        case LowKind::aligned:
            break;
        case LowKind::mu_run:
            if (low.zeta == kDel) {
                pairs.push_back(
                    {rank1_at(low.i + 1), TwistedElement::pair(low.i, hat(straight(n, 1)))});
            } else if (low.zeta == kMu) {
                Partition a = straight(n, 1);
                Partition b = make_partition(n, [n] {
                    std::vector<std::vector<int>> blocks{{2, -2}, {1}, {-1}};
                    for (int u = 3; u <= n; ++u) {
                        blocks.push_back({u});
                        blocks.push_back({-u});
                    }
                    return blocks;
                }());
                pairs.push_back({TwistedElement::pair(low.i, a), TwistedElement::pair(low.i, b)});
            } else {
                const bool up = low.zeta == ce(Sym::mu_up);
                Partition a = straight(n, 1);
                Partition b = make_partition(n, [n, up] {
                    std::vector<std::vector<int>> blocks;
                    if (up)
                        blocks = {{1, -2}, {2}, {-1}};
                    else
                        blocks = {{2, -1}, {1}, {-2}};
                    for (int u = 3; u <= n; ++u) {
                        blocks.push_back({u});
                        blocks.push_back({-u});
                    }
                    return blocks;
                }());
                pairs.push_back({TwistedElement::pair(low.i, a), TwistedElement::pair(low.i, b)});
            }
            break;
        case LowKind::stagger:
            if (low.zeta != kDel) {
                const int col = low.l - 1;
                if (low.zeta == kMu) {
                    Partition b = make_partition(n, [n] {
                        std::vector<std::vector<int>> blocks{{2, -2}, {1}, {-1}};
                        for (int u = 3; u <= n; ++u) {
                            blocks.push_back({u});
                            blocks.push_back({-u});
                        }
                        return blocks;
                    }());
                    pairs.push_back(
                        {TwistedElement::pair(col, straight(n, 1)), TwistedElement::pair(col, b)});
                } else {
                    const bool up = low.zeta == ce(Sym::mu_up);
                    Partition b = make_partition(n, [n, up] {
                        std::vector<std::vector<int>> blocks;
                        if (up)
                            blocks = {{1, -2}, {2}, {-1}};
                        else
                            blocks = {{2, -1}, {1}, {-2}};
                        for (int u = 3; u <= n; ++u) {
                            blocks.push_back({u});
                            blocks.push_back({-u});
                        }
                        return blocks;
                    }());
                    pairs.push_back(
                        {TwistedElement::pair(col, straight(n, 1)), TwistedElement::pair(col, b)});
                }
            }
            break;
        case LowKind::lone_mu:
            pairs.push_back(
                {rank1_at(low.l - 1), TwistedElement::pair(low.k - 1, hat(straight(n, 1)))});
            break;
    }
    return pairs;
}

std::string fc_to_string(const FCMatrix& m) {
    std::string out;
    for (int q = m.n; q >= 0; --q) {
        for (int i = 0; i <= m.d; ++i) {
            if (i) out += ' ';
            out += centry_to_string(m.at(q, i), q);
        }
        out += '\n';
    }
    return out;
}

}  // namespace twistcong
