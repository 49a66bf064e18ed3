#include "twistcong/enumeration.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "twistcong/lattice.hpp"

namespace twistcong {

namespace {

BigCount exact_div(BigCount p, const BigCount& q) {
    if (p % q != 0) throw std::logic_error("exact_div: nonzero remainder");
    return p / q;
}

BigCount binom(const BigCount& s, int t) {
    if (t < 0 || s < t) return 0;
    BigCount r = 1;
    for (int u = 1; u <= t; ++u) r = exact_div(r * (s - t + u), u);
    return r;
}

using Poly = std::vector<std::vector<BigCount>>;  // [x power][y power]

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1,
           std::vector<BigCount>(a[0].size() + b[0].size() - 1, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) {
            if (a[i][j] == 0) continue;
            for (size_t u = 0; u < b.size(); ++u)
                for (size_t v = 0; v < b[0].size(); ++v) r[i + u][j + v] += a[i][j] * b[u][v];
        }
    return r;
}

}  // namespace

BigCount RationalSeries::coeff(int xn, int yd) const {
    if (xn < 0 || yd < 0) throw std::invalid_argument("coeff: negative exponent");
    const BigCount unit = den[0][0];
    if (unit != 1 && unit != -1) throw std::logic_error("coeff: denominator not a unit");
    auto get = [](const Poly& p, int i, int j) -> BigCount {
        if (i >= static_cast<int>(p.size()) || j >= static_cast<int>(p[0].size())) return 0;
        return p[i][j];
    };
    Poly s(xn + 1, std::vector<BigCount>(yd + 1, 0));
    for (int a = 0; a <= xn; ++a)
        for (int b = 0; b <= yd; ++b) {
            BigCount acc = get(num, a, b);
            for (int u = 0; u <= a; ++u)
                for (int v = 0; v <= b; ++v) {
                    if (u == a && v == b) continue;
                    const BigCount dc = get(den, a - u, b - v);
                    if (dc != 0) acc -= s[u][v] * dc;
                }
            s[a][b] = exact_div(std::move(acc), unit);
        }
    return s[xn][yd];
}

const RationalSeries& cong_gf() {
    static const RationalSeries gf = [] {
        // Denominator (y-1)^9 (x-1) (y^3 - 3y^2 + 3y - 1 + x).
        Poly y_minus_1(1, std::vector<BigCount>{-1, 1});
        Poly den = y_minus_1;
        for (int i = 1; i < 9; ++i) den = poly_mul(den, y_minus_1);
        Poly x_minus_1{{-1}, {1}};
        den = poly_mul(den, x_minus_1);
        Poly cubic(2, std::vector<BigCount>(4, 0));
        cubic[0][0] = -1;
        cubic[0][1] = 3;
        cubic[0][2] = -3;
        cubic[0][3] = 1;
        cubic[1][0] = 1;
        den = poly_mul(den, cubic);

        // Numerator, one x-polynomial per power of y (constant term first).
        const std::vector<std::vector<long long>> by_y = {
            /* y^0  */ {-2, 1, -5, 3, -1, 1},
            /* y^1  */ {21, -7, 31, -15, -4, 4},
            /* y^2  */ {-100, 21, -76, 19, -8, 8},
            /* y^3  */ {285, -34, 87, 31, -1, 1},
            /* y^4  */ {-540, 27, -31, -122, 1, -1},
            /* y^5  */ {714, 7, -32, 151, 0, 0},
            /* y^6  */ {-672, -49, 45, -80, 0, 0},
            /* y^7  */ {450, 69, -34, 1, 0, 0},
            /* y^8  */ {-210, -56, 28, 19, 0, 0},
            /* y^9  */ {65, 28, -19, -8, 0, 0},
            /* y^10 */ {-12, -8, 7, 1, 0, 0},
            /* y^11 */ {1, 1, -1, 0, 0, 0},
        };
        Poly num(6, std::vector<BigCount>(12, 0));
        for (int yp = 0; yp < 12; ++yp)
            for (int xp = 0; xp < 6; ++xp) num[xp][yp] = by_y[yp][xp];
        return RationalSeries{std::move(num), std::move(den)};
    }();
    return gf;
}

BigCount a_array(int k, int d) {
    if (k < 0 || d < 0) throw std::invalid_argument("a_array: negative index");
    static std::map<std::pair<int, int>, BigCount> memo;
    const auto key = std::make_pair(k, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigCount r;
    if (k == 0) {
        const BigCount dd = d;
        r = exact_div(13 * dd * dd * dd + 60 * dd * dd + 83 * dd + 48, 6);
    } else if (d == 0) {
        r = k + 8;
    } else {
        r = a_array(k - 1, d) + a_array(k, d - 1);
    }
    memo[key] = r;
    return r;
}

BigCount count_closed(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("count_closed: negative index");
    const BigCount dd = d;
    switch (n) {
        case 0:
            return dd + 2;
        case 1:
            return exact_div(3 * dd * dd + 5 * dd + 6, 2);
        case 2:
            return exact_div(((13 * dd + 106) * dd + 299) * dd * dd + 398 * dd + 216, 24);
        case 3: {
            BigCount p = 13;
            for (long long c : {322LL, 3262LL, 17920LL, 58597LL, 115318LL, 127128LL, 60480LL})
                p = p * dd + c;
            return exact_div(p, 5040);
        }
        default: {
            const int k = 3 * n - 4;
            return binom(BigCount(k) + d, d + 1) + 8 * binom(BigCount(k) + d + 3, k + 3) +
                   2 * binom(BigCount(k) + d + 2, k + 3) + 5 * binom(BigCount(k) + d + 1, k + 3) -
                   2 * binom(BigCount(k) + d, k + 3);
        }
    }
}

namespace {

enum class ColKind { delta, r0, mu_dn, mu_up, mu, mu_s2, r1, r_s2, rec };

ColKind classify_col(const FCMatrix& m) {
    auto is_r_upto = [&](int q) {
        // R on rows 0..q and nothing but Delta above
        for (int s = 0; s <= m.n; ++s) {
            if (s <= q && !(m.at(s, 0) == ce(Sym::R))) return false;
            if (s > q && !(m.at(s, 0) == ce(Sym::del))) return false;
        }
        return true;
    };
    bool all_delta = true;
    for (int s = 0; s <= m.n; ++s) all_delta = all_delta && m.at(s, 0) == ce(Sym::del);
    if (all_delta) return ColKind::delta;
    if (is_r_upto(0)) return ColKind::r0;
    if (is_r_upto(1)) return ColKind::r1;
    const CEntry z = m.at(1, 0);
    if (m.at(0, 0) == ce(Sym::R) && (z.sym == Sym::mu || z.sym == Sym::mu_up || z.sym == Sym::mu_down)) {
        bool s2_above = m.n >= 2 && m.at(2, 0) == ce_n(NSLabel::full);
        for (int s = s2_above ? 3 : 2; s <= m.n; ++s)
            if (!(m.at(s, 0) == ce(Sym::del))) return ColKind::rec;
        if (s2_above) return z.sym == Sym::mu ? ColKind::mu_s2 : ColKind::rec;
        if (z.sym == Sym::mu) return ColKind::mu;
        return z.sym == Sym::mu_up ? ColKind::mu_up : ColKind::mu_dn;
    }
    // R rows 0..1 with one group label above, all Delta beyond.
    if (m.n >= 2 && m.at(0, 0) == ce(Sym::R) && m.at(1, 0) == ce(Sym::R) &&
        m.at(2, 0) == ce_n(NSLabel::full)) {
        bool rest = true;
        for (int s = 3; s <= m.n; ++s) rest = rest && m.at(s, 0) == ce(Sym::del);
        if (rest) return ColKind::r_s2;
    }
    return ColKind::rec;
}

}  // namespace

BigCount count_recursion(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("count_recursion: negative index");
    if (n == 0) return BigCount(d) + 2;
    if (n == 1) {
        const BigCount dd = d;
        return exact_div(3 * dd * dd + 5 * dd + 6, 2);
    }
    const FiniteLattice base = build_lattice(n, 0);
    std::vector<ColKind> kind(base.size());
    for (int x = 0; x < base.size(); ++x) kind[x] = classify_col(base.mats[x]);

    std::map<std::pair<int, int>, BigCount> memo;
    auto peel = [&](auto&& self, int node, int dd) -> BigCount {
        if (dd == 0) return 1;
        const auto key = std::make_pair(node, dd);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const BigCount t = dd;
        BigCount r;
        switch (kind[node]) {
            case ColKind::delta: r = 1; break;
            case ColKind::r0:
            case ColKind::mu_dn:
            case ColKind::mu_up: r = t + 1; break;
            case ColKind::mu: r = 6 * t; break;
            case ColKind::mu_s2: r = 2 * t * t + 5 * t; break;
            case ColKind::r1: r = exact_div(9 * t * t - t + 4, 2); break;
            case ColKind::r_s2: r = exact_div(13 * t * t * t + 21 * t * t + 2 * t + 12, 6); break;
            case ColKind::rec: {
                r = 0;
                for (int tau = 0; tau < base.size(); ++tau)
                    if (base.le[tau][node]) r += self(self, tau, dd - 1);
                break;
            }
        }
        memo[key] = r;
        return r;
    };
    return peel(peel, lat_top(base), d + 1);
}

BigCount count_gf(int n, int d, int budget) {
    if (n > budget || d > budget) throw std::invalid_argument("count_gf: budget exceeded");
    return cong_gf().coeff(n, d);
}

std::vector<std::vector<BigCount>> count_table(int nmax, int dmax) {
    std::vector<std::vector<BigCount>> t(nmax + 1, std::vector<BigCount>(dmax + 1));
    for (int n = 0; n <= nmax; ++n)
        for (int d = 0; d <= dmax; ++d) t[n][d] = count_closed(n, d);
    return t;
}

std::string table_csv(int nmax, int dmax) {
    auto t = count_table(nmax, dmax);
    std::string out = "n\\d";
    for (int d = 0; d <= dmax; ++d) out += "," + std::to_string(d);
    out += "\n";
    for (int n = 0; n <= nmax; ++n) {
        out += std::to_string(n);
        for (int d = 0; d <= dmax; ++d) out += "," + t[n][d].str();
        out += "\n";
    }
    return out;
}

}  // namespace twistcong
