#include "twistcong/lattice.hpp"

#include <json.hpp>
#include <stdexcept>

namespace twistcong {

FiniteLattice lattice_from_leq(std::vector<std::string> names, std::vector<FCMatrix> mats,
                               std::vector<std::vector<bool>> le) {
    FiniteLattice l;
    l.names = std::move(names);
    l.mats = std::move(mats);
    l.le = std::move(le);
    const int sz = l.size();
    for (int a = 0; a < sz; ++a) {
        if (!l.le[a][a]) throw std::invalid_argument("lattice_from_leq: not reflexive");
        for (int b = 0; b < sz; ++b) {
            if (a != b && l.le[a][b] && l.le[b][a])
                throw std::invalid_argument("lattice_from_leq: not antisymmetric");
            for (int c = 0; c < sz; ++c)
                if (l.le[a][b] && l.le[b][c] && !l.le[a][c])
                    throw std::invalid_argument("lattice_from_leq: not transitive");
        }
    }

    l.meet.assign(sz, std::vector<int>(sz, -1));
    l.join.assign(sz, std::vector<int>(sz, -1));
    for (int a = 0; a < sz; ++a)
        for (int b = a; b < sz; ++b) {
            // Sweep up to a maximal common bound, then verify it dominates
            // every bound (greatest), else the order is not a lattice.
            auto settle = [&](bool want_meet) {
                int r = -1;
                for (int c = 0; c < sz; ++c) {
                    const bool bound =
                        want_meet ? (l.le[c][a] && l.le[c][b]) : (l.le[a][c] && l.le[b][c]);
                    if (!bound) continue;
                    if (r == -1 || (want_meet ? l.le[r][c] : l.le[c][r])) r = c;
                }
                if (r == -1) return -1;
                for (int c = 0; c < sz; ++c) {
                    const bool bound =
                        want_meet ? (l.le[c][a] && l.le[c][b]) : (l.le[a][c] && l.le[b][c]);
                    if (bound && !(want_meet ? l.le[c][r] : l.le[r][c])) return -1;
                }
                return r;
            };
            const int mt = settle(true);
            const int jn = settle(false);
            if (mt == -1 || jn == -1)
                throw std::invalid_argument("lattice_from_leq: order is not a lattice");
            l.meet[a][b] = l.meet[b][a] = mt;
            l.join[a][b] = l.join[b][a] = jn;
        }

    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            if (a == b || !l.le[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < sz && direct; ++c)
                direct = !(c != a && c != b && l.le[a][c] && l.le[c][b]);
            if (direct) l.covers.emplace_back(a, b);
        }
    return l;
}

std::string fc_label(const FCMatrix& m) {
    std::string out;
    for (int q = m.n; q >= 0; --q) {
        if (q < m.n) out += " / ";
        for (int i = 0; i <= m.d; ++i) {
            if (i) out += ' ';
            out += centry_to_string(m.at(q, i), q);
        }
    }
    return out;
}

FiniteLattice build_lattice(int n, int d, std::int64_t cap) {
    if (n == 0) {
        // Counter chain: the d+2 Rees-style congruences, coarsest last.
        const int sz = d + 2;
        std::vector<std::string> names;
        for (int i = 0; i < sz; ++i) names.push_back("chain" + std::to_string(i));
        std::vector<std::vector<bool>> le(sz, std::vector<bool>(sz, false));
        for (int a = 0; a < sz; ++a)
            for (int b = a; b < sz; ++b) le[a][b] = true;
        return lattice_from_leq(std::move(names), {}, std::move(le));
    }
    std::vector<FCMatrix> mats = enumerate_fc(n, d, cap);
    const int sz = static_cast<int>(mats.size());
    std::vector<std::string> names;
    names.reserve(sz);
    for (const auto& m : mats) names.push_back(fc_label(m));
    std::vector<std::vector<bool>> le(sz, std::vector<bool>(sz, false));
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) le[a][b] = fcong_leq(mats[a], mats[b]);
    return lattice_from_leq(std::move(names), std::move(mats), std::move(le));
}

int lat_bottom(const FiniteLattice& l) {
    for (int x = 0; x < l.size(); ++x) {
        bool all = true;
        for (int y = 0; y < l.size() && all; ++y) all = l.le[x][y];
        if (all) return x;
    }
    throw std::invalid_argument("lat_bottom: no least element");
}

int lat_top(const FiniteLattice& l) {
    for (int x = 0; x < l.size(); ++x) {
        bool all = true;
        for (int y = 0; y < l.size() && all; ++y) all = l.le[y][x];
        if (all) return x;
    }
    throw std::invalid_argument("lat_top: no greatest element");
}

std::vector<int> atoms(const FiniteLattice& l) {
    const int bot = lat_bottom(l);
    std::vector<int> out;
    for (const auto& [lo, hi] : l.covers)
        if (lo == bot) out.push_back(hi);
    return out;
}

std::vector<int> coatoms(const FiniteLattice& l) {
    const int top = lat_top(l);
    std::vector<int> out;
    for (const auto& [lo, hi] : l.covers)
        if (hi == top) out.push_back(lo);
    return out;
}

std::vector<int> covers_of(const FiniteLattice& l, int x) {
    std::vector<int> out;
    for (const auto& [lo, hi] : l.covers)
        if (lo == x) out.push_back(hi);
    return out;
}

std::optional<std::array<int, 5>> find_pentagon(const FiniteLattice& l) {
    const int sz = l.size();
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            if (l.le[a][b] || l.le[b][a]) continue;
            const int bot = l.meet[a][b], top = l.join[a][b];
            for (int c = 0; c < sz; ++c) {
                if (c == a || l.le[c][b] || l.le[b][c]) continue;
                if (!l.le[a][c]) continue;
                if (l.meet[c][b] == bot && l.join[c][b] == top)
                    return std::array<int, 5>{bot, a, c, b, top};
            }
        }
    return std::nullopt;
}

std::optional<std::array<int, 5>> find_diamond(const FiniteLattice& l) {
    const int sz = l.size();
    for (int x = 0; x < sz; ++x)
        for (int y = x + 1; y < sz; ++y) {
            if (l.le[x][y] || l.le[y][x]) continue;
            const int bot = l.meet[x][y], top = l.join[x][y];
            for (int z = y + 1; z < sz; ++z) {
                if (l.le[x][z] || l.le[z][x] || l.le[y][z] || l.le[z][y]) continue;
                if (l.meet[x][z] == bot && l.meet[y][z] == bot && l.join[x][z] == top &&
                    l.join[y][z] == top)
                    return std::array<int, 5>{bot, x, y, z, top};
            }
        }
    return std::nullopt;
}

bool is_modular(const FiniteLattice& l) { return !find_pentagon(l).has_value(); }

bool is_distributive(const FiniteLattice& l) {
    return !find_pentagon(l).has_value() && !find_diamond(l).has_value();
}

namespace {

bool is_cover(const FiniteLattice& l, int lo, int hi) {
    for (const auto& [a, b] : l.covers)
        if (a == lo && b == hi) return true;
    return false;
}

}  // namespace

bool is_upper_semimodular(const FiniteLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (is_cover(l, l.meet[a][b], a) && !is_cover(l, b, l.join[a][b])) return false;
    return true;
}

bool is_lower_semimodular(const FiniteLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            if (is_cover(l, a, l.join[a][b]) && !is_cover(l, l.meet[a][b], b)) return false;
    return true;
}

std::string lattice_dot(const FiniteLattice& l) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (int x = 0; x < l.size(); ++x) {
        std::string label = l.names[x];
        std::string escaped;
        for (char ch : label) {
            if (ch == '"' || ch == '\\') escaped += '\\';
            escaped += ch;
        }
        out += "  n" + std::to_string(x) + " [label=\"" + escaped + "\"];\n";
    }
    for (const auto& [lo, hi] : l.covers)
        out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

std::string lattice_json(const FiniteLattice& l) {
    nlohmann::ordered_json j;
    j["size"] = l.size();
    j["elements"] = l.names;
    if (!l.mats.empty()) {
        nlohmann::ordered_json grids = nlohmann::ordered_json::array();
        for (const auto& m : l.mats) {
            nlohmann::ordered_json g;
            g["n"] = m.n;
            g["d"] = m.d;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int q = 0; q <= m.n; ++q) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int i = 0; i <= m.d; ++i) row.push_back(centry_to_string(m.at(q, i), q));
                rows.push_back(std::move(row));
            }
            g["grid"] = std::move(rows);
            grids.push_back(std::move(g));
        }
        j["matrices"] = std::move(grids);
    }
    nlohmann::ordered_json cov = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : l.covers) cov.push_back(nlohmann::ordered_json::array({lo, hi}));
    j["covers"] = std::move(cov);
    return j.dump(2) + "\n";
}

std::string lattice_csv(const FiniteLattice& l) {
    std::string out = "op,a,b,result\n";
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            out += "meet," + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(l.meet[a][b]) + "\n";
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
            out += "join," + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(l.join[a][b]) + "\n";
    return out;
}

std::string property_report_json(const FiniteLattice& l) {
    nlohmann::ordered_json j;
    j["size"] = l.size();
    j["atoms"] = atoms(l);
    j["coatoms"] = coatoms(l);
    j["modular"] = is_modular(l);
    j["distributive"] = is_distributive(l);
    j["upper_semimodular"] = is_upper_semimodular(l);
    j["lower_semimodular"] = is_lower_semimodular(l);
    const auto pent = find_pentagon(l);
    const auto diam = find_diamond(l);
    j["pentagon_witness"] =
        pent ? nlohmann::ordered_json(std::vector<int>(pent->begin(), pent->end()))
             : nlohmann::ordered_json(nullptr);
    j["diamond_witness"] =
        diam ? nlohmann::ordered_json(std::vector<int>(diam->begin(), diam->end()))
             : nlohmann::ordered_json(nullptr);
    return j.dump(2) + "\n";
}

}  // namespace twistcong
