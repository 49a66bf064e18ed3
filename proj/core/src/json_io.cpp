#include "twistcong/json_io.hpp"

#include <json.hpp>
#include <map>
#include <stdexcept>

namespace twistcong {

namespace {

using nlohmann::ordered_json;

ordered_json parse(const std::string& s) {
    ordered_json j = ordered_json::parse(s, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

ordered_json partition_obj(const Partition& p) {
    ordered_json j;
    j["n"] = p.n;
    j["blocks"] = p.blocks;
    return j;
}

Partition partition_of(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("partition JSON needs n and blocks");
    return make_partition(j.at("n").get<int>(),
                          j.at("blocks").get<std::vector<std::vector<int>>>());
}

}  // namespace

std::string partition_to_json(const Partition& p) { return partition_obj(p).dump(); }

Partition partition_from_json(const std::string& s) { return partition_of(parse(s)); }

std::string twisted_to_json(const TwistedElement& e) {
    ordered_json j;
    if (e.is_zero) {
        j["zero"] = true;
    } else {
        j["i"] = e.i;
        j["alpha"] = partition_obj(e.alpha);
    }
    return j.dump();
}

TwistedElement twisted_from_json(const std::string& s, int n) {
    const ordered_json j = parse(s);
    if (!j.is_object()) throw std::invalid_argument("twisted element JSON must be an object");
    if (j.contains("zero")) {
        if (j.at("zero").get<bool>() != true)
            throw std::invalid_argument("zero flag must be true when present");
        if (n < 0) throw std::invalid_argument("zero form needs an explicit degree");
        return TwistedElement::zero(n);
    }
    if (!j.contains("i") || !j.contains("alpha"))
        throw std::invalid_argument("twisted element JSON needs i and alpha");
    const std::int64_t i = j.at("i").get<std::int64_t>();
    if (i < 0) throw std::invalid_argument("counter must be nonnegative");
    return TwistedElement::pair(i, partition_of(j.at("alpha")));
}

std::string natcong_to_json(const NatCong& c) {
    ordered_json j;
    if (c.triv) {
        j["trivial"] = true;
    } else {
        j["min"] = c.m;
        j["per"] = c.d;
    }
    return j.dump();
}

NatCong natcong_from_json(const std::string& s) {
    const ordered_json j = parse(s);
    if (j.contains("trivial")) {
        if (j.at("trivial").get<bool>() != true)
            throw std::invalid_argument("trivial flag must be true when present");
        return NatCong::trivial();
    }
    if (!j.contains("min") || !j.contains("per"))
        throw std::invalid_argument("natcong JSON needs min and per");
    return NatCong::arith(j.at("min").get<std::int64_t>(), j.at("per").get<std::int64_t>());
}

std::string fc_to_json(const FCMatrix& m) {
    ordered_json j;
    j["n"] = m.n;
    j["d"] = m.d;
    ordered_json rows = ordered_json::array();
    for (int q = 0; q <= m.n; ++q) {
        ordered_json row = ordered_json::array();
        for (int i = 0; i <= m.d; ++i) row.push_back(centry_to_string(m.at(q, i), q));
        rows.push_back(std::move(row));
    }
    j["grid"] = std::move(rows);
    return j.dump();
}

FCMatrix fc_from_json(const std::string& s) {
    const ordered_json j = parse(s);
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("grid"))
        throw std::invalid_argument("matrix JSON needs n, d, grid");
    const int n = j.at("n").get<int>(), d = j.at("d").get<int>();
    if (n < 0 || d < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    FCMatrix m = fc_blank(n, d);
    const auto& grid = j.at("grid");
    if (!grid.is_array() || static_cast<int>(grid.size()) != n + 1)
        throw std::invalid_argument("grid must have n+1 rows");
    for (int q = 0; q <= n; ++q) {
        const auto& row = grid.at(q);
        if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
            throw std::invalid_argument("grid rows must have d+1 entries");
        for (int i = 0; i <= d; ++i)
            m.at(q, i) = centry_from_string(row.at(i).get<std::string>(), q);
    }
    return m;
}

std::string ext_to_json(const ExtCong& c) {
    std::map<int, std::vector<int>> classes;
    for (size_t x = 0; x < c.cls.size(); ++x) classes[c.cls[x]].push_back(static_cast<int>(x));
    ordered_json j = ordered_json::array();
    for (const auto& [id, members] : classes) j.push_back(members);
    return j.dump();
}

ExtCong ext_from_json(const std::string& s) {
    const ordered_json j = parse(s);
    if (!j.is_array()) throw std::invalid_argument("congruence JSON must be an array of classes");
    std::map<int, int> cls_of;
    int id = 0;
    for (const auto& c : j) {
        if (!c.is_array()) throw std::invalid_argument("each class must be an array");
        for (const auto& x : c) {
            const int v = x.get<int>();
            if (!cls_of.emplace(v, id).second)
                throw std::invalid_argument("element repeated across classes");
        }
        ++id;
    }
    if (cls_of.empty()) return ExtCong{{}};
    if (cls_of.begin()->first != 0 || cls_of.rbegin()->first != static_cast<int>(cls_of.size()) - 1)
        throw std::invalid_argument("classes must cover 0..N-1");
    std::vector<int> cls(cls_of.size());
    for (const auto& [x, c] : cls_of) cls[x] = c;
    // Canonicalize class ids by least member.
    std::vector<int> remap(id, -1);
    int next = 0;
    for (int& v : cls) {
        if (remap[v] == -1) remap[v] = next++;
        v = remap[v];
    }
    return ExtCong{std::move(cls)};
}

namespace {

ordered_json natcong_obj(const NatCong& c) {
    ordered_json j;
    if (c.triv) {
        j["trivial"] = true;
    } else {
        j["min"] = c.m;
        j["per"] = c.d;
    }
    return j;
}

NatCong natcong_of(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("natcong JSON must be an object");
    if (j.contains("trivial")) {
        if (j.at("trivial").get<bool>() != true)
            throw std::invalid_argument("trivial flag must be true when present");
        return NatCong::trivial();
    }
    if (!j.contains("min") || !j.contains("per"))
        throw std::invalid_argument("natcong JSON needs min and per");
    return NatCong::arith(j.at("min").get<std::int64_t>(), j.at("per").get<std::int64_t>());
}

}  // namespace

std::string ccong_to_json(const CCong& c) {
    ordered_json j;
    j["n"] = c.pair.n;
    ordered_json thetas = ordered_json::array();
    for (const auto& t : c.pair.theta) thetas.push_back(natcong_obj(t));
    j["theta"] = std::move(thetas);
    ordered_json rows = ordered_json::array();
    for (int q = 0; q <= c.pair.n; ++q) {
        const CRow& r = c.pair.rows[static_cast<std::size_t>(q)];
        ordered_json row;
        ordered_json prefix = ordered_json::array();
        for (const auto& e : r.prefix) prefix.push_back(centry_to_string(e, q));
        row["prefix"] = std::move(prefix);
        row["limit"] = centry_to_string(r.limit, q);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["exceptional"] = c.exceptional;
    return j.dump();
}

CCong ccong_from_json(const std::string& s) {
    const ordered_json j = parse(s);
    if (!j.is_object() || !j.contains("n") || !j.contains("theta") || !j.contains("rows"))
        throw std::invalid_argument("congruence JSON needs n, theta, rows");
    CCong c;
    c.pair.n = j.at("n").get<int>();
    if (c.pair.n < 1) throw std::invalid_argument("degree must be at least 1");
    const auto& thetas = j.at("theta");
    const auto& rows = j.at("rows");
    if (!thetas.is_array() || static_cast<int>(thetas.size()) != c.pair.n + 1)
        throw std::invalid_argument("theta must list n+1 congruences");
    if (!rows.is_array() || static_cast<int>(rows.size()) != c.pair.n + 1)
        throw std::invalid_argument("rows must list n+1 rows");
    for (const auto& t : thetas) c.pair.theta.push_back(natcong_of(t));
    for (int q = 0; q <= c.pair.n; ++q) {
        const auto& row = rows.at(static_cast<std::size_t>(q));
        if (!row.is_object() || !row.contains("prefix") || !row.contains("limit"))
            throw std::invalid_argument("each row needs prefix and limit");
        CRow r;
        for (const auto& e : row.at("prefix"))
            r.prefix.push_back(centry_from_string(e.get<std::string>(), q));
        r.limit = centry_from_string(row.at("limit").get<std::string>(), q);
        c.pair.rows.push_back(std::move(r));
    }
    c.exceptional = j.value("exceptional", false);
    const auto v = validate_cpair(c.pair);
    if (!v.empty()) throw std::invalid_argument("congruence JSON invalid: " + v.front());
    if (c.exceptional && !exceptional_row(c.pair))
        throw std::invalid_argument("congruence JSON flags a non-exceptional pair");
    return c;
}

}  // namespace twistcong
