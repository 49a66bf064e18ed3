#pragma once

#include <string>

#include "twistcong/cpair.hpp"
#include "twistcong/fcmatrix.hpp"
#include "twistcong/natcong.hpp"
#include "twistcong/oracle.hpp"
#include "twistcong/partition.hpp"
#include "twistcong/twisted.hpp"

namespace twistcong {

// JSON round-tripping. Formats:
//   Partition        {"n": int, "blocks": [[signed ints]]}
//   TwistedElement   {"i": int, "alpha": <partition>} or {"zero": true}
//   NatCong          {"trivial": true} or {"min": m, "per": d}
//   FCMatrix         {"n": int, "d": int, "grid": [[entry strings]]}, row 0 first
//   ExtCong          classes as a list of element-index lists
// Parsers throw std::invalid_argument on malformed input.

std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& s);

std::string twisted_to_json(const TwistedElement& e);
// n is required to decode the zero form (it carries no degree itself).
TwistedElement twisted_from_json(const std::string& s, int n = -1);

std::string natcong_to_json(const NatCong& c);
NatCong natcong_from_json(const std::string& s);

std::string fc_to_json(const FCMatrix& m);
FCMatrix fc_from_json(const std::string& s);

// CCong: {"n": int, "theta": [<natcong>], "rows": [{"prefix": [entry
// strings], "limit": entry string}], "exceptional": bool}, row 0 first.
std::string ccong_to_json(const CCong& c);
CCong ccong_from_json(const std::string& s);

std::string ext_to_json(const ExtCong& c);
ExtCong ext_from_json(const std::string& s);

}  // namespace twistcong
