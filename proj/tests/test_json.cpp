#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcong/json_io.hpp"
#include "twistcong/oracle.hpp"

#include <stdexcept>

using namespace twistcong;

TEST_CASE("partition round trip") {
    Partition p = make_partition(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}});
    CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK(partition_to_json(make_partition(1, {{1, -1}})) == R"({"n":1,"blocks":[[1,-1]]})");

    CHECK_THROWS_AS(partition_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(R"({"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(R"({"n":2,"blocks":[[1,-1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(R"({"n":1,"blocks":[[1,-1,2]]})"), std::invalid_argument);
}

TEST_CASE("twisted element round trip") {
    auto e = TwistedElement::pair(3, make_partition(2, {{1, -2}, {2, -1}}));
    CHECK(twisted_from_json(twisted_to_json(e)) == e);

    auto z = TwistedElement::zero(2);
    CHECK(twisted_from_json(twisted_to_json(z), 2) == z);
    CHECK_THROWS_AS(twisted_from_json(twisted_to_json(z)), std::invalid_argument);
    CHECK_THROWS_AS(twisted_from_json(R"({"i":-1,"alpha":{"n":1,"blocks":[[1,-1]]}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(twisted_from_json(R"({"i":2})"), std::invalid_argument);
}

TEST_CASE("threshold congruence round trip") {
    CHECK(natcong_from_json(natcong_to_json(NatCong::trivial())) == NatCong::trivial());
    CHECK(natcong_from_json(natcong_to_json(NatCong::arith(2, 5))) == NatCong::arith(2, 5));
    CHECK_THROWS_AS(natcong_from_json(R"({"min":3})"), std::invalid_argument);
    CHECK_THROWS_AS(natcong_from_json(R"({"min":-1,"per":2})"), std::invalid_argument);
    CHECK_THROWS_AS(natcong_from_json(R"({"trivial":false})"), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
    for (auto m : {fc_atom(2, 2), fc_coatom(3, 1), fc_universal(2, 0), fc_delta(1, 3)})
        CHECK(fc_from_json(fc_to_json(m)) == m);

    // every enumerated matrix survives the trip
    for (const auto& m : enumerate_fc(2, 1)) CHECK(fc_from_json(fc_to_json(m)) == m);

    CHECK_THROWS_AS(fc_from_json(R"({"n":1,"d":0})"), std::invalid_argument);
    CHECK_THROWS_AS(fc_from_json(R"({"n":1,"d":0,"grid":[["D"]]})"), std::invalid_argument);
    CHECK_THROWS_AS(fc_from_json(R"({"n":1,"d":0,"grid":[["Q"],["D"]]})"), std::invalid_argument);
}

TEST_CASE("extensional congruence round trip") {
    auto m = build_monoid(2, 1);
    auto c = congruence_closure(m, {{0, 5}, {3, 8}});
    CHECK(ext_from_json(ext_to_json(c)) == c);
    CHECK(ext_from_json(ext_to_json(ext_diagonal(m))) == ext_diagonal(m));

    CHECK_THROWS_AS(ext_from_json("[[0,1],[1,2]]"), std::invalid_argument);  // repeats
    CHECK_THROWS_AS(ext_from_json("[[0,2]]"), std::invalid_argument);        // gap
    CHECK_THROWS_AS(ext_from_json("[[-1,0]]"), std::invalid_argument);
    CHECK(ext_from_json("[]") == ExtCong{{}});
}
