#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcong/enumeration.hpp"
#include "twistcong/fcmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace twistcong;

namespace {

// congruence counts for 0 <= n, d <= 10; frozen from an independent tally
const char* kCountTable =
    "2 3 4 5 6 7 8 9 10 11 12\n"
    "3 7 14 24 37 53 72 94 119 147 178\n"
    "9 43 136 334 696 1294 2213 3551 5419 7941 11254\n"
    "12 76 329 1105 3100 7608 16842 34353 65560 118404 204139\n"
    "16 134 773 3456 12806 41054 117273 304889 732888 1648660 3503734\n"
    "19 188 1281 6754 29413 110312 366724 1103538 3053642 7865696 19043434\n"
    "22 251 1969 11930 59547 255132 965409 3293916 10294295 29832242 80951191\n"
    "25 323 2864 19578 110012 529298 2242845 8544569 29728765 95627675 287192490\n"
    "28 404 3993 30373 189556 1010840 4737070 19912815 76266840 269426820 886585245\n"
    "31 494 5383 45071 309114 1808352 9279855 42636438 178144941 685232184 2450483412\n"
    "34 593 7061 64509 482051 3068039 17102328 85221356 385570064 1603380636 6189136484\n";

std::vector<std::vector<BigCount>> frozen() {
    std::vector<std::vector<BigCount>> t;
    std::istringstream in(kCountTable);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<BigCount> row;
        std::string w;
        while (ls >> w) row.push_back(BigCount(w));
        t.push_back(row);
    }
    return t;
}

}  // namespace

TEST_CASE("closed forms reproduce the frozen table") {
    auto t = frozen();
    REQUIRE(t.size() == 11);
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(t[n].size() == 11);
        for (int d = 0; d <= 10; ++d) CHECK(count_closed(n, d) == t[n][d]);
    }
}

TEST_CASE("column peeling agrees with the closed forms") {
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= 6; ++d) CHECK(count_recursion(n, d) == count_closed(n, d));
}

TEST_CASE("series coefficients agree with the closed forms") {
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= 6; ++d) CHECK(count_gf(n, d) == count_closed(n, d));
    CHECK_THROWS_AS(count_gf(50, 0, 40), std::invalid_argument);
}

TEST_CASE("explicit enumeration agrees with the closed forms") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d)
            CHECK(BigCount(enumerate_fc(n, d).size()) == count_closed(n, d));
}

TEST_CASE("pascal family") {
    CHECK(a_array(0, 0) == 8);
    CHECK(a_array(0, 1) == 34);
    CHECK(a_array(0, 2) == 93);
    CHECK(a_array(1, 0) == 9);
    CHECK(a_array(5, 0) == 13);
    for (int k = 1; k <= 25; ++k)
        for (int d = 1; d <= 25; ++d)
            CHECK(a_array(k, d) == a_array(k - 1, d) + a_array(k, d - 1));
    CHECK_THROWS_AS(a_array(-1, 0), std::invalid_argument);
}

TEST_CASE("degenerate degree") {
    for (int d = 0; d <= 12; ++d) CHECK(count_closed(0, d) == d + 2);
}

TEST_CASE("table helpers") {
    auto t = count_table(3, 2);
    REQUIRE(t.size() == 4);
    REQUIRE(t[0].size() == 3);
    CHECK(t[2][1] == 43);

    auto csv = table_csv(2, 2);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n\\d,0,1,2");
    std::getline(in, line);
    CHECK(line == "0,2,3,4");
    std::getline(in, line);
    CHECK(line == "1,3,7,14");
    std::getline(in, line);
    CHECK(line == "2,9,43,136");
}
