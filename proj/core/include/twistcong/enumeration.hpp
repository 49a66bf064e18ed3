#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace twistcong {

using BigCount = boost::multiprecision::cpp_int;

// Bivariate rational function over the integers with exact power-series
// coefficient extraction. num/den are dense coefficient grids indexed
// [x power][y power]; den must have an invertible (unit) constant term.
struct RationalSeries {
    std::vector<std::vector<BigCount>> num, den;
    BigCount coeff(int xn, int yd) const;
};

// The congruence-count generating function: sum over n,d of |Cong| x^n y^d.
const RationalSeries& cong_gf();

// Exact congruence counts by four routes. closed: per-degree polynomial and
// binomial formulas. recursion: column-peeling over the degree-(n,0) lattice.
// gf: series coefficient. (The fourth route, |enumerate_fc|, lives in the
// matrix module.)
BigCount count_closed(int n, int d);
BigCount count_recursion(int n, int d);
BigCount count_gf(int n, int d, int budget = 40);

// The two-index array behind the binomial formula: Pascal recurrence with
// cubic and linear boundaries.
BigCount a_array(int k, int d);

std::vector<std::vector<BigCount>> count_table(int nmax, int dmax);
std::string table_csv(int nmax, int dmax);

}  // namespace twistcong
