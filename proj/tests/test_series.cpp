#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wreath/error.hpp"
#include "wreath/fixtures.hpp"
#include "wreath/series.hpp"

using namespace wreath;

namespace {

// random Hodge table with total dimension <= dim_cap
BigradedPoly random_hodge(std::mt19937& rng, int dim_cap) {
    std::uniform_int_distribution<int> expo(0, 3), count(0, 3);
    BigradedPoly h;
    int total = 0;
    for (int tries = 0; tries < 10 && total < dim_cap; ++tries) {
        int c = count(rng);
        if (c == 0) continue;
        c = std::min(c, dim_cap - total);
        h.add_term(2 * expo(rng), 2 * expo(rng), c);
        total += c;
    }
    return h;
}

}  // namespace

TEST_CASE("sym_series basics") {
    // one even class in bidegree (0,0): geometric series 1/(1-q)
    SeriesQ s = sym_series(BigradedPoly::one(), 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == BigradedPoly::one());

    // one odd class: e^{1,0} = -1 gives the two-term exterior series 1 - xq
    BigradedPoly odd;
    odd.add_term(2, 0, -1);
    SeriesQ ext = sym_series(odd, 4);
    CHECK(ext.coeff(0) == BigradedPoly::one());
    CHECK(ext.coeff(1) == BigradedPoly::monomial(2, 0, -1));
    CHECK(ext.coeff(2).is_zero());
    CHECK(ext.coeff(3).is_zero());
}

TEST_CASE("sym_series of the K3 table vs brute force") {
    BigradedPoly e = alternate_signs(k3_hodge());  // purely even, equals the table
    SeriesQ s = sym_series(e, 3);
    CHECK(s.coeff(2).coeff_st(1, 1) == 20);
    for (int n = 0; n <= 3; ++n)
        CHECK(s.coeff(n) == alternate_signs(oracle::brute_sym_dims(k3_hodge(), n)));
}

TEST_CASE("euler_product binomial coefficients") {
    // single factor (1 - q)^(-24): q^2 coefficient C(25, 2) = 300
    SeriesQ s = euler_product({{0, 0, 1, 0, 24}}, 3);
    CHECK(s.coeff(0) == BigradedPoly::one());
    CHECK(s.coeff(1).coeff_st(0, 0) == 24);
    CHECK(s.coeff(2).coeff_st(0, 0) == 300);
    // verified by repeated multiplication of the geometric factor
    SeriesQ g(3, 0);
    g.set(0, 0, BigradedPoly::one());
    g.set(1, 0, BigradedPoly::one());
    g.set(2, 0, BigradedPoly::one());
    g.set(3, 0, BigradedPoly::one());
    SeriesQ pow = SeriesQ::one(3, 0);
    for (int i = 0; i < 24; ++i) pow *= g;
    CHECK(pow == s);

    // adding the factor (1 - q^2)^(-24) contributes 24 more at q^2
    SeriesQ s2 = euler_product({{0, 0, 1, 0, 24}, {0, 0, 2, 0, 24}}, 2);
    CHECK(s2.coeff(2).coeff_st(0, 0) == 324);

    // empty product
    CHECK(euler_product({}, 4) == SeriesQ::one(4, 0));

    // negative exponent terminates: (1 - q)^2
    SeriesQ neg = euler_product({{0, 0, 1, 0, -2}}, 5);
    CHECK(neg.coeff(1).coeff_st(0, 0) == -2);
    CHECK(neg.coeff(2).coeff_st(0, 0) == 1);
    CHECK(neg.coeff(3).is_zero());

    CHECK_THROWS_AS(euler_product({{2, 2, 0, 0, 1}}, 3), InputError);
}

TEST_CASE("specialization") {
    SeriesQ s = sym_series(alternate_signs(k3_hodge()), 2);
    auto euler = specialize(s, 1, 1);
    CHECK(euler[{0, 0}] == 1);
    CHECK(euler[{1, 0}] == 24);
    CHECK_THROWS_AS(specialize(SeriesQ::one(0, 0), 2, 1), InputError);

    // half-integer exponents refuse y = -1
    SeriesQ half(1, 0);
    half.set(0, 0, BigradedPoly::one());
    half.set(1, 0, BigradedPoly::monomial(0, 1, 1));
    CHECK_THROWS_AS(specialize(half, 1, -1), InputError);
    CHECK(specialize(half, 1, 1)[{1, 0}] == 1);
}

TEST_CASE("multiplicativity over direct sums") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 12; ++trial) {
        BigradedPoly e1 = alternate_signs(random_hodge(rng, 8));
        BigradedPoly e2 = alternate_signs(random_hodge(rng, 8));
        SeriesQ lhs = sym_series(e1 + e2, 4);
        SeriesQ rhs = sym_series(e1, 4) * sym_series(e2, 4);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sym_series matches brute-force symmetric powers") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 10; ++trial) {
        BigradedPoly h = random_hodge(rng, 30);
        SeriesQ s = sym_series(alternate_signs(h), 4);
        for (int n = 0; n <= 4; ++n)
            CHECK(s.coeff(n) == alternate_signs(oracle::brute_sym_dims(h, n)));
    }
}

TEST_CASE("nonnegativity for purely even tables") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 8; ++trial) {
        BigradedPoly h;
        std::uniform_int_distribution<int> expo(0, 2), count(0, 3);
        for (int i = 0; i < 5; ++i) {
            int s = expo(rng), t = expo(rng);
            if ((s + t) % 2 != 0) continue;
            h.add_term(2 * s, 2 * t, count(rng));
        }
        SeriesQ s = sym_series(alternate_signs(h), 4);
        for (const auto& [k, poly] : s.coeffs())
            for (const auto& [mono, c] : poly.terms()) CHECK(c > 0);
    }
}
