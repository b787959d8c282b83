#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wreath/error.hpp"
#include "wreath/fixtures.hpp"
#include "wreath/poly.hpp"

using namespace wreath;

TEST_CASE("ring basics") {
    BigradedPoly one_xy;  // 1 + xy
    one_xy.add_term(0, 0, 1);
    one_xy.add_term(2, 2, 1);

    CHECK((one_xy * BigradedPoly{}).is_zero());

    BigradedPoly sq = one_xy * one_xy;  // 1 + 2xy + x^2y^2
    CHECK(sq.coeff_st(0, 0) == 1);
    CHECK(sq.coeff_st(1, 1) == 2);
    CHECK(sq.coeff_st(2, 2) == 1);
    CHECK(sq.terms().size() == 3);

    // cancellation removes entries
    BigradedPoly z = one_xy - one_xy;
    CHECK(z.is_zero());
}

TEST_CASE("K3 square convolution") {
    BigradedPoly k3 = k3_hodge();
    BigradedPoly sq = k3 * k3;
    CHECK(sq.coeff_st(1, 1) == 40);  // 2 * 1 * 20
    // independent term-by-term expansion of the (1,1) cell
    Int direct = 0;
    for (const auto& [ka, ca] : k3.terms())
        for (const auto& [kb, cb] : k3.terms())
            if (ka.first + kb.first == 2 && ka.second + kb.second == 2) direct += ca * cb;
    CHECK(direct == 40);
}

TEST_CASE("twist") {
    BigradedPoly p = k3_hodge();
    CHECK(twist(p, 0) == p);
    CHECK(twist(BigradedPoly::one(), 1) == BigradedPoly::monomial(2, 2, 1));

    BigradedPoly t = twist(k3_hodge(), 1);
    CHECK(t.coeff_st(1, 1) == 1);
    CHECK(t.coeff_st(2, 2) == 20);
    CHECK(t.coeff_st(0, 0) == 0);

    // half-integer twist doubles correctly
    CHECK(twist2(BigradedPoly::one(), 1) == BigradedPoly::monomial(1, 1, 1));
}

TEST_CASE("alternate_signs and symmetry") {
    BigradedPoly h;
    h.add_term(2, 0, 3);  // h^{1,0} = 3, odd
    h.add_term(2, 2, 5);  // even
    BigradedPoly e = alternate_signs(h);
    CHECK(e.coeff_st(1, 0) == -3);
    CHECK(e.coeff_st(1, 1) == 5);
    CHECK(alternate_signs(e) == h);

    CHECK(is_xy_symmetric(k3_hodge()));
    CHECK(!is_xy_symmetric(h));
    CHECK(is_hodge_table(k3_hodge()));
    CHECK(!is_hodge_table(e));                                  // negative entry
    CHECK(!is_hodge_table(BigradedPoly::monomial(1, 0, 2)));    // half-integer exponent
}

TEST_CASE("evaluation at units") {
    CHECK(k3_hodge().eval_pm(1, 1) == 24);
    CHECK(alternate_signs(k3_hodge()).eval_pm(1, 1) == 24);
    BigradedPoly p;
    p.add_term(2, 0, 1);  // x
    CHECK(p.eval_pm(-1, 1) == -1);
    BigradedPoly half = BigradedPoly::monomial(1, 0, 1);  // x^(1/2)
    CHECK(half.eval_pm(1, 1) == 1);
    CHECK_THROWS_AS(half.eval_pm(-1, 1), InputError);
}

TEST_CASE("rendering") {
    CHECK(BigradedPoly{}.str() == "0");
    CHECK(BigradedPoly::one().str() == "1");
    BigradedPoly p;
    p.add_term(0, 0, 1);
    p.add_term(2, 2, -20);
    p.add_term(3, 0, 1);
    CHECK(p.str() == "1 - 20*x*y + x^(3/2)");
}

TEST_CASE("brute symmetric power oracle sanity") {
    // S^2 of a single even line is a line; of a single odd line it vanishes
    BigradedPoly even_line = BigradedPoly::one();
    CHECK(oracle::brute_sym_dims(even_line, 2) == BigradedPoly::one());
    BigradedPoly odd_line = BigradedPoly::monomial(2, 0, 1);  // h^{1,0} = 1
    CHECK(oracle::brute_sym_dims(odd_line, 2).is_zero());
    // S^2 of the K3 table has 20 classes in bidegree (1,1): (0,0) paired with (1,1)
    CHECK(oracle::brute_sym_dims(k3_hodge(), 2).coeff_st(1, 1) == 20);
}
