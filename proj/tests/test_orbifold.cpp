#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wreath/error.hpp"
#include "wreath/fixtures.hpp"
#include "wreath/orbifold.hpp"

using namespace wreath;

TEST_CASE("shift_from_weights") {
    CHECK(shift_from_weights({{0, 1}, {0, 1}}) == Rational(0, 1));
    CHECK(shift_from_weights({{1, 3}, {2, 3}}) == Rational(1, 1));
    CHECK(shift_from_weights({{1, 2}, {1, 2}}) == Rational(1, 1));
    CHECK(shift_from_weights({{1, 3}, {1, 3}}) == Rational(2, 3));
    CHECK(!shift_from_weights({{1, 3}, {1, 3}}).is_integer());
    CHECK_THROWS_AS(shift_from_weights({{3, 3}}), InputError);
    CHECK_THROWS_AS(shift_from_weights({{-1, 4}}), InputError);
}

TEST_CASE("wreath_shift") {
    CHECK(wreath_shift(0, 1, 2) == 0);
    CHECK(wreath_shift(1, 2, 2) == 2);
    CHECK(wreath_shift(1, 3, 4) == 5);
    CHECK_THROWS_AS(wreath_shift(0, 2, 3), InputError);
}

TEST_CASE("sector data validation") {
    BigradedPoly pt = BigradedPoly::one();
    CHECK_THROWS_AS(OrbifoldData("odd", 3, {{"e", true, {{"c", 0, pt}}}}), InputError);
    CHECK_THROWS_AS(OrbifoldData("noid", 2, {{"g", false, {{"c", 1, pt}}}}), InputError);
    CHECK_THROWS_AS(OrbifoldData("shifted-id", 2, {{"e", true, {{"c", 1, pt}}}}), InputError);
    CHECK_THROWS_AS(OrbifoldData("neg", 2,
                                 {{"e", true, {{"c", 0, pt}}}, {"g", false, {{"c", -1, pt}}}}),
                    InputError);
    BigradedPoly outside = BigradedPoly::monomial(6, 0, 1);  // x^3 on a surface
    CHECK_THROWS_AS(OrbifoldData("range", 2, {{"e", true, {{"c", 0, outside}}}}), InputError);
    BigradedPoly negcoeff;
    negcoeff.add_term(2, 2, -1);
    CHECK_THROWS_AS(OrbifoldData("negc", 2, {{"e", true, {{"c", 0, negcoeff}}}}), InputError);
    // identity sector is moved to the front
    OrbifoldData o("ok", 2, {{"g", false, {{"c", 1, pt}}}, {"e", true, {{"c", 0, pt}}}});
    CHECK(o.sectors().front().identity);
    CHECK(o.sectors().back().class_label == "g");
}

TEST_CASE("orbifold Hodge tables of the fixtures") {
    BigradedPoly kummer = orbifold_hodge_poly(fixture_kummer());
    CHECK(kummer == k3_hodge());
    CHECK(kummer.coeff_st(1, 1) == 20);
    CHECK(kummer.coeff_st(2, 0) == 1);
    CHECK(kummer.coeff_st(0, 2) == 1);
    CHECK(kummer.coeff_st(0, 0) == 1);
    CHECK(kummer.coeff_st(2, 2) == 1);
    CHECK(kummer.eval_pm(1, 1) == 24);

    BigradedPoly cp2z3 = orbifold_hodge_poly(fixture_cp2_z3());
    CHECK(cp2z3 == cp2_z3_resolution_hodge());
    CHECK(cp2z3.coeff_st(1, 1) == 7);
    CHECK(cp2z3.coeff_st(0, 0) == 1);
    CHECK(cp2z3.coeff_st(2, 2) == 1);

    for (int k : {2, 3, 5}) {
        BigradedPoly ale = orbifold_hodge_poly(fixture_ale(k));
        CHECK(ale.coeff_st(1, 1) == k - 1);
        CHECK(ale.coeff_st(2, 2) == 1);
    }
}

TEST_CASE("symmetric quotient series") {
    OrbifoldData kummer = fixture_kummer();
    SeriesQ s = symmetric_quotient_series(kummer, 3);
    CHECK(s.coeff(0) == BigradedPoly::one());

    BigradedPoly invariants = kummer.identity_sector().components[0].hodge;
    CHECK(s.coeff(1) == alternate_signs(invariants));
    CHECK(s.coeff(2) == alternate_signs(oracle::brute_sym_dims(invariants, 2)));
    CHECK(s.coeff(3) == alternate_signs(oracle::brute_sym_dims(invariants, 3)));
}

TEST_CASE("wreath series, product form, spot values") {
    OrbifoldData kummer = fixture_kummer();
    SeriesQ s = wreath_series_product(kummer, 3);
    CHECK(s.coeff(0) == BigradedPoly::one());
    CHECK(s.coeff(1) == alternate_signs(k3_hodge()));
    CHECK(s.coeff(2).coeff_st(1, 1) == 21);
    CHECK(s.coeff(2).eval_pm(1, 1) == 324);
}

TEST_CASE("product equals direct summation on the fixtures") {
    for (const auto& o : builtin_fixtures()) {
        INFO(o.name());
        CHECK(wreath_series_product(o, 4) == wreath_series_direct(o, 4));
    }
}

TEST_CASE("product equals direct summation on randomized data") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        OrbifoldData o = random_fixture(rng);
        INFO("trial " << trial << " dim " << o.dim());
        CHECK(wreath_series_product(o, 3) == wreath_series_direct(o, 3));
    }
}

TEST_CASE("direct summation validates class labels against a group") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    OrbifoldData kummer = fixture_kummer();
    CHECK(wreath_series_direct(z2, kummer, 2) == wreath_series_product(kummer, 2));
    CHECK_THROWS_AS(wreath_series_direct(FiniteGroup::cyclic(3), kummer, 2), InputError);
}

TEST_CASE("Hodge symmetry is preserved") {
    std::mt19937 rng(777);
    RandomFixtureOptions opt;
    opt.symmetric = true;
    for (int trial = 0; trial < 8; ++trial) {
        OrbifoldData o = random_fixture(rng, opt);
        for (const auto& [k, poly] : wreath_series_product(o, 3).coeffs())
            CHECK(is_xy_symmetric(poly));
        for (const auto& [k, poly] : wreath_series_direct(o, 3).coeffs())
            CHECK(is_xy_symmetric(poly));
    }
}

TEST_CASE("purely even inputs give nonnegative coefficients") {
    std::mt19937 rng(31337);
    RandomFixtureOptions opt;
    opt.even_only = true;
    for (int trial = 0; trial < 8; ++trial) {
        OrbifoldData o = random_fixture(rng, opt);
        for (const auto& [k, poly] : wreath_series_product(o, 3).coeffs())
            for (const auto& [mono, c] : poly.terms()) CHECK(c > 0);
        for (const auto& [k, poly] : wreath_series_direct(o, 3).coeffs())
            for (const auto& [mono, c] : poly.terms()) CHECK(c > 0);
    }
}

TEST_CASE("Euler specialization is the colored partition series") {
    for (const auto& o : builtin_fixtures()) {
        INFO(o.name());
        long long e = static_cast<long long>(orbifold_hodge_poly(o).eval_pm(1, 1));
        auto expected = oracle::colored_partition_series(e, 5);
        auto got = specialize(wreath_series_product(o, 5), 1, 1);
        for (int n = 0; n <= 5; ++n) CHECK(got[{n, 0}] == expected[n]);
    }
}
