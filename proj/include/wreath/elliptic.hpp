#pragma once

#include <map>
#include <string>
#include <utility>

#include "wreath/hilbert.hpp"
#include "wreath/orbifold.hpp"

namespace wreath {

/*
 * Two-variable elliptic genus coefficient table: c(m, l) with m the
 * q-degree and l the y-exponent (stored doubled as l2, so half-integer
 * exponents arising from odd-dimensional prefactors y^(-d/2) stay exact).
 * qmax_in is the largest m for which the table is declared complete; rows
 * of zeros count as provided.
 */
struct GenusTable {
    std::string name;
    int d = 2;
    int qmax_in = 0;
    std::map<std::pair<int, int>, Int> coeffs;  // (m, l2) -> c, zeros not stored

    void add(int m, int l2, const Int& c);
};

// q^0 row of the genus of a space with Hodge table H:
// chi(Y; 0, y) = y^(-d/2) sum_{s,t} (-1)^t (-y)^s h^{s,t}
//             = sum_{s,t} (-1)^(s+t) h^{s,t} y^(s - d/2).
GenusTable chi_y0(const BigradedPoly& hodge, int d);

/*
 * Second-quantized expansion: from the genus table of Y/G, the generating
 * series over all wreath quotients,
 *
 *   sum_N p^N chi(Y^N, Gamma_N; q, y)
 *     = prod_{n>0, m>=0, l} (1 - p^n q^m y^l)^(-c(nm, l)),
 *
 * expanded exactly to the (qmax, pmax) box. Every factor (n, m) inside the
 * box samples row n*m of the table; if that row is beyond qmax_in the input
 * is too shallow and an error names the missing row.
 */
SeriesQ dmvv_expand(const GenusTable& T, int pmax, int qmax);

/*
 * q = 0 consistency of the product formula against the Hodge-theoretic
 * wreath series. Side A expands the product from the m = 0 genus row of
 * orbifold_hodge_poly(O); side B applies the chi_{-y} specialization
 * (x^s y^t -> y^s, times y^(-N d/2) at p^N) to wreath_series_product.
 * Both sides are Laurent polynomials in y per p-degree; compared exactly.
 */
CompareReport verify_q0_consistency(const OrbifoldData& O, int pmax);

}  // namespace wreath
