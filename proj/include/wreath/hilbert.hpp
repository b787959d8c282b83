#pragma once

#include <string>
#include <vector>

#include "wreath/orbifold.hpp"
#include "wreath/poly.hpp"
#include "wreath/series.hpp"

namespace wreath {

// Hodge table of a surface, bidegrees within [0,2]^2. Compact surfaces must
// have a symmetric table; virtual (compactly supported) tables may not.
struct SurfaceHodge {
    std::string name;
    bool compact = true;
    BigradedPoly hodge;
};

// Validating constructor helper.
SurfaceHodge make_surface(std::string name, bool compact, BigradedPoly hodge);

/*
 * Hodge-number generating series of the Hilbert schemes of points X^[n]:
 *
 *   sum_n e(X^[n]; x,y) q^n
 *     = prod_{r>=1} prod_{s,t} (1 - x^s y^t q^r (xy)^(r-1))^(-e^{s,t}(X)),
 *
 * expanded exactly to q^qmax (constant term 1 included).
 */
SeriesQ goettsche_series(const SurfaceHodge& X, int qmax);

struct DegreeCompare {
    int degree = 0;
    bool equal = true;
    std::string detail;  // first differing monomial with both values
};

struct CompareReport {
    std::string lhs_name, rhs_name;
    std::string degree_symbol = "q";
    bool hypothesis_ok = true;
    std::string hypothesis_detail;
    std::vector<DegreeCompare> degrees;

    bool passed() const;
    std::string str() const;
};

// First differing monomial of two polynomials, rendered with both values;
// empty string when equal.
std::string first_poly_diff(const BigradedPoly& lhs, const BigradedPoly& rhs);

// Degree-by-degree comparison of two series (empty report entries when the
// boxes differ are not possible; boxes must match).
std::vector<DegreeCompare> compare_series(const SeriesQ& lhs, const SeriesQ& rhs);

/*
 * Checks that the Hilbert-scheme series of the resolution X agrees with the
 * wreath orbifold series of (Y, G), coefficient-for-coefficient up to qmax.
 * The hypothesis h(X) = h(Y, G) is tested first; when it fails the result is
 * a hypothesis-violation report rather than a series mismatch. Dimension
 * must be 2 (the Hilbert scheme resolution only exists for surfaces).
 */
CompareReport verify_samehodge(const OrbifoldData& O, const SurfaceHodge& X, int qmax);

/*
 * Higher-dimensional variant: compares the wreath orbifold series of (Y, G)
 * against the symmetric-group orbifold series of a resolution X with the
 * same Hodge numbers. X is supplied as a trivially twisted orbifold (single
 * identity sector) of matching even dimension.
 */
CompareReport verify_cor1(const OrbifoldData& O, const OrbifoldData& X_trivial, int qmax);

}  // namespace wreath
