#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/poly.hpp"
#include "wreath/series.hpp"

namespace wreath {

// Exact fraction used for age/shift bookkeeping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);  // normalizes, den > 0
    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;
};

// Sum of rotation weights theta_j, each required to lie in [0, 1).
// Integrality is the caller's concern; quotient sector data demands it.
Rational shift_from_weights(const std::vector<Rational>& thetas);

/*
 * One connected component of a fixed-point-set quotient: its Hodge
 * dimension table (nonnegative, integer bidegrees within [0, d]^2) and the
 * integer age shift attached to the component.
 */
struct SectorComponent {
    std::string label;
    int shift = 0;
    BigradedPoly hodge;
};

struct Sector {
    std::string class_label;
    bool identity = false;
    std::vector<SectorComponent> components;
};

/*
 * Numerical sector data of a global quotient orbifold Y/G of even complex
 * dimension d: per conjugacy class of G, the list of fixed-component
 * quotients with their Hodge tables and shifts. This is pure input data —
 * no geometry is computed from it. Validation: d even and positive, exactly
 * one identity sector whose components all carry shift 0, shifts >= 0, and
 * every table a Hodge table with bidegrees in [0, d]^2.
 *
 * The identity sector is stored first; remaining sectors keep their given
 * order.
 */
class OrbifoldData {
public:
    OrbifoldData(std::string name, int dim, std::vector<Sector> sectors);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<Sector>& sectors() const { return sectors_; }
    const Sector& identity_sector() const { return sectors_.front(); }

private:
    std::string name_;
    int dim_;
    std::vector<Sector> sectors_;
};

// Age shift of an r-cycle sector over a component of shift F: F + (r-1)d/2.
int wreath_shift(int F, int r, int d);

// h(Y, G; x, y): sum over sectors and components of the component table
// twisted by its shift.
BigradedPoly orbifold_hodge_poly(const OrbifoldData& o);

// Generating series of e(Y^n / (G wr S_n)^~; x, y) for the plain quotients
// Y^n/Gamma_n, which only sees the untwisted invariants h(Y/G):
// sym_series of e(Y/G).
SeriesQ symmetric_quotient_series(const OrbifoldData& o, int qmax);

/*
 * Orbifold Hodge series of the wreath quotients, closed product form:
 *
 *   sum_n e(Y^n, Gamma_n; x,y) q^n
 *     = prod_{r>=1} prod_{s,t} (1 - x^s y^t q^r (xy)^((r-1)d/2))^(-e^{s,t}(Y,G))
 *
 * The constant term 1 is included.
 */
SeriesQ wreath_series_product(const OrbifoldData& o, int qmax);

/*
 * The same series assembled the long way: for each n, sum over all
 * conjugacy types {m_r(c)} of size n and over all distributions of each
 * m_r(c) among the N_c components, multiplying graded symmetric powers of
 * the component tables with their accumulated twists. Symmetric powers are
 * taken by explicit multiset enumeration over a basis, so this path shares
 * no expansion machinery with the product form — it is the independent
 * cross-check.
 */
SeriesQ wreath_series_direct(const OrbifoldData& o, int qmax);

// Variant that first checks the sector labels against an explicit group:
// the sector count must equal the number of conjugacy classes of G.
SeriesQ wreath_series_direct(const FiniteGroup& G, const OrbifoldData& o, int qmax);

}  // namespace wreath
