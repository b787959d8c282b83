#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wreath/poly.hpp"

namespace wreath {

/*
 * Truncated formal power series in q (and optionally p) whose coefficients
 * are BigradedPoly values. Truncation is a hard box: degrees q <= qmax and
 * p <= pmax; every operation discards anything outside the box eagerly.
 * A series with pmax == 0 is effectively univariate in q.
 */
class SeriesQ {
public:
    using Key = std::pair<int, int>;  // (q-degree, p-degree)
    using CoeffMap = std::map<Key, BigradedPoly>;

    SeriesQ() : qmax_(0), pmax_(0) {}
    explicit SeriesQ(int qmax, int pmax = 0);

    static SeriesQ one(int qmax, int pmax = 0);

    int qmax() const { return qmax_; }
    int pmax() const { return pmax_; }

    const BigradedPoly& coeff(int q, int p = 0) const;
    void set(int q, int p, BigradedPoly v);
    void add(int q, int p, const BigradedPoly& v);

    const CoeffMap& coeffs() const { return c_; }

    SeriesQ& operator+=(const SeriesQ& o);
    SeriesQ& operator*=(const SeriesQ& o);
    friend SeriesQ operator*(SeriesQ a, const SeriesQ& b) { return a *= b; }
    friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }

    bool operator==(const SeriesQ& o) const;
    bool operator!=(const SeriesQ& o) const { return !(*this == o); }

private:
    int qmax_, pmax_;
    CoeffMap c_;  // zero polynomials are never stored
};

/*
 * One factor (1 - M)^(-e) of an Euler product, where the monomial
 * M = x^(s2/2) y^(t2/2) q^qdeg p^pdeg must have (qdeg, pdeg) != (0, 0)
 * and both degrees nonnegative. Negative exponents e give polynomial
 * (exterior) factors (1 - M)^|e|.
 */
struct ProductFactor {
    int s2 = 0, t2 = 0;
    int qdeg = 0, pdeg = 0;
    Int exponent = 0;
};

// Expands prod_i (1 - M_i)^(-e_i) exactly to the (qmax, pmax) truncation box.
// The empty factor list yields the constant series 1. A factor with
// qdeg == pdeg == 0 diverges and is rejected.
SeriesQ euler_product(const std::vector<ProductFactor>& factors, int qmax, int pmax = 0);

/*
 * Generating series of graded symmetric powers. For a bigraded super vector
 * space V described by its signed dimension table e (entries
 * e^{s,t} = (-1)^(s+t) dim V^{s,t}),
 *
 *   sum_n e(S^n V) q^n = prod_{s,t} (1 - x^s y^t q)^(-e^{s,t})
 *
 * Negative entries (odd classes) automatically become exterior factors.
 */
SeriesQ sym_series(const BigradedPoly& e_poly, int qmax);

// Substitutes x = xv, y = yv (each 1 or -1) in every coefficient.
std::map<SeriesQ::Key, Int> specialize(const SeriesQ& s, int xv, int yv);

}  // namespace wreath
