#pragma once

#include <map>
#include <string>
#include <utility>

#include "wreath/bigint.hpp"

namespace wreath {

/*
 * Exact Laurent polynomial in two variables x, y with integer coefficients,
 * supporting half-integer exponents. Exponents are stored doubled: the term
 * map is keyed by (s2, t2) meaning x^(s2/2) y^(t2/2). Ordinary Hodge tables
 * use even keys; the doubled representation makes prefactors like y^(-d/2)
 * exact for odd d without rational arithmetic.
 *
 * Invariant: no zero coefficient is ever stored.
 */
class BigradedPoly {
public:
    using Key = std::pair<int, int>;  // (s2, t2), doubled exponents
    using TermMap = std::map<Key, Int>;

    BigradedPoly() = default;

    static BigradedPoly constant(Int c);
    static BigradedPoly one() { return constant(1); }
    // x^(s2/2) y^(t2/2) * c
    static BigradedPoly monomial(int s2, int t2, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient at doubled exponents (0 if absent).
    Int coeff(int s2, int t2) const;
    // Coefficient at plain integer exponents (s, t).
    Int coeff_st(int s, int t) const { return coeff(2 * s, 2 * t); }

    // Adds c at (s2, t2), erasing the entry if the result is zero.
    void add_term(int s2, int t2, const Int& c);

    BigradedPoly& operator+=(const BigradedPoly& o);
    BigradedPoly& operator-=(const BigradedPoly& o);
    BigradedPoly& operator*=(const BigradedPoly& o);
    BigradedPoly& operator*=(const Int& c);
    BigradedPoly operator-() const;

    friend BigradedPoly operator+(BigradedPoly a, const BigradedPoly& b) { return a += b; }
    friend BigradedPoly operator-(BigradedPoly a, const BigradedPoly& b) { return a -= b; }
    friend BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b);
    friend BigradedPoly operator*(BigradedPoly a, const Int& c) { return a *= c; }

    bool operator==(const BigradedPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BigradedPoly& o) const { return terms_ != o.terms_; }

    // Substitutes x = xv, y = yv with xv, yv in {1, -1}. Rejects a value of
    // -1 on a half-integer exponent (the sign would be ambiguous).
    Int eval_pm(int xv, int yv) const;

    // Human-readable form with halved exponents; half-integers are printed
    // as fractions, e.g. x^(3/2).
    std::string str() const;

private:
    TermMap terms_;
};

// Multiplication by (xy)^n for integer n: every exponent pair shifts by (n, n).
BigradedPoly twist(const BigradedPoly& p, int n);

// Doubled-shift variant: multiplication by (xy)^(n2/2).
BigradedPoly twist2(const BigradedPoly& p, int n2);

// Turns a dimension table h^{s,t} into the signed table (-1)^(s+t) h^{s,t}.
// Requires integer exponents of even total degree parity bookkeeping, i.e.
// s2 + t2 divisible by 2; throws std::logic_error otherwise. Involutive.
BigradedPoly alternate_signs(const BigradedPoly& p);

// True when every coefficient satisfies c(s,t) == c(t,s).
bool is_xy_symmetric(const BigradedPoly& p);

// True when all stored coefficients are positive and all doubled exponents
// are even (i.e. a plausible Hodge dimension table).
bool is_hodge_table(const BigradedPoly& p);

}  // namespace wreath
