#include "wreath/orbifold.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "wreath/error.hpp"
#include "wreath/wreath_types.hpp"

namespace wreath {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational shift_from_weights(const std::vector<Rational>& thetas) {
    long long num = 0, den = 1;
    for (const auto& t : thetas) {
        if (t.num < 0 || t.num >= t.den)
            throw InputError("rotation weight " + std::to_string(t.num) + "/" +
                             std::to_string(t.den) + " outside [0,1)");
        num = num * t.den + t.num * den;
        den *= t.den;
        long long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    return Rational(num, den);
}

OrbifoldData::OrbifoldData(std::string name, int dim, std::vector<Sector> sectors)
    : name_(std::move(name)), dim_(dim), sectors_(std::move(sectors)) {
    if (dim_ <= 0 || dim_ % 2 != 0)
        throw InputError("orbifold '" + name_ + "': complex dimension must be even and positive, got " +
                         std::to_string(dim_));
    int identity_at = -1;
    for (size_t i = 0; i < sectors_.size(); ++i) {
        if (!sectors_[i].identity) continue;
        if (identity_at >= 0)
            throw InputError("orbifold '" + name_ + "': more than one identity sector");
        identity_at = static_cast<int>(i);
    }
    if (identity_at < 0)
        throw InputError("orbifold '" + name_ + "': no identity sector");
    // move the identity sector to the front, preserving the order of the rest
    std::rotate(sectors_.begin(), sectors_.begin() + identity_at,
                sectors_.begin() + identity_at + 1);

    for (const auto& sec : sectors_) {
        if (sec.components.empty())
            throw InputError("orbifold '" + name_ + "': sector '" + sec.class_label +
                             "' has no components");
        for (const auto& comp : sec.components) {
            if (comp.shift < 0)
                throw InputError("orbifold '" + name_ + "': component '" + comp.label +
                                 "' has negative shift");
            if (sec.identity && comp.shift != 0)
                throw InputError("orbifold '" + name_ + "': identity component '" + comp.label +
                                 "' must have shift 0");
            if (!is_hodge_table(comp.hodge))
                throw InputError("orbifold '" + name_ + "': component '" + comp.label +
                                 "' table has negative entries or half-integer exponents");
            for (const auto& [k, c] : comp.hodge.terms())
                if (k.first < 0 || k.second < 0 || k.first > 2 * dim_ || k.second > 2 * dim_)
                    throw InputError("orbifold '" + name_ + "': component '" + comp.label +
                                     "' has bidegree outside [0," + std::to_string(dim_) + "]^2");
        }
    }
}

int wreath_shift(int F, int r, int d) {
    if (d % 2 != 0) throw InputError("wreath shift requires even complex dimension");
    return F + (r - 1) * (d / 2);
}

BigradedPoly orbifold_hodge_poly(const OrbifoldData& o) {
    BigradedPoly h;
    for (const auto& sec : o.sectors())
        for (const auto& comp : sec.components) h += twist(comp.hodge, comp.shift);
    return h;
}

SeriesQ symmetric_quotient_series(const OrbifoldData& o, int qmax) {
    BigradedPoly quotient_hodge;
    for (const auto& comp : o.identity_sector().components) quotient_hodge += comp.hodge;
    return sym_series(alternate_signs(quotient_hodge), qmax);
}

SeriesQ wreath_series_product(const OrbifoldData& o, int qmax) {
    BigradedPoly e = alternate_signs(orbifold_hodge_poly(o));
    std::vector<ProductFactor> factors;
    for (int r = 1; r <= qmax; ++r) {
        int shift2 = (r - 1) * o.dim();  // doubled exponent of (xy)^((r-1)d/2)
        for (const auto& [k, coeff] : e.terms())
            factors.push_back({k.first + shift2, k.second + shift2, r, 0, coeff});
    }
    return euler_product(factors, qmax, 0);
}

namespace {

/* Dimension table of the m-th graded symmetric power, by explicit multiset
 * enumeration over a basis: vectors of odd total degree may appear at most
 * once, even ones arbitrarily often. */
BigradedPoly sym_power_dims_enum(const BigradedPoly& hodge, int m) {
    struct Item {
        int s2, t2;
        bool odd;
    };
    std::vector<Item> items;
    for (const auto& [k, h] : hodge.terms()) {
        bool odd = ((k.first + k.second) / 2) % 2 != 0;
        for (Int i = 0; i < h; ++i) items.push_back({k.first, k.second, odd});
    }
    if (items.size() > 100)
        throw SizeError("symmetric power enumeration over " + std::to_string(items.size()) +
                        " basis vectors is out of the supported brute-force range");
    BigradedPoly dims;
    std::function<void(size_t, int, int, int)> rec = [&](size_t idx, int rem, int s2, int t2) {
        if (rem == 0) {
            dims.add_term(s2, t2, 1);
            return;
        }
        if (idx == items.size()) return;
        const Item& it = items[idx];
        int maxk = it.odd ? 1 : rem;
        if (maxk > rem) maxk = rem;
        for (int take = 0; take <= maxk; ++take)
            rec(idx + 1, rem - take, s2 + take * it.s2, t2 + take * it.t2);
    };
    rec(0, m, 0, 0);
    return dims;
}

struct TypeEntry {
    int sector;  // index into OrbifoldData::sectors()
    int r;
    int mult;
};

}  // namespace

SeriesQ wreath_series_direct(const OrbifoldData& o, int qmax) {
    const auto& sectors = o.sectors();
    int num_classes = static_cast<int>(sectors.size());

    // e-polynomial of S^m(component table), memoized per (sector, component, m)
    std::map<std::tuple<int, int, int>, BigradedPoly> sym_cache;
    auto sym_e = [&](int sec, int comp, int m) -> const BigradedPoly& {
        auto key = std::make_tuple(sec, comp, m);
        auto it = sym_cache.find(key);
        if (it == sym_cache.end()) {
            BigradedPoly dims = sym_power_dims_enum(sectors[sec].components[comp].hodge, m);
            it = sym_cache.emplace(key, alternate_signs(dims)).first;
        }
        return it->second;
    };

    SeriesQ series(qmax, 0);
    series.set(0, 0, BigradedPoly::one());

    for (int n = 1; n <= qmax; ++n) {
        BigradedPoly total;
        for (const auto& type : enumerate_types_k(num_classes, n)) {
            std::vector<TypeEntry> entries;
            for (const auto& [k, m] : type.entries()) entries.push_back({k.first, k.second, m});

            /* Sum over all ways of distributing the m_r(c) cycles of each
             * (class, r) entry among the N_c fixed components; each choice
             * contributes the product of twisted symmetric powers, the twist
             * of a block of size m being m * (F + (r-1)d/2). */
            std::function<void(size_t, const BigradedPoly&)> over_entries =
                [&](size_t ei, const BigradedPoly& acc) {
                    if (ei == entries.size()) {
                        total += acc;
                        return;
                    }
                    const TypeEntry& te = entries[ei];
                    const auto& comps = sectors[te.sector].components;
                    int ncomp = static_cast<int>(comps.size());
                    std::function<void(int, int, const BigradedPoly&)> over_comps =
                        [&](int ci, int rem, const BigradedPoly& part) {
                            if (ci == ncomp - 1) {
                                int m = rem;
                                BigradedPoly factor = part;
                                if (m > 0)
                                    factor *= twist(sym_e(te.sector, ci, m),
                                                    m * wreath_shift(comps[ci].shift, te.r, o.dim()));
                                over_entries(ei + 1, acc * factor);
                                return;
                            }
                            for (int m = 0; m <= rem; ++m) {
                                BigradedPoly next = part;
                                if (m > 0)
                                    next *= twist(sym_e(te.sector, ci, m),
                                                  m * wreath_shift(comps[ci].shift, te.r, o.dim()));
                                over_comps(ci + 1, rem - m, next);
                            }
                        };
                    over_comps(0, te.mult, BigradedPoly::one());
                };
            over_entries(0, BigradedPoly::one());
        }
        series.set(n, 0, std::move(total));
    }
    return series;
}

SeriesQ wreath_series_direct(const FiniteGroup& G, const OrbifoldData& o, int qmax) {
    if (static_cast<int>(o.sectors().size()) != G.num_classes())
        throw InputError("orbifold '" + o.name() + "' has " +
                         std::to_string(o.sectors().size()) + " sectors but group " + G.name() +
                         " has " + std::to_string(G.num_classes()) + " conjugacy classes");
    return wreath_series_direct(o, qmax);
}

}  // namespace wreath
