#include "wreath/series.hpp"

#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

namespace {
const BigradedPoly kZero{};
}

SeriesQ::SeriesQ(int qmax, int pmax) : qmax_(qmax), pmax_(pmax) {
    if (qmax < 0 || pmax < 0) throw InputError("series truncation degrees must be >= 0");
}

SeriesQ SeriesQ::one(int qmax, int pmax) {
    SeriesQ s(qmax, pmax);
    s.set(0, 0, BigradedPoly::one());
    return s;
}

const BigradedPoly& SeriesQ::coeff(int q, int p) const {
    auto it = c_.find({q, p});
    return it == c_.end() ? kZero : it->second;
}

void SeriesQ::set(int q, int p, BigradedPoly v) {
    if (q < 0 || q > qmax_ || p < 0 || p > pmax_) return;
    if (v.is_zero())
        c_.erase({q, p});
    else
        c_[{q, p}] = std::move(v);
}

void SeriesQ::add(int q, int p, const BigradedPoly& v) {
    if (q < 0 || q > qmax_ || p < 0 || p > pmax_ || v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace({q, p}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& o) {
    if (qmax_ != o.qmax_ || pmax_ != o.pmax_)
        throw std::logic_error("series truncation boxes differ in +");
    for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
    return *this;
}

SeriesQ& SeriesQ::operator*=(const SeriesQ& o) {
    if (qmax_ != o.qmax_ || pmax_ != o.pmax_)
        throw std::logic_error("series truncation boxes differ in *");
    SeriesQ r(qmax_, pmax_);
    for (const auto& [ka, va] : c_) {
        for (const auto& [kb, vb] : o.c_) {
            int q = ka.first + kb.first, p = ka.second + kb.second;
            if (q > qmax_ || p > pmax_) continue;
            r.add(q, p, va * vb);
        }
    }
    *this = std::move(r);
    return *this;
}

bool SeriesQ::operator==(const SeriesQ& o) const {
    return qmax_ == o.qmax_ && pmax_ == o.pmax_ && c_ == o.c_;
}

namespace {

/* Expands a single factor (1 - M)^(-e) inside the truncation box.
 * For e >= 0 this is sum_k C(e+k-1, k) M^k; for e < 0 the finite sum
 * sum_k (-1)^k C(|e|, k) M^k, which terminates at k = |e|. */
SeriesQ factor_series(const ProductFactor& f, int qmax, int pmax) {
    if (f.qdeg == 0 && f.pdeg == 0)
        throw InputError("euler product factor with zero q- and p-degree diverges");
    if (f.qdeg < 0 || f.pdeg < 0)
        throw InputError("euler product factor with negative q- or p-degree");
    SeriesQ s(qmax, pmax);
    bool exterior = f.exponent < 0;
    Int e = exterior ? -f.exponent : f.exponent;
    for (long long k = 0;; ++k) {
        long long q = k * f.qdeg, p = k * f.pdeg;
        if (q > qmax || p > pmax) break;
        if (exterior && k > e) break;
        Int c = exterior ? binomial(e, k) : binomial(e + k - 1, k);
        if (exterior && k % 2 == 1) c = -c;
        s.add(static_cast<int>(q), static_cast<int>(p),
              BigradedPoly::monomial(f.s2 * static_cast<int>(k), f.t2 * static_cast<int>(k), c));
    }
    return s;
}

}  // namespace

SeriesQ euler_product(const std::vector<ProductFactor>& factors, int qmax, int pmax) {
    SeriesQ result = SeriesQ::one(qmax, pmax);
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        // factors entirely above the box contribute only their constant 1
        if (f.qdeg > qmax || f.pdeg > pmax) continue;
        result *= factor_series(f, qmax, pmax);
    }
    return result;
}

SeriesQ sym_series(const BigradedPoly& e_poly, int qmax) {
    std::vector<ProductFactor> factors;
    factors.reserve(e_poly.terms().size());
    for (const auto& [k, e] : e_poly.terms())
        factors.push_back({k.first, k.second, 1, 0, e});
    return euler_product(factors, qmax, 0);
}

std::map<SeriesQ::Key, Int> specialize(const SeriesQ& s, int xv, int yv) {
    if ((xv != 1 && xv != -1) || (yv != 1 && yv != -1))
        throw InputError("specialization values must be 1 or -1");
    std::map<SeriesQ::Key, Int> out;
    for (const auto& [k, v] : s.coeffs()) {
        Int val = v.eval_pm(xv, yv);
        if (val != 0) out[k] = val;
    }
    return out;
}

}  // namespace wreath
