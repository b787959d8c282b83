#include "wreath/elliptic.hpp"

#include <climits>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

void GenusTable::add(int m, int l2, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace({m, l2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
    if (m > qmax_in) qmax_in = m;
}

GenusTable chi_y0(const BigradedPoly& hodge, int d) {
    if (!is_hodge_table(hodge))
        throw InputError("chi_y0 requires a nonnegative integer Hodge table");
    GenusTable T;
    T.name = "chi_y0";
    T.d = d;
    for (const auto& [k, h] : hodge.terms()) {
        int st = (k.first + k.second) / 2;
        T.add(0, k.first - d, (st % 2 != 0) ? -h : h);  // l2 = 2s - d
    }
    return T;
}

SeriesQ dmvv_expand(const GenusTable& T, int pmax, int qmax) {
    std::vector<ProductFactor> factors;
    for (int n = 1; n <= pmax; ++n)
        for (int m = 0; m <= qmax; ++m) {
            long long row = static_cast<long long>(n) * m;
            if (row > T.qmax_in)
                throw InputError("genus table '" + T.name + "' provides rows up to q^" +
                                 std::to_string(T.qmax_in) + " but factor (p^" + std::to_string(n) +
                                 ", q^" + std::to_string(m) + ") needs c(" + std::to_string(row) +
                                 ", l)");
            auto lo = T.coeffs.lower_bound({static_cast<int>(row), INT_MIN});
            auto hi = T.coeffs.upper_bound({static_cast<int>(row), INT_MAX});
            for (auto it = lo; it != hi; ++it)
                factors.push_back({0, it->first.second, m, n, it->second});
        }
    return euler_product(factors, qmax, pmax);
}

CompareReport verify_q0_consistency(const OrbifoldData& O, int pmax) {
    CompareReport rep;
    rep.lhs_name = "dmvv_q0(" + O.name() + ")";
    rep.rhs_name = "chi_{-y} of wreath(" + O.name() + ")";
    rep.degree_symbol = "p";

    BigradedPoly h = orbifold_hodge_poly(O);
    SeriesQ side_a = dmvv_expand(chi_y0(h, O.dim()), pmax, 0);

    SeriesQ wreath_q = wreath_series_product(O, pmax);
    SeriesQ side_b(0, pmax);
    for (int N = 0; N <= pmax; ++N) {
        BigradedPoly specialized;
        for (const auto& [k, c] : wreath_q.coeff(N, 0).terms())
            specialized.add_term(0, k.first - N * O.dim(), c);  // x^s y^t -> y^(s - N d/2)
        side_b.set(0, N, std::move(specialized));
    }

    // side A lives in the (qmax=0, pmax) box as well
    rep.degrees = compare_series(side_a, side_b);
    return rep;
}

}  // namespace wreath
