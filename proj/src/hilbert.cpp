#include "wreath/hilbert.hpp"

#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

SurfaceHodge make_surface(std::string name, bool compact, BigradedPoly hodge) {
    if (!is_hodge_table(hodge))
        throw InputError("surface '" + name + "': table has negative entries or half-integer exponents");
    for (const auto& [k, c] : hodge.terms())
        if (k.first < 0 || k.second < 0 || k.first > 4 || k.second > 4)
            throw InputError("surface '" + name + "': bidegree outside [0,2]^2");
    if (compact && !is_xy_symmetric(hodge))
        throw InputError("surface '" + name + "': compact surface table must satisfy h^{s,t} = h^{t,s}");
    return SurfaceHodge{std::move(name), compact, std::move(hodge)};
}

SeriesQ goettsche_series(const SurfaceHodge& X, int qmax) {
    BigradedPoly e = alternate_signs(X.hodge);
    std::vector<ProductFactor> factors;
    for (int r = 1; r <= qmax; ++r)
        for (const auto& [k, coeff] : e.terms())
            factors.push_back({k.first + 2 * (r - 1), k.second + 2 * (r - 1), r, 0, coeff});
    return euler_product(factors, qmax, 0);
}

bool CompareReport::passed() const {
    if (!hypothesis_ok) return false;
    for (const auto& d : degrees)
        if (!d.equal) return false;
    return true;
}

std::string CompareReport::str() const {
    std::ostringstream os;
    os << lhs_name << " vs " << rhs_name << ":\n";
    if (!hypothesis_ok) {
        os << "  hypothesis violated: " << hypothesis_detail << "\n";
        return os.str();
    }
    for (const auto& d : degrees) {
        os << "  " << degree_symbol << "^" << d.degree << ": "
           << (d.equal ? "equal" : "MISMATCH " + d.detail) << "\n";
    }
    return os.str();
}

namespace {

std::string mono_str(int s2, int t2) {
    if (s2 == 0 && t2 == 0) return "1";
    BigradedPoly m = BigradedPoly::monomial(s2, t2, 1);
    return m.str();
}

}  // namespace

std::string first_poly_diff(const BigradedPoly& lhs, const BigradedPoly& rhs) {
    BigradedPoly diff = lhs - rhs;
    if (diff.is_zero()) return "";
    auto [k, c] = *diff.terms().begin();
    std::ostringstream os;
    os << "at " << mono_str(k.first, k.second) << ": lhs=" << lhs.coeff(k.first, k.second)
       << " rhs=" << rhs.coeff(k.first, k.second);
    return os.str();
}

std::vector<DegreeCompare> compare_series(const SeriesQ& lhs, const SeriesQ& rhs) {
    std::vector<DegreeCompare> out;
    for (int p = 0; p <= lhs.pmax(); ++p)
        for (int q = 0; q <= lhs.qmax(); ++q) {
            std::string diff = first_poly_diff(lhs.coeff(q, p), rhs.coeff(q, p));
            int degree = lhs.pmax() > 0 ? p : q;
            out.push_back({degree, diff.empty(), std::move(diff)});
        }
    return out;
}

CompareReport verify_samehodge(const OrbifoldData& O, const SurfaceHodge& X, int qmax) {
    if (O.dim() != 2)
        throw InputError("Hilbert scheme comparison requires a surface orbifold (dim 2), got dim " +
                         std::to_string(O.dim()));
    CompareReport rep;
    rep.lhs_name = "hilbert(" + X.name + ")";
    rep.rhs_name = "wreath(" + O.name() + ")";

    std::string hyp = first_poly_diff(X.hodge, orbifold_hodge_poly(O));
    if (!hyp.empty()) {
        rep.hypothesis_ok = false;
        rep.hypothesis_detail = "h(X) != h(Y,G) " + hyp;
        return rep;
    }
    rep.degrees = compare_series(goettsche_series(X, qmax), wreath_series_product(O, qmax));
    return rep;
}

CompareReport verify_cor1(const OrbifoldData& O, const OrbifoldData& X_trivial, int qmax) {
    if (O.dim() % 2 != 0 || X_trivial.dim() % 2 != 0)
        throw InputError("orbifold dimensions must be even");
    if (O.dim() != X_trivial.dim())
        throw InputError("orbifold dimensions differ: " + std::to_string(O.dim()) + " vs " +
                         std::to_string(X_trivial.dim()));
    if (X_trivial.sectors().size() != 1)
        throw InputError("resolution datum '" + X_trivial.name() +
                         "' must be trivially twisted (single identity sector)");

    CompareReport rep;
    rep.lhs_name = "sym(" + X_trivial.name() + ")";
    rep.rhs_name = "wreath(" + O.name() + ")";

    std::string hyp = first_poly_diff(orbifold_hodge_poly(X_trivial), orbifold_hodge_poly(O));
    if (!hyp.empty()) {
        rep.hypothesis_ok = false;
        rep.hypothesis_detail = "h(X) != h(Y,G) " + hyp;
        return rep;
    }
    rep.degrees = compare_series(wreath_series_product(X_trivial, qmax), wreath_series_product(O, qmax));
    return rep;
}

}  // namespace wreath
