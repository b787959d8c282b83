#include "wreath/fixtures.hpp"

namespace wreath {

BigradedPoly k3_hodge() {
    BigradedPoly h;
    h.add_term(0, 0, 1);
    h.add_term(4, 0, 1);
    h.add_term(0, 4, 1);
    h.add_term(2, 2, 20);
    h.add_term(4, 4, 1);
    return h;
}

BigradedPoly cp2_hodge() {
    BigradedPoly h;
    h.add_term(0, 0, 1);
    h.add_term(2, 2, 1);
    h.add_term(4, 4, 1);
    return h;
}

BigradedPoly cp2_z3_resolution_hodge() {
    BigradedPoly h;
    h.add_term(0, 0, 1);
    h.add_term(2, 2, 7);
    h.add_term(4, 4, 1);
    return h;
}

OrbifoldData fixture_kummer() {
    // invariants of the abelian surface under x -> -x:
    // spanned by 1, dz1^dz2, the four dz^j ^ dzbar^k, dzbar1^dzbar2, the volume form
    BigradedPoly invariants;
    invariants.add_term(0, 0, 1);
    invariants.add_term(4, 0, 1);
    invariants.add_term(2, 2, 4);
    invariants.add_term(0, 4, 1);
    invariants.add_term(4, 4, 1);

    std::vector<Sector> sectors;
    sectors.push_back({"e", true, {{"T4/Z2", 0, invariants}}});
    Sector tau{"tau", false, {}};
    for (int i = 0; i < 16; ++i)
        tau.components.push_back({"p" + std::to_string(i), 1, BigradedPoly::one()});
    sectors.push_back(std::move(tau));
    return OrbifoldData("kummer", 2, std::move(sectors));
}

OrbifoldData fixture_cp2_z3() {
    std::vector<Sector> sectors;
    sectors.push_back({"e", true, {{"CP2/Z3", 0, cp2_hodge()}}});
    for (int c = 1; c <= 2; ++c) {
        Sector s{"a" + std::to_string(c), false, {}};
        for (int i = 0; i < 3; ++i)
            s.components.push_back({"p" + std::to_string(i), 1, BigradedPoly::one()});
        sectors.push_back(std::move(s));
    }
    return OrbifoldData("cp2_z3", 2, std::move(sectors));
}

OrbifoldData fixture_ale(int num_classes) {
    std::vector<Sector> sectors;
    sectors.push_back({"e", true, {{"C2/G", 0, BigradedPoly::monomial(4, 4, 1)}}});
    for (int c = 1; c < num_classes; ++c)
        sectors.push_back({"c" + std::to_string(c), false, {{"origin", 1, BigradedPoly::one()}}});
    return OrbifoldData("ale" + std::to_string(num_classes), 2, std::move(sectors));
}

OrbifoldData fixture_trivial(const std::string& name, int dim, const BigradedPoly& hodge) {
    std::vector<Sector> sectors;
    sectors.push_back({"e", true, {{name, 0, hodge}}});
    return OrbifoldData(name, dim, std::move(sectors));
}

std::vector<OrbifoldData> builtin_fixtures() {
    std::vector<OrbifoldData> out;
    out.push_back(fixture_kummer());
    out.push_back(fixture_cp2_z3());
    out.push_back(fixture_ale(2));
    out.push_back(fixture_ale(3));
    out.push_back(fixture_ale(5));
    out.push_back(fixture_trivial("k3", 2, k3_hodge()));
    out.push_back(fixture_trivial("cp2", 2, cp2_hodge()));
    return out;
}

OrbifoldData random_fixture(std::mt19937& rng, const RandomFixtureOptions& opt) {
    auto roll = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int d = roll(0, 1) ? 2 : 4;
    int num_classes = roll(1, opt.max_classes);

    auto random_table = [&]() {
        BigradedPoly h;
        for (int s = 0; s <= d; ++s)
            for (int t = 0; t <= d; ++t) {
                if (opt.even_only && (s + t) % 2 != 0) continue;
                if (opt.symmetric && t < s) continue;
                int c = roll(0, opt.max_entry);
                if (c == 0) continue;
                h.add_term(2 * s, 2 * t, c);
                if (opt.symmetric && t > s) h.add_term(2 * t, 2 * s, c);
            }
        if (h.is_zero()) h.add_term(0, 0, 1);  // keep sectors nonempty
        return h;
    };

    std::vector<Sector> sectors;
    sectors.push_back({"e", true, {{"u0", 0, random_table()}}});
    for (int c = 1; c < num_classes; ++c) {
        Sector s{"c" + std::to_string(c), false, {}};
        int ncomp = roll(1, opt.max_components);
        for (int i = 0; i < ncomp; ++i)
            s.components.push_back({"f" + std::to_string(i), roll(0, 2), random_table()});
        sectors.push_back(std::move(s));
    }
    return OrbifoldData("random", d, std::move(sectors));
}

}  // namespace wreath
