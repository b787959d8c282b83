#pragma once

#include <random>
#include <string>
#include <vector>

#include "wreath/orbifold.hpp"

namespace wreath {

// Hodge tables of the standard surfaces used throughout.
BigradedPoly k3_hodge();                 // 1 + x^2 + 20xy + y^2 + x^2y^2
BigradedPoly cp2_hodge();                // 1 + xy + x^2y^2
BigradedPoly cp2_z3_resolution_hodge();  // 1 + 7xy + x^2y^2

// Abelian surface with the sign involution: untwisted Z2-invariants plus 16
// fixed points of shift 1. Its orbifold Hodge table equals the K3 table.
OrbifoldData fixture_kummer();

// CP^2 with the weight-(1,2) Z3 action: three fixed points in each of the
// two nontrivial sectors, all of shift 1.
OrbifoldData fixture_cp2_z3();

// C^2 by a finite subgroup of SL2 with num_classes conjugacy classes, in
// compactly supported cohomology: untwisted sector x^2y^2, one shift-1 point
// per nontrivial class.
OrbifoldData fixture_ale(int num_classes);

// Wraps a plain Hodge table as the orbifold of the trivial group action.
OrbifoldData fixture_trivial(const std::string& name, int dim, const BigradedPoly& hodge);

// All named fixtures above (Kummer, CP2/Z3, ALE with 2/3/5 classes, K3 and
// CP^2 as trivial orbifolds), for sweep-style checks.
std::vector<OrbifoldData> builtin_fixtures();

struct RandomFixtureOptions {
    int max_classes = 3;       // number of sectors including identity
    int max_components = 2;    // per nontrivial sector
    int max_entry = 3;         // coefficient bound per table cell
    bool even_only = false;    // restrict to even total degree entries
    bool symmetric = false;    // force h^{s,t} = h^{t,s}
};

// Small random sector datum with d in {2, 4}; deterministic for a given rng
// state. Used by the self-test and the property suites.
OrbifoldData random_fixture(std::mt19937& rng, const RandomFixtureOptions& opt = {});

}  // namespace wreath
