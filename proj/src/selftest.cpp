#include "wreath/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "wreath/elliptic.hpp"
#include "wreath/fixtures.hpp"
#include "wreath/group.hpp"
#include "wreath/hilbert.hpp"
#include "wreath/json_io.hpp"
#include "wreath/orbifold.hpp"
#include "wreath/wreath_types.hpp"

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

void wreath_class_suite(SuiteResult& r) {
    auto fail = [&](std::string msg) {
        r.ok = false;
        if (r.detail.empty()) r.detail = std::move(msg);
    };

    struct Case {
        FiniteGroup group;
        int nmax;
    };
    std::vector<Case> cases;
    cases.push_back({FiniteGroup::cyclic(2), 4});
    cases.push_back({FiniteGroup::cyclic(3), 3});
    cases.push_back({FiniteGroup::symmetric(3), 2});

    for (const auto& [G, nmax] : cases)
        for (int n = 1; n <= nmax; ++n) {
            WreathGroup W = build_wreath(G, n);
            if (count_types(G, n) != W.group.num_classes()) {
                fail("class count mismatch for " + W.group.name());
                continue;
            }
            long long size_sum = 0;
            for (const auto& cls : W.group.classes()) {
                size_sum += static_cast<long long>(cls.members.size());
                WreathType t = type_of(G, W.elements[cls.rep]);
                for (int member : cls.members)
                    if (type_of(G, W.elements[member]) != t) {
                        fail("type not constant on a class of " + W.group.name() +
                             ", element " + W.elements[member].str());
                        break;
                    }
                if (centralizer_order(G, t) != cls.centralizer_order)
                    fail("centralizer formula off for type " + t.str(G) + " in " + W.group.name());
                if (class_size(G, t) != cls.members.size())
                    fail("class size off for type " + t.str(G) + " in " + W.group.name());
            }
            if (size_sum != W.group.order())
                fail("class sizes do not sum to |" + W.group.name() + "|");
        }
}

std::string series_mismatch_detail(const OrbifoldData& o, const SeriesQ& product,
                                   const SeriesQ& direct) {
    for (int n = 0; n <= product.qmax(); ++n) {
        std::string diff = first_poly_diff(product.coeff(n), direct.coeff(n));
        if (!diff.empty()) {
            std::ostringstream os;
            os << "product/direct mismatch at q^" << n << " " << diff << " on "
               << orbifold_to_json(o).dump();
            return os.str();
        }
    }
    return "";
}

void dual_path_suite(SuiteResult& r) {
    for (const auto& o : builtin_fixtures()) {
        std::string diff = series_mismatch_detail(o, wreath_series_product(o, 4),
                                                  wreath_series_direct(o, 4));
        if (!diff.empty()) {
            r.ok = false;
            r.detail = diff;
            return;
        }
    }
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 20; ++trial) {
        OrbifoldData o = random_fixture(rng);
        std::string diff = series_mismatch_detail(o, wreath_series_product(o, 3),
                                                  wreath_series_direct(o, 3));
        if (!diff.empty()) {
            r.ok = false;
            r.detail = "trial " + std::to_string(trial) + ": " + diff;
            return;
        }
    }
}

void hilbert_suite(SuiteResult& r) {
    struct Pair {
        SurfaceHodge surface;
        OrbifoldData trivial;
    };
    std::vector<Pair> pairs;
    pairs.push_back({make_surface("k3", true, k3_hodge()), fixture_trivial("k3", 2, k3_hodge())});
    pairs.push_back({make_surface("cp2", true, cp2_hodge()), fixture_trivial("cp2", 2, cp2_hodge())});
    for (const auto& [surface, trivial] : pairs) {
        SeriesQ lhs = goettsche_series(surface, 5);
        SeriesQ rhs = wreath_series_product(trivial, 5);
        if (lhs != rhs) {
            r.ok = false;
            r.detail = "hilbert series differs from trivial-group wreath series for " + surface.name;
            return;
        }
    }
}

void elliptic_suite(SuiteResult& r) {
    for (const auto& o : builtin_fixtures()) {
        if (o.dim() != 2) continue;
        CompareReport rep = verify_q0_consistency(o, 4);
        if (!rep.passed()) {
            r.ok = false;
            r.detail = "q0 consistency failed on " + o.name() + ": " + rep.str();
            return;
        }
    }
}

template <typename F>
SuiteResult timed(const std::string& name, F&& body) {
    SuiteResult r;
    r.name = name;
    auto start = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
    std::vector<SuiteResult> out;
    out.push_back(timed("wreath conjugacy combinatorics", wreath_class_suite));
    out.push_back(timed("product vs direct summation", dual_path_suite));
    out.push_back(timed("hilbert degeneration", hilbert_suite));
    out.push_back(timed("elliptic q=0 consistency", elliptic_suite));
    return out;
}

}  // namespace wreath
