#pragma once

// Shared brute-force oracles for the test suites. These deliberately avoid
// the library's expansion code paths: symmetric powers are enumerated as
// explicit non-decreasing basis multisets, and colored partition counts are
// built by naive series convolution.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "wreath/bigint.hpp"
#include "wreath/group.hpp"
#include "wreath/poly.hpp"
#include "wreath/wreath_types.hpp"

namespace oracle {

// Dimension table of S^m(V) for V given by a Hodge table: multisets of
// basis vectors, non-decreasing in basis index, where vectors of odd total
// degree appear at most once.
inline wreath::BigradedPoly brute_sym_dims(const wreath::BigradedPoly& hodge, int m) {
    struct Item {
        int s2, t2;
        bool odd;
    };
    std::vector<Item> basis;
    for (const auto& [k, h] : hodge.terms())
        for (wreath::Int i = 0; i < h; ++i)
            basis.push_back({k.first, k.second, ((k.first + k.second) / 2) % 2 != 0});

    wreath::BigradedPoly dims;
    std::function<void(int, int, int, int)> rec = [&](int start, int left, int s2, int t2) {
        if (left == 0) {
            dims.add_term(s2, t2, 1);
            return;
        }
        for (int i = start; i < static_cast<int>(basis.size()); ++i)
            rec(basis[i].odd ? i + 1 : i, left - 1, s2 + basis[i].s2, t2 + basis[i].t2);
    };
    rec(0, m, 0, 0);
    return dims;
}

// Coefficients of prod_{r>=1} (1 - q^r)^(-e) up to q^nmax: partitions with e
// colors per part, by one naive convolution per part size.
inline std::vector<wreath::Int> colored_partition_series(long long e, int nmax) {
    std::vector<wreath::Int> acc(nmax + 1, 0);
    acc[0] = 1;
    for (int r = 1; r <= nmax; ++r) {
        std::vector<wreath::Int> factor(nmax + 1, 0);
        for (int k = 0; k * r <= nmax; ++k) factor[k * r] = wreath::binomial(wreath::Int(e) + k - 1, k);
        std::vector<wreath::Int> next(nmax + 1, 0);
        for (int i = 0; i <= nmax; ++i) {
            if (acc[i] == 0) continue;
            for (int j = 0; i + j <= nmax; ++j) next[i + j] += acc[i] * factor[j];
        }
        acc = std::move(next);
    }
    return acc;
}

struct WreathClassCheck {
    bool ok = true;
    std::string detail;
    int num_classes = 0;
};

// Brute-force cross-check of the type combinatorics on an explicit G wr S_n:
// conjugacy classes correspond one-to-one to types, the type-formula
// centralizer order matches the element-counting one, and class sizes sum to
// the group order.
inline WreathClassCheck check_wreath_classes(const wreath::FiniteGroup& G, int n,
                                             long long cap = wreath::kDefaultElementCap) {
    using namespace wreath;
    WreathClassCheck result;
    auto fail = [&](std::string msg) {
        result.ok = false;
        if (result.detail.empty()) result.detail = std::move(msg);
    };

    WreathGroup W = build_wreath(G, n, cap);
    result.num_classes = W.group.num_classes();

    std::map<WreathType, int> type_to_class;
    long long size_sum = 0;
    for (int ci = 0; ci < W.group.num_classes(); ++ci) {
        const ConjugacyClass& cls = W.group.classes()[ci];
        size_sum += static_cast<long long>(cls.members.size());

        WreathType rep_type = type_of(G, W.elements[cls.rep]);
        for (int member : cls.members)
            if (type_of(G, W.elements[member]) != rep_type) {
                fail("conjugate elements " + std::to_string(cls.rep) + " and " +
                     std::to_string(member) + " have different types in " + W.group.name());
                break;
            }
        if (auto [it, inserted] = type_to_class.emplace(rep_type, ci); !inserted)
            fail("type " + rep_type.str(G) + " shared by two classes of " + W.group.name());

        Int formula = centralizer_order(G, rep_type);
        if (Int(cls.centralizer_order) != formula)
            fail("centralizer of class " + std::to_string(ci) + " in " + W.group.name() + ": table " +
                 std::to_string(cls.centralizer_order) + " vs formula " + formula.str());
        if (Int(centralizer_size_brute(W.group, cls.rep)) != formula)
            fail("element-counted centralizer mismatch in " + W.group.name());
        if (class_size(G, rep_type) != cls.members.size())
            fail("class size mismatch in " + W.group.name());
    }

    if (Int(size_sum) != Int(W.group.order()))
        fail("class sizes do not sum to the group order of " + W.group.name());
    if (count_types(G, n) != result.num_classes)
        fail("count_types(" + G.name() + ", " + std::to_string(n) + ") = " +
             count_types(G, n).str() + " but brute force found " +
             std::to_string(result.num_classes) + " classes");
    if (static_cast<int>(enumerate_types(G, n).size()) != result.num_classes)
        fail("enumerate_types length disagrees with brute-force class count");

    return result;
}

}  // namespace oracle
