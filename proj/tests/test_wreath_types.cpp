#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wreath/group.hpp"
#include "wreath/wreath_types.hpp"

using namespace wreath;

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == std::vector<int>{4});
    CHECK(partitions_of(4).back() == std::vector<int>{1, 1, 1, 1});
    CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("enumerate_types counts") {
    FiniteGroup t = FiniteGroup::trivial();
    CHECK(enumerate_types(t, 0).size() == 1);
    CHECK(enumerate_types(t, 0).front().entries().empty());
    CHECK(enumerate_types(t, 4).size() == 5);  // p(4)

    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK(enumerate_types(z2, 0).size() == 1);
    CHECK(enumerate_types(z2, 2).size() == 5);

    // no duplicates, all of size n
    for (int n = 0; n <= 5; ++n) {
        auto types = enumerate_types(z2, n);
        std::set<WreathType> distinct(types.begin(), types.end());
        CHECK(distinct.size() == types.size());
        for (const auto& ty : types) CHECK(ty.n() == n);
        CHECK(count_types(z2, n) == Int(types.size()));
    }
}

TEST_CASE("enumeration order is canonical and reproducible") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto types = enumerate_types(z2, 2);
    REQUIRE(types.size() == 5);
    CHECK(types[0].str(z2) == "[c0:(2)]");
    CHECK(types[1].str(z2) == "[c0:(1,1)]");
    CHECK(types[2].str(z2) == "[c0:(1)][c1:(1)]");
    CHECK(types[3].str(z2) == "[c1:(2)]");
    CHECK(types[4].str(z2) == "[c1:(1,1)]");
}

TEST_CASE("centralizer order formula") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FiniteGroup t = FiniteGroup::trivial();

    // identity type: the whole group
    WreathType idt;
    idt.add(0, 1, 3);
    CHECK(centralizer_order(z2, idt) == Int(8 * 6));  // |G|^n n! = 2^3 3!

    // single n-cycle over the trivial group: cyclic of order n
    for (int n = 2; n <= 5; ++n) {
        WreathType cyc;
        cyc.add(0, n, 1);
        CHECK(centralizer_order(t, cyc) == Int(n));
    }

    // one 2-cycle with nontrivial cycle-product in Z2 wr S2: order 4
    WreathType tw;
    tw.add(1, 2, 1);
    CHECK(centralizer_order(z2, tw) == Int(4));
    CHECK(class_size(z2, tw) == Int(2));

    // brute-force confirmation inside the order-8 group: ((x,e), swap)
    WreathGroup w = build_wreath(z2, 2);
    WreathElement a{{1, 0}, {1, 0}};
    CHECK(type_of(z2, a) == tw);
    CHECK(centralizer_size_brute(w.group, w.index_of(a)) == 4);
}

TEST_CASE("class sizes") {
    FiniteGroup t = FiniteGroup::trivial();
    WreathType idt;
    idt.add(0, 1, 4);
    CHECK(class_size(t, idt) == Int(1));

    WreathType three;
    three.add(0, 3, 1);
    CHECK(class_size(t, three) == Int(2));  // two 3-cycles in S3
}

TEST_CASE("class sizes sum to the group order") {
    std::vector<FiniteGroup> groups;
    groups.push_back(FiniteGroup::trivial());
    groups.push_back(FiniteGroup::cyclic(2));
    groups.push_back(FiniteGroup::cyclic(3));
    groups.push_back(FiniteGroup::cyclic(4));
    groups.push_back(FiniteGroup::cyclic(6));
    groups.push_back(FiniteGroup::symmetric(3));
    groups.push_back(FiniteGroup::dihedral(2));
    for (const auto& G : groups)
        for (int n = 0; n <= 6; ++n) {
            Int total = 0;
            for (const auto& ty : enumerate_types(G, n)) total += class_size(G, ty);
            Int expected = factorial(n);
            for (int i = 0; i < n; ++i) expected *= G.order();
            CHECK(total == expected);
        }
}

TEST_CASE("types realized by explicit elements") {
    // every enumerated type appears among brute-force classes and vice versa
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    WreathGroup w = build_wreath(z3, 3);
    std::set<WreathType> enumerated;
    for (const auto& ty : enumerate_types(z3, 3)) enumerated.insert(ty);
    std::set<WreathType> realized;
    for (const auto& cls : w.group.classes()) realized.insert(type_of(z3, w.elements[cls.rep]));
    CHECK(enumerated == realized);
}
