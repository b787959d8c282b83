#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreath/bigint.hpp"
#include "wreath/group.hpp"

namespace wreath {

/*
 * Combinatorial type of a wreath product element: a partition-valued
 * function on the conjugacy classes of the base group, stored as
 * multiplicities m_r(c) = number of r-cycles whose cycle-product lies in
 * class c. Total size sum r * m_r(c) = n. Two elements of G wr S_n are
 * conjugate exactly when their types agree, so this is the class invariant.
 */
class WreathType {
public:
    using Key = std::pair<int, int>;  // (class index, part size r)

    WreathType() = default;

    void add(int class_index, int r, int multiplicity = 1);
    int multiplicity(int class_index, int r) const;
    const std::map<Key, int>& entries() const { return m_; }
    int n() const { return n_; }

    // parts of the partition attached to one class, descending
    std::vector<int> parts_of(int class_index) const;

    bool operator==(const WreathType& o) const { return m_ == o.m_; }
    bool operator!=(const WreathType& o) const { return m_ != o.m_; }
    bool operator<(const WreathType& o) const { return m_ < o.m_; }

    // e.g. "[c0:(1,1)][c2:(2)]" with classes named by representative index
    std::string str(const FiniteGroup& G) const;

private:
    std::map<Key, int> m_;  // zero multiplicities are not stored
    int n_ = 0;
};

// Type of an explicit wreath element: decompose the permutation part into
// cycles and classify each cycle-product in G.
WreathType type_of(const FiniteGroup& G, const WreathElement& a);

// All types of total size n over k conjugacy classes, in canonical order:
// share of class 0 descending, its partition largest-part-first, then
// recursively for the remaining classes.
std::vector<WreathType> enumerate_types_k(int num_classes, int n);
std::vector<WreathType> enumerate_types(const FiniteGroup& G, int n);

// Centralizer order of any element of the given type in G wr S_n:
// prod over (c, r) of (r * |Z_G(c)|)^m_r(c) * m_r(c)! .
Int centralizer_order(const FiniteGroup& G, const WreathType& t);

// |G|^n n! / centralizer_order; the division is checked exact.
Int class_size(const FiniteGroup& G, const WreathType& t);

// Number of types of total size n, computed by convolution of partition
// counts (independent of enumerate_types).
Int count_types(const FiniteGroup& G, int n);

// partitions of n in largest-part-first order (helper shared with the
// enumeration; p(4) = 5)
std::vector<std::vector<int>> partitions_of(int n, int max_part = -1);

}  // namespace wreath
