#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

struct ConjugacyClass {
    int rep = 0;                    // least element index in the class
    std::vector<int> members;       // ascending
    long long centralizer_order = 0;
};

class FiniteGroup;
struct WreathGroup;
WreathGroup build_wreath(const FiniteGroup& G, int n, long long element_cap);

/*
 * A finite group given by its full multiplication table. The identity is
 * pinned to element index 0. Construction validates the table (shape, range,
 * identity, inverses, Latin-square rows/columns, associativity) and
 * precomputes conjugacy classes and centralizer orders.
 */
class FiniteGroup {
public:
    FiniteGroup(std::string name, const std::vector<std::vector<int>>& table);

    const std::string& name() const { return name_; }
    int order() const { return order_; }

    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }

    // Index into classes() of the class containing g.
    int class_index(int g) const { return class_of_[g]; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    // Ordered by representative (= least member) index.
    const std::vector<ConjugacyClass>& classes() const { return classes_; }

    // Built-in constructors. Element 0 is the identity in each.
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int k);     // Z_k, a*b = a+b mod k
    static FiniteGroup symmetric(int k);  // S_k on k! permutations in lex order
    static FiniteGroup dihedral(int k);   // order 2k; rotations then reflections

private:
    struct Unchecked {};
    FiniteGroup(Unchecked, std::string name, int order, std::vector<int32_t> mul);
    void finish_construction();  // inverses + conjugacy classes

    std::string name_;
    int order_ = 1;
    std::vector<int32_t> mul_;  // row-major order x order
    std::vector<int32_t> inv_;
    std::vector<int32_t> class_of_;
    std::vector<ConjugacyClass> classes_;

    friend struct WreathGroup;
    friend WreathGroup build_wreath(const FiniteGroup& G, int n, long long element_cap);
};

// Number of x in G commuting with a, counted one by one (test oracle for the
// precomputed centralizer orders).
long long centralizer_size_brute(const FiniteGroup& G, int a);

/*
 * Element (g, s) of the wreath product G wr S_n: an n-tuple of G-elements
 * and a permutation of {0..n-1} stored as images (s[i] = image of i).
 * Multiplication: (g, s)(h, t) = (g . s(h), st) where s acts on tuples by
 * (s(h))_i = h_{s^{-1}(i)} and (st)(i) = s(t(i)).
 */
struct WreathElement {
    std::vector<int> g;
    std::vector<int> s;

    bool operator==(const WreathElement&) const = default;
    // 1-based cycle-friendly rendering, e.g. ((1,0),[2,1])
    std::string str() const;
};

WreathElement wreath_identity(int n);
WreathElement wreath_mul(const FiniteGroup& G, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inv(const FiniteGroup& G, const WreathElement& a);

/*
 * Explicitly constructed wreath product G wr S_n: the group as a
 * multiplication table plus the canonical element list (lexicographic on
 * (g-tuple, permutation)), so table indices and WreathElements can be
 * converted both ways. Intended for brute-force verification at small order.
 */
struct WreathGroup {
    FiniteGroup group;                   // order |G|^n n!
    std::vector<WreathElement> elements; // elements[i] realizes table index i
    int n = 1;
    int base_order = 1;                  // |G|

    int index_of(const WreathElement& a) const;
};

inline constexpr long long kDefaultElementCap = 1'000'000;

// Enumerates G wr S_n and materializes its multiplication table.
// Throws SizeError when |G|^n n! exceeds the element cap.
WreathGroup build_wreath(const FiniteGroup& G, int n, long long element_cap = kDefaultElementCap);

}  // namespace wreath
