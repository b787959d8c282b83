#include "wreath/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

FiniteGroup::FiniteGroup(std::string name, const std::vector<std::vector<int>>& table)
    : name_(std::move(name)) {
    order_ = static_cast<int>(table.size());
    if (order_ == 0) throw InputError("group '" + name_ + "': empty multiplication table");

    // shape and range
    mul_.resize(static_cast<size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
        if (static_cast<int>(table[a].size()) != order_)
            throw InputError("group '" + name_ + "': multiplication table is not square (row " +
                             std::to_string(a) + " has " + std::to_string(table[a].size()) +
                             " entries, expected " + std::to_string(order_) + ")");
        for (int b = 0; b < order_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= order_)
                throw InputError("group '" + name_ + "': entry out of range at (" +
                                 std::to_string(a) + "," + std::to_string(b) + "): " +
                                 std::to_string(v));
            mul_[static_cast<size_t>(a) * order_ + b] = v;
        }
    }

    // identity must sit at index 0
    for (int a = 0; a < order_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw InputError("group '" + name_ + "': element 0 is not a two-sided identity");

    // every element needs a two-sided inverse
    for (int a = 0; a < order_; ++a) {
        bool found = false;
        for (int b = 0; b < order_ && !found; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) found = true;
        if (!found)
            throw InputError("group '" + name_ + "': element " + std::to_string(a) +
                             " has no two-sided inverse");
    }

    // rows and columns must be permutations of 0..order-1
    std::vector<char> seen(order_);
    for (int a = 0; a < order_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order_; ++b) seen[mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw InputError("group '" + name_ + "': row " + std::to_string(a) +
                             " is not a permutation of 0.." + std::to_string(order_ - 1));
    }
    for (int b = 0; b < order_; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < order_; ++a) seen[mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw InputError("group '" + name_ + "': column " + std::to_string(b) +
                             " is not a permutation of 0.." + std::to_string(order_ - 1));
    }

    // associativity, O(order^3)
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InputError("group '" + name_ + "': multiplication not associative at (" +
                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");

    finish_construction();
}

FiniteGroup::FiniteGroup(Unchecked, std::string name, int order, std::vector<int32_t> mul)
    : name_(std::move(name)), order_(order), mul_(std::move(mul)) {
    finish_construction();
}

void FiniteGroup::finish_construction() {
    inv_.assign(order_, 0);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }

    /* Conjugation orbits, scanning upward so each class representative is
     * its least member and classes come out ordered by representative. */
    class_of_.assign(order_, -1);
    for (int e = 0; e < order_; ++e) {
        if (class_of_[e] >= 0) continue;
        int idx = static_cast<int>(classes_.size());
        ConjugacyClass cls;
        cls.rep = e;
        for (int x = 0; x < order_; ++x) {
            int conj = mul(mul(x, e), inv_[x]);
            if (class_of_[conj] < 0) {
                class_of_[conj] = idx;
                cls.members.push_back(conj);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.centralizer_order = order_ / static_cast<long long>(cls.members.size());
        if (cls.centralizer_order * static_cast<long long>(cls.members.size()) != order_)
            throw std::logic_error("class size does not divide group order");
        classes_.push_back(std::move(cls));
    }
}

long long centralizer_size_brute(const FiniteGroup& G, int a) {
    long long count = 0;
    for (int x = 0; x < G.order(); ++x)
        if (G.mul(x, a) == G.mul(a, x)) ++count;
    return count;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int k) {
    if (k < 1) throw InputError("cyclic group order must be >= 1");
    std::vector<int32_t> mul(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) mul[static_cast<size_t>(a) * k + b] = (a + b) % k;
    return FiniteGroup(Unchecked{}, "Z" + std::to_string(k), k, std::move(mul));
}

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// rank of a permutation in lexicographic order (factorial number system)
long long perm_rank(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    long long rank = 0;
    long long f = 1;
    for (int m = 2; m <= n - 1; ++m) f *= m;  // (n-1)!
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * f;
        if (n - 1 - i > 0) f /= n - 1 - i;
    }
    return rank;
}

// index of (g, s) in the canonical order: g-tuple as a base-|G| number with
// g[0] most significant, then lexicographic permutation rank
long long wreath_index(int base_order, const WreathElement& a) {
    long long t = 0;
    for (int v : a.g) t = t * base_order + v;
    long long nfact = 1;
    for (int m = 2; m <= static_cast<int>(a.s.size()); ++m) nfact *= m;
    return t * nfact + perm_rank(a.s);
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int k) {
    if (k < 1) throw InputError("symmetric group degree must be >= 1");
    auto perms = all_permutations(k);  // lex order, identity first
    int n = static_cast<int>(perms.size());
    std::vector<int32_t> mul(static_cast<size_t>(n) * n);
    std::vector<int> comp(k);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
            mul[static_cast<size_t>(a) * n + b] = static_cast<int32_t>(perm_rank(comp));
        }
    return FiniteGroup(Unchecked{}, "S" + std::to_string(k), n, std::move(mul));
}

FiniteGroup FiniteGroup::dihedral(int k) {
    if (k < 1) throw InputError("dihedral group parameter must be >= 1");
    /* Elements: index e*k + i for s^e r^i, e in {0,1}. Using r^i s = s r^{-i}:
     * (s^e1 r^i1)(s^e2 r^i2) = s^(e1+e2) r^(i1*(-1)^e2 + i2). */
    int n = 2 * k;
    std::vector<int32_t> mul(static_cast<size_t>(n) * n);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i1 = 0; i1 < k; ++i1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int i2 = 0; i2 < k; ++i2) {
                    int e = (e1 + e2) % 2;
                    int i = (((e2 ? -i1 : i1) % k + k) + i2) % k;
                    mul[static_cast<size_t>(e1 * k + i1) * n + (e2 * k + i2)] =
                        static_cast<int32_t>(e * k + i);
                }
    return FiniteGroup(Unchecked{}, "D" + std::to_string(k), n, std::move(mul));
}

std::string WreathElement::str() const {
    std::ostringstream os;
    os << "((";
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << "),[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
    os << "])";
    return os.str();
}

WreathElement wreath_identity(int n) {
    WreathElement e;
    e.g.assign(n, 0);
    e.s.resize(n);
    std::iota(e.s.begin(), e.s.end(), 0);
    return e;
}

WreathElement wreath_mul(const FiniteGroup& G, const WreathElement& a, const WreathElement& b) {
    int n = static_cast<int>(a.g.size());
    WreathElement r;
    r.g.resize(n);
    r.s.resize(n);
    std::vector<int> sinv(n);
    for (int i = 0; i < n; ++i) sinv[a.s[i]] = i;
    for (int i = 0; i < n; ++i) {
        r.g[i] = G.mul(a.g[i], b.g[sinv[i]]);
        r.s[i] = a.s[b.s[i]];
    }
    return r;
}

WreathElement wreath_inv(const FiniteGroup& G, const WreathElement& a) {
    int n = static_cast<int>(a.g.size());
    WreathElement r;
    r.g.resize(n);
    r.s.resize(n);
    for (int i = 0; i < n; ++i) r.s[a.s[i]] = i;
    for (int i = 0; i < n; ++i) r.g[i] = G.inv(a.g[a.s[i]]);
    return r;
}

int WreathGroup::index_of(const WreathElement& a) const {
    return static_cast<int>(wreath_index(base_order, a));
}

WreathGroup build_wreath(const FiniteGroup& G, int n, long long element_cap) {
    if (n < 1) throw InputError("wreath product requires n >= 1");
    long long order = 1;
    for (int i = 0; i < n; ++i) {
        order *= G.order();
        if (order > element_cap)
            throw SizeError("wreath product " + G.name() + " wr S" + std::to_string(n) +
                            " needs at least " + std::to_string(order) + " elements, cap is " +
                            std::to_string(element_cap));
    }
    for (int m = 2; m <= n; ++m) {
        order *= m;
        if (order > element_cap)
            throw SizeError("wreath product " + G.name() + " wr S" + std::to_string(n) +
                            " needs " + std::to_string(order) + " elements, cap is " +
                            std::to_string(element_cap));
    }

    auto perms = all_permutations(n);
    std::vector<WreathElement> elements;
    elements.reserve(static_cast<size_t>(order));
    std::vector<int> tuple(n, 0);
    for (;;) {
        for (const auto& p : perms) elements.push_back({tuple, p});
        int i = n - 1;
        while (i >= 0 && tuple[i] == G.order() - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }

    std::vector<int32_t> mul(static_cast<size_t>(order) * order);
    for (long long a = 0; a < order; ++a)
        for (long long b = 0; b < order; ++b) {
            WreathElement prod = wreath_mul(G, elements[a], elements[b]);
            mul[static_cast<size_t>(a) * order + b] =
                static_cast<int32_t>(wreath_index(G.order(), prod));
        }

    return WreathGroup{FiniteGroup(FiniteGroup::Unchecked{}, G.name() + " wr S" + std::to_string(n),
                                   static_cast<int>(order), std::move(mul)),
                       std::move(elements), n, G.order()};
}

}  // namespace wreath
