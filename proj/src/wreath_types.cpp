#include "wreath/wreath_types.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wreath {

void WreathType::add(int class_index, int r, int multiplicity) {
    if (multiplicity == 0) return;
    auto key = Key{class_index, r};
    auto [it, inserted] = m_.try_emplace(key, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) m_.erase(it);
    }
    n_ += r * multiplicity;
}

int WreathType::multiplicity(int class_index, int r) const {
    auto it = m_.find({class_index, r});
    return it == m_.end() ? 0 : it->second;
}

std::vector<int> WreathType::parts_of(int class_index) const {
    std::vector<int> parts;
    for (const auto& [k, m] : m_)
        if (k.first == class_index)
            for (int i = 0; i < m; ++i) parts.push_back(k.second);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string WreathType::str(const FiniteGroup& G) const {
    std::ostringstream os;
    for (int c = 0; c < G.num_classes(); ++c) {
        auto parts = parts_of(c);
        if (parts.empty()) continue;
        os << "[c" << G.classes()[c].rep << ":(";
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
        os << ")]";
    }
    if (m_.empty()) os << "[]";
    return os.str();
}

WreathType type_of(const FiniteGroup& G, const WreathElement& a) {
    int n = static_cast<int>(a.s.size());
    WreathType t;
    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        /* Walk the cycle i -> s(i) -> ... and left-multiply the g-entries in
         * visit order, which realizes the cycle-product g_{i_r} ... g_{i_1}. */
        int r = 0, product = 0;
        for (int j = start; !visited[j]; j = a.s[j]) {
            visited[j] = 1;
            product = G.mul(a.g[j], product);
            ++r;
        }
        t.add(G.class_index(product), r);
    }
    return t;
}

std::vector<std::vector<int>> partitions_of(int n, int max_part) {
    if (max_part < 0 || max_part > n) max_part = n;
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = max_part; first >= 1; --first)
        for (auto& rest : partitions_of(n - first, first)) {
            std::vector<int> p{first};
            p.insert(p.end(), rest.begin(), rest.end());
            out.push_back(std::move(p));
        }
    return out;
}

namespace {

void enumerate_rec(int num_classes, int c, int remaining, WreathType& acc,
                   std::vector<WreathType>& out) {
    if (c == num_classes) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    if (c == num_classes - 1) {
        // last class takes everything that is left
        for (const auto& p : partitions_of(remaining)) {
            WreathType t = acc;
            for (int part : p) t.add(c, part);
            out.push_back(std::move(t));
        }
        return;
    }
    for (int share = remaining; share >= 0; --share)
        for (const auto& p : partitions_of(share)) {
            WreathType t = acc;
            for (int part : p) t.add(c, part);
            enumerate_rec(num_classes, c + 1, remaining - share, t, out);
        }
}

}  // namespace

std::vector<WreathType> enumerate_types_k(int num_classes, int n) {
    std::vector<WreathType> out;
    WreathType acc;
    enumerate_rec(num_classes, 0, n, acc, out);
    return out;
}

std::vector<WreathType> enumerate_types(const FiniteGroup& G, int n) {
    return enumerate_types_k(G.num_classes(), n);
}

Int centralizer_order(const FiniteGroup& G, const WreathType& t) {
    Int z = 1;
    for (const auto& [k, m] : t.entries()) {
        auto [c, r] = k;
        Int base = Int(r) * G.classes()[c].centralizer_order;
        for (int i = 0; i < m; ++i) z *= base;
        z *= factorial(m);
    }
    return z;
}

Int class_size(const FiniteGroup& G, const WreathType& t) {
    Int total = 1;
    for (int i = 0; i < t.n(); ++i) total *= G.order();
    total *= factorial(t.n());
    Int zc = centralizer_order(G, t);
    if (total % zc != 0)
        throw std::logic_error("centralizer order does not divide wreath group order");
    return total / zc;
}

Int count_types(const FiniteGroup& G, int n) {
    /* Convolution of per-class partition counts: the number of types equals
     * the q^n coefficient of (sum_m p(m) q^m)^(#classes). */
    std::vector<Int> p(n + 1, 0);
    for (int m = 0; m <= n; ++m) p[m] = Int(partitions_of(m).size());
    std::vector<Int> acc(n + 1, 0);
    acc[0] = 1;
    for (int c = 0; c < G.num_classes(); ++c) {
        std::vector<Int> next(n + 1, 0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) next[i + j] += acc[i] * p[j];
        acc = std::move(next);
    }
    return acc[n];
}

}  // namespace wreath
