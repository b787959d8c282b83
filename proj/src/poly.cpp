#include "wreath/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

BigradedPoly BigradedPoly::constant(Int c) {
    BigradedPoly p;
    p.add_term(0, 0, c);
    return p;
}

BigradedPoly BigradedPoly::monomial(int s2, int t2, Int c) {
    BigradedPoly p;
    p.add_term(s2, t2, c);
    return p;
}

Int BigradedPoly::coeff(int s2, int t2) const {
    auto it = terms_.find({s2, t2});
    return it == terms_.end() ? Int(0) : it->second;
}

void BigradedPoly::add_term(int s2, int t2, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({s2, t2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigradedPoly& BigradedPoly::operator+=(const BigradedPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BigradedPoly& BigradedPoly::operator-=(const BigradedPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b) {
    BigradedPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BigradedPoly& BigradedPoly::operator*=(const BigradedPoly& o) {
    *this = *this * o;
    return *this;
}

BigradedPoly& BigradedPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

BigradedPoly BigradedPoly::operator-() const {
    BigradedPoly r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

Int BigradedPoly::eval_pm(int xv, int yv) const {
    Int total = 0;
    for (const auto& [k, c] : terms_) {
        int sign = 1;
        if (xv == -1) {
            if (k.first % 2 != 0)
                throw InputError("cannot evaluate x = -1 on half-integer exponent " +
                                 std::to_string(k.first) + "/2");
            if (((k.first / 2) % 2 + 2) % 2 == 1) sign = -sign;
        }
        if (yv == -1) {
            if (k.second % 2 != 0)
                throw InputError("cannot evaluate y = -1 on half-integer exponent " +
                                 std::to_string(k.second) + "/2");
            if (((k.second / 2) % 2 + 2) % 2 == 1) sign = -sign;
        }
        total += sign > 0 ? c : -c;
    }
    return total;
}

namespace {

void append_power(std::ostringstream& os, const char* var, int e2) {
    if (e2 == 0) return;
    os << '*' << var;
    if (e2 == 2) return;
    if (e2 % 2 == 0)
        os << '^' << e2 / 2;
    else
        os << "^(" << e2 << "/2)";
}

}  // namespace

std::string BigradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || (k.first == 0 && k.second == 0))
            os << a;
        else {
            // bare variable term: drop the leading "1*"
            std::ostringstream tmp;
            append_power(tmp, "x", k.first);
            append_power(tmp, "y", k.second);
            os << tmp.str().substr(1);
            first = false;
            continue;
        }
        append_power(os, "x", k.first);
        append_power(os, "y", k.second);
        first = false;
    }
    return os.str();
}

BigradedPoly twist(const BigradedPoly& p, int n) { return twist2(p, 2 * n); }

BigradedPoly twist2(const BigradedPoly& p, int n2) {
    if (n2 == 0) return p;
    BigradedPoly r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.first + n2, k.second + n2, c);
    return r;
}

BigradedPoly alternate_signs(const BigradedPoly& p) {
    BigradedPoly r;
    for (const auto& [k, c] : p.terms()) {
        if ((k.first + k.second) % 2 != 0)
            throw std::logic_error("alternate_signs requires integer total degree");
        int st = (k.first + k.second) / 2;  // s + t
        r.add_term(k.first, k.second, (st % 2 + 2) % 2 == 1 ? -c : c);
    }
    return r;
}

bool is_xy_symmetric(const BigradedPoly& p) {
    for (const auto& [k, c] : p.terms())
        if (p.coeff(k.second, k.first) != c) return false;
    return true;
}

bool is_hodge_table(const BigradedPoly& p) {
    for (const auto& [k, c] : p.terms())
        if (c < 0 || k.first % 2 != 0 || k.second % 2 != 0) return false;
    return true;
}

}  // namespace wreath
