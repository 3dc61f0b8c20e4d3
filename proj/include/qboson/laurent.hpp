#pragma once

#include "qboson/poly.hpp"
#include "qboson/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qboson {

// Laurent polynomial in the spectral parameter u, coefficients in C
// (Rational or Poly). Zero coefficients are never stored.
template <class C>
class Laurent {
public:
    Laurent() = default;
    Laurent(const C& c) {
        if (!c.is_zero()) t_[0] = c;
    }
    Laurent(int n) : Laurent(C(n)) {}
    static Laurent u(int k = 1) { return term(k, C(1)); }
    static Laurent term(int k, const C& c) {
        Laurent l;
        if (!c.is_zero()) l.t_[k] = c;
        return l;
    }

    bool is_zero() const { return t_.empty(); }
    C coeff(int k) const {
        auto it = t_.find(k);
        return it == t_.end() ? C(0) : it->second;
    }
    int min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }
    const std::map<int, C>& terms() const { return t_; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent out(a);
        for (const auto& [k, c] : b.t_) out.add_term(k, c);
        return out;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    Laurent operator-() const {
        Laurent out;
        for (const auto& [k, c] : t_) out.t_[k] = -c;
        return out;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) out.add_term(ka + kb, ca * cb);
        return out;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(int e) const {
        if (e < 0) throw std::domain_error("Laurent: negative power");
        Laurent out(1), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) out *= base;
            base *= base;
        }
        return out;
    }

    // Substitution u <- u0. Exact; u0 = 0 is allowed only without negative exponents.
    C eval(const Rational& u0) const {
        if (u0.is_zero() && !t_.empty() && min_exponent() < 0)
            throw std::domain_error("Laurent: evaluation at 0 with negative exponents");
        C acc(0);
        for (const auto& [k, c] : t_) acc = acc + c * C(u0.pow(k));
        return acc;
    }

    Laurent substitute_inverse() const {  // u -> u^{-1}
        Laurent out;
        for (const auto& [k, c] : t_) out.t_[-k] = c;
        return out;
    }

    void add_term(int k, const C& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[k] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (!first) out += " + ";
            first = false;
            std::string cs = coeff_str(c);
            if (k == 0) {
                out += cs;
                continue;
            }
            if (cs != "1") {
                out += (cs.find(' ') != std::string::npos || cs.find('-') != std::string::npos)
                           ? "(" + cs + ")*"
                           : cs + "*";
            }
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    static std::string coeff_str(const Rational& c) { return c.str(); }
    static std::string coeff_str(const Poly& c) { return c.str(); }
    std::map<int, C> t_;
};

}  // namespace qboson
