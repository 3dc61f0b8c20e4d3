#pragma once

#include "qboson/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qboson {

// Dense univariate polynomial over Rational. The indeterminate is the
// deformation parameter t unless a different name is given when rendering.
// Invariant: the trailing coefficient is nonzero; zero stores no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(int n) : Poly(Rational(n)) {}
    Poly(long n) : Poly(Rational(n)) {}
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly t() { return monomial(1, Rational(1)); }
    static Poly monomial(int deg, const Rational& c) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(deg + 1, Rational(0));
            p.c_[deg] = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rational> out(c_.size(), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("Poly: negative power");
        Poly out(1), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) out *= base;
            base *= base;
        }
        return out;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Exact division: throws if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem(a), quot;
        std::vector<Rational> q(a.is_zero() ? 0 : std::max(0, a.degree() - b.degree() + 1), Rational(0));
        const Rational lead = b.c_.back();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rational factor = rem.c_.back() / lead;
            q[shift] = factor;
            rem -= Poly::monomial(shift, factor) * b;
        }
        if (!rem.is_zero()) throw std::domain_error("Poly: inexact division");
        return Poly(std::move(q));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int i = 0; i <= degree(); ++i) {
            Rational c = coeff(i);
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace qboson
