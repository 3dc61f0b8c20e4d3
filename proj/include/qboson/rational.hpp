#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace qboson {

// Arbitrary-precision rational scalar: always in lowest terms, denominator > 0,
// zero stored as 0/1. This is the base ring for everything else in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading sign on p and q > 0.
    static Rational from_string(const std::string& s) {
        auto fail = [&] {
            return std::invalid_argument("Rational: expected \"p\" or \"p/q\", got \"" + s + "\"");
        };
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t num_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == num_begin) throw fail();
        if (i != s.size()) {
            if (s[i] != '/') throw fail();
            ++i;
            std::size_t den_begin = i;
            bool den_nonzero = false;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                den_nonzero = den_nonzero || s[i] != '0';
                ++i;
            }
            if (i == den_begin || i != s.size()) throw fail();
            if (!den_nonzero) throw std::domain_error("Rational: zero denominator in \"" + s + "\"");
        }
        Rational r;
        r.v_ = mpq_class(s);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return raw(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return raw(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return raw(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return raw(a.v_ / b.v_);
    }
    Rational operator-() const { return raw(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return raw(1 / v_);
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inverse().pow(-e);
        mpq_class out;
        mpz_pow_ui(out.get_num_mpz_t(), mpq_numref(v_.get_mpq_t()), static_cast<unsigned long>(e));
        mpz_pow_ui(out.get_den_mpz_t(), mpq_denref(v_.get_mpq_t()), static_cast<unsigned long>(e));
        return raw(std::move(out));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

private:
    static Rational raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

}  // namespace qboson
