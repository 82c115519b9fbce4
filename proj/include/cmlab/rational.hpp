#pragma once

#include "cmlab/int128.hpp"

namespace cmlab {

// Exact rational on 128-bit integers. Always stored in lowest terms with
// positive denominator; arithmetic throws std::overflow_error instead of
// wrapping. Every finite factor in this project fits comfortably.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

    static Rational of(i64 n, i64 d) { return Rational(i128(n), i128(d)); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(add_chk(mul_chk(a.num_, b.den_), mul_chk(b.num_, a.den_)),
                        mul_chk(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(sub_chk(mul_chk(a.num_, b.den_), mul_chk(b.num_, a.den_)),
                        mul_chk(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mul_chk(a.num_, b.num_), mul_chk(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mul_chk(a.num_, b.den_), mul_chk(a.den_, b.num_));
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mul_chk(a.num_, b.den_) < mul_chk(b.num_, a.den_);
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return to_string(num_);
        return to_string(num_) + "/" + to_string(den_);
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static i128 add_chk(i128 a, i128 b) {
        i128 r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational add");
        return r;
    }
    static i128 sub_chk(i128 a, i128 b) {
        i128 r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Rational sub");
        return r;
    }
    static i128 mul_chk(i128 a, i128 b) {
        i128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational mul");
        return r;
    }

    i128 num_;
    i128 den_;
};

} // namespace cmlab
