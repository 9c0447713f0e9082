#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "knotforge/bigint.hpp"

namespace knotforge {

// Exact rational number; denominator kept positive, fraction fully reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& r) const {
        return Rational(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
    }
    Rational operator-(const Rational& r) const { return *this + (-r); }
    Rational operator*(const Rational& r) const {
        return Rational(num_ * r.num_, den_ * r.den_);
    }
    Rational operator/(const Rational& r) const {
        if (r.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * r.den_, den_ * r.num_);
    }
    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
    bool operator!=(const Rational& r) const { return !(*this == r); }
    bool operator<(const Rational& r) const { return (*this - r).num_.is_negative(); }

    int signum() const { return num_.signum(); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
};

}  // namespace knotforge
