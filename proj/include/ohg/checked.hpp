#pragma once

#include <cstdint>

#include "ohg/errors.hpp"

namespace ohg {

// All exact values in this library are int64 with overflow checks that
// throw instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = checked_neg(a);
    if (b < 0) b = checked_neg(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational on checked int64, normalized with positive denominator.
// Used only as interpolation scratch; results must come back integral.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        std::int64_t g = gcd64(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ohg
