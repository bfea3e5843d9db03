#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ppu/errors.hpp"

namespace ppu {

/// Exact arbitrary-precision rational. Invariant: lowest terms, positive
/// denominator (maintained by GMP's canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, F(0)/F(1) literals
    Rational(long num, long den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "num" or "num/den" in base 10. Strict: optional leading '-',
    /// digits only, nonzero denominator.
    static Rational from_string(const std::string& s) {
        const auto bad = [&] { throw ParseError("invalid rational: '" + s + "'"); };
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
        if (digits == 0) bad();
        if (i < s.size()) {
            if (s[i] != '/') bad();
            ++i;
            digits = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
            if (digits == 0 || i != s.size()) bad();
        }
        mpq_class v(s, 10);
        if (v.get_den() == 0) throw ParseError("rational with zero denominator: '" + s + "'");
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    /// Canonical form: "num" when the denominator is 1, else "num/den".
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    static constexpr unsigned long characteristic() { return 0; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace ppu
