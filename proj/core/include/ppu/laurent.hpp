#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ppu/errors.hpp"
#include "ppu/field.hpp"

namespace ppu {

/// Laurent polynomial with finite support, stored densely as the coefficient
/// run [valuation .. degree]. Canonical: first and last stored coefficients
/// are nonzero; the zero polynomial has empty support and valuation 0.
template <FieldScalar F>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const F& c) { return monomial(c, 0); }

    static LaurentPoly monomial(const F& c, long exponent) {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.low_ = exponent;
            p.c_ = {c};
        }
        return p;
    }

    /// t^exponent
    static LaurentPoly t(long exponent = 1) { return monomial(F(1), exponent); }

    static LaurentPoly one() { return constant(F(1)); }

    bool is_zero() const { return c_.empty(); }

    /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
    long valuation() const { return low_; }

    /// Largest exponent with nonzero coefficient; 0 for the zero polynomial.
    long degree() const { return c_.empty() ? 0 : low_ + static_cast<long>(c_.size()) - 1; }

    F coeff(long exponent) const {
        const long k = exponent - low_;
        if (k < 0 || k >= static_cast<long>(c_.size())) return F(0);
        return c_[static_cast<std::size_t>(k)];
    }

    bool is_constant() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long low = std::min(a.low_, b.low_);
        const long high = std::max(a.degree(), b.degree());
        LaurentPoly r;
        r.low_ = low;
        r.c_.resize(static_cast<std::size_t>(high - low + 1), F(0));
        for (long e = low; e <= high; ++e)
            r.c_[static_cast<std::size_t>(e - low)] = a.coeff(e) + b.coeff(e);
        r.normalize();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (F& c : r.c_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentPoly r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend LaurentPoly operator*(const F& c, const LaurentPoly& a) {
        if (c.is_zero()) return {};
        LaurentPoly r = a;
        for (F& x : r.c_) x = c * x;
        return r;
    }

    /// The involution t -> t^(-1): coefficient of t^i moves to t^(-i).
    LaurentPoly star() const {
        LaurentPoly r;
        if (is_zero()) return r;
        r.low_ = -degree();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }

    /// t^k * f
    LaurentPoly shifted(long k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    /// Substitutes a nonzero field element for t.
    F eval(const F& x) const {
        if (x.is_zero()) throw Error("specialization at t = 0 is undefined");
        if (is_zero()) return F(0);
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return pow_int(x, low_) * acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable form for diagnostics, e.g. "1/2*t^-1 + 3".
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (long e = low_; e <= degree(); ++e) {
            const F c = coeff(e);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (e == 0) {
                s += c.str();
            } else {
                if (!(c == F(1))) s += c.str() + "*";
                s += "t^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        std::size_t tail = c_.size();
        while (tail > lead && c_[tail - 1].is_zero()) --tail;
        c_.erase(c_.begin() + static_cast<long>(tail), c_.end());
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<long>(lead);
    }

    long low_ = 0;
    std::vector<F> c_;
};

} // namespace ppu
