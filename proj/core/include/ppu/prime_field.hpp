#pragma once

#include <cstdint>
#include <string>

#include "ppu/errors.hpp"

namespace ppu {

namespace detail {
constexpr bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace detail

/// Residue field F_p with compile-time modulus. Anisotropic forms over
/// finite fields exist only in dimension <= 2, so this backend is used at
/// small dimensions; the modulus bound keeps products inside 64 bits.
template <std::uint64_t P>
class PrimeField {
    static_assert(detail::is_prime(P), "modulus must be prime");
    static_assert(P < (std::uint64_t{1} << 31), "modulus too large");

public:
    PrimeField() = default;
    PrimeField(long n) { // NOLINT: implicit by design
        long r = n % static_cast<long>(P);
        if (r < 0) r += static_cast<long>(P);
        v_ = static_cast<std::uint64_t>(r);
    }

    static PrimeField from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty residue");
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw ParseError("invalid residue: '" + s + "'");
        long acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("invalid residue: '" + s + "'");
            acc = (acc * 10 + (s[i] - '0')) % static_cast<long>(P);
        }
        return PrimeField(s[0] == '-' ? -acc : acc);
    }

    std::string str() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }

    static constexpr unsigned long characteristic() { return P; }

    friend PrimeField operator+(PrimeField a, PrimeField b) { return wrap((a.v_ + b.v_) % P); }
    friend PrimeField operator-(PrimeField a, PrimeField b) { return wrap((a.v_ + P - b.v_) % P); }
    friend PrimeField operator*(PrimeField a, PrimeField b) { return wrap((a.v_ * b.v_) % P); }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
    PrimeField operator-() const { return wrap(v_ == 0 ? 0 : P - v_); }

    PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
    PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
    PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
    PrimeField& operator/=(PrimeField o) { return *this = *this / o; }

    PrimeField inverse() const {
        if (v_ == 0) throw Error("inverse of zero in F_" + std::to_string(P));
        // extended Euclid on (P, v_)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(P), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(P);
        return wrap(static_cast<std::uint64_t>(t));
    }

    friend bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }
    friend bool operator!=(PrimeField a, PrimeField b) { return a.v_ != b.v_; }

private:
    static PrimeField wrap(std::uint64_t v) {
        PrimeField x;
        x.v_ = v;
        return x;
    }
    std::uint64_t v_ = 0;
};

} // namespace ppu
