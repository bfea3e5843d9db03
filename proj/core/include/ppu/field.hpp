#pragma once

#include <concepts>
#include <string>

#include "ppu/errors.hpp"

namespace ppu {

/// Requirements on a coefficient field. All arithmetic must be exact;
/// division by zero must throw. characteristic() is 0 for the rationals
/// and p for a prime field.
template <class F>
concept FieldScalar =
    std::regular<F> && requires(const F a, const F b, const std::string& s) {
        F(0L);
        { a + b } -> std::same_as<F>;
        { a - b } -> std::same_as<F>;
        { a * b } -> std::same_as<F>;
        { a / b } -> std::same_as<F>;
        { -a } -> std::same_as<F>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.str() } -> std::same_as<std::string>;
        { F::from_string(s) } -> std::same_as<F>;
        { F::characteristic() } -> std::same_as<unsigned long>;
    };

/// x^e for integer e; negative exponents invert (x must be nonzero then).
template <FieldScalar F>
F pow_int(const F& x, long e) {
    if (e < 0) {
        if (x.is_zero()) throw Error("pow_int: negative power of zero");
        return pow_int(F(1) / x, -e);
    }
    F acc(1);
    F base = x;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace ppu
