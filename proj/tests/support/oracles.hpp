#pragma once

#include "support/test_util.hpp"

namespace tu {

/// Reference for the extended form, computed straight from the defining
/// series: coefficient of t^n is sum_i b(v_{i-n}, w_i). Kept independent of
/// the coordinate-formula implementation it checks.
inline PolyQ extended_form_reference(const ppu::SpacePtr<Q>& s, const VecQ& v, const VecQ& w) {
    if (v.is_zero() || w.is_zero()) return {};
    PolyQ acc;
    const long vlo = v.valuation(), vhi = v.degree();
    const long wlo = w.valuation(), whi = w.degree();
    for (long n = wlo - vhi; n <= whi - vlo; ++n) {
        Q c(0);
        for (long i = wlo; i <= whi; ++i) c += s->bilinear(v.layer(i - n), w.layer(i));
        acc = acc + PolyQ::monomial(c, n);
    }
    return acc;
}

} // namespace tu
