#pragma once

#include <algorithm>
#include <vector>

#include "ppu/submodule.hpp"

namespace ppu {

enum class Cone { Positive, Negative, Identity, Neither };

enum class OrderRelation { LessEq, GreaterEq, Equal, Incomparable };

inline const char* to_string(Cone c) {
    switch (c) {
        case Cone::Positive: return "positive";
        case Cone::Negative: return "negative";
        case Cone::Identity: return "identity";
        default: return "neither";
    }
}

inline const char* to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::LessEq: return "LessEq";
        case OrderRelation::GreaterEq: return "GreaterEq";
        case OrderRelation::Equal: return "Equal";
        default: return "Incomparable";
    }
}

/// Which cone a pure element lies in: Negative iff all exponents <= 0,
/// Positive iff all >= 0, Identity iff both.
template <FieldScalar F>
Cone cone_classify(const GroupElement<F>& phi) {
    if (!phi.is_pure()) throw NotPure("cone classification requires a pure element");
    const bool neg = phi.mat().degree() <= 0;
    const bool pos = phi.mat().valuation() >= 0;
    if (neg && pos) return Cone::Identity;
    if (neg) return Cone::Negative;
    if (pos) return Cone::Positive;
    return Cone::Neither;
}

/// The right-invariant order: phi <= psi iff psi * phi^-1 lies in the
/// positive cone.
template <FieldScalar F>
OrderRelation compare(const GroupElement<F>& phi, const GroupElement<F>& psi) {
    check_same_space(phi.space(), psi.space());
    if (!phi.is_pure() || !psi.is_pure()) throw NotPure("order comparison requires pure elements");
    switch (cone_classify(psi * phi.inverse())) {
        case Cone::Identity: return OrderRelation::Equal;
        case Cone::Positive: return OrderRelation::LessEq;
        case Cone::Negative: return OrderRelation::GreaterEq;
        default: return OrderRelation::Incomparable;
    }
}

/// Reconstructs generator factors from a kernel submodule by repeatedly
/// splitting off the greatest building block dividing on the right (the one
/// whose kernel is the full first layer). Factors are returned in
/// left-to-right multiplication order; their product is the unique
/// negative-cone element with the given kernel.
template <FieldScalar F>
std::vector<Subspace<F>> peel_factors(GradedSubmodule<F> m) {
    std::vector<Subspace<F>> reversed;
    while (!m.is_zero()) {
        const Subspace<F> w = m.layer(1);
        assert(!w.is_zero()); // every nonzero submodule meets the first layer
        Subspace<F> u = w.orthocomplement();
        m = image_submodule(generator(u), m);
        reversed.push_back(std::move(u));
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

/// The unique negative-cone element whose kernel on V+ is the given
/// submodule (inverse of kernel_submodule).
template <FieldScalar F>
GroupElement<F> from_kernel_submodule(const GradedSubmodule<F>& m) {
    GroupElement<F> result = GroupElement<F>::identity(m.space());
    for (const Subspace<F>& u : peel_factors(m)) result = result * generator(u);
    return result;
}

/// Greatest lower bound in the right-invariant order. Both elements are
/// shifted into the negative cone by the central t^-d, where kernels turn
/// meet into submodule sum, then shifted back.
template <FieldScalar F>
GroupElement<F> lattice_meet(const GroupElement<F>& phi, const GroupElement<F>& psi) {
    check_same_space(phi.space(), psi.space());
    if (!phi.is_pure() || !psi.is_pure()) throw NotPure("lattice meet requires pure elements");
    const long d = std::max({phi.mat().degree(), psi.mat().degree(), 0L});
    const GradedSubmodule<F> a = kernel_submodule(phi.shifted(-d));
    const GradedSubmodule<F> b = kernel_submodule(psi.shifted(-d));
    return from_kernel_submodule(submodule_sum(a, b)).shifted(d);
}

/// Least upper bound; dual to lattice_meet via submodule intersection.
template <FieldScalar F>
GroupElement<F> lattice_join(const GroupElement<F>& phi, const GroupElement<F>& psi) {
    check_same_space(phi.space(), psi.space());
    if (!phi.is_pure() || !psi.is_pure()) throw NotPure("lattice join requires pure elements");
    const long d = std::max({phi.mat().degree(), psi.mat().degree(), 0L});
    const GradedSubmodule<F> a = kernel_submodule(phi.shifted(-d));
    const GradedSubmodule<F> b = kernel_submodule(psi.shifted(-d));
    return from_kernel_submodule(submodule_intersect(a, b)).shifted(d);
}

/// Is phi inside the interval [t^-1, 1]? Exactly the building blocks are.
template <FieldScalar F>
bool in_interval(const GroupElement<F>& phi) {
    if (!phi.is_pure()) return false;
    const GroupElement<F> one = GroupElement<F>::identity(phi.space());
    const OrderRelation lower = compare(shift_element(phi.space(), -1), phi);
    const OrderRelation upper = compare(phi, one);
    const auto le = [](OrderRelation r) {
        return r == OrderRelation::LessEq || r == OrderRelation::Equal;
    };
    return le(lower) && le(upper);
}

/// Recovers the subspace U with phi = generator(U); requires phi to lie in
/// the interval [t^-1, 1].
template <FieldScalar F>
Subspace<F> as_generator(const GroupElement<F>& phi) {
    if (!in_interval(phi))
        throw NotInInterval("element is not an interval generator");
    return kernel_submodule(phi).layer(1).orthocomplement();
}

/// Orthocomplementation of the interval: phi -> t^-1 phi^-1, taking
/// generator(U) to generator(U*).
template <FieldScalar F>
GroupElement<F> interval_complement(const GroupElement<F>& phi) {
    if (!phi.is_pure()) throw NotPure("interval complement requires a pure element");
    return phi.inverse().shifted(-1);
}

} // namespace ppu
