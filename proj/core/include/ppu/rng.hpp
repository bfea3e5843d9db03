#pragma once

#include <cstdint>

#include "ppu/normal_form.hpp"

namespace ppu {

/// splitmix64: the fixed 64-bit mixing generator used for all seeded
/// randomness, so identical seeds reproduce identical instances on every
/// platform. Bounded draws use plain modulo (bias is irrelevant here).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Draw in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Small integer scalar in [-3, 3].
template <FieldScalar F>
F random_scalar(SplitMix64& rng) {
    return F(rng.range(-3, 3));
}

/// Row space of a random integer matrix with entries in [-3, 3]; the target
/// row count is drawn in [0, n].
template <FieldScalar F>
Subspace<F> random_subspace(const SpacePtr<F>& space, SplitMix64& rng) {
    const std::size_t n = space->dim();
    const std::size_t r = static_cast<std::size_t>(rng.below(n + 1));
    Mat<F> gens(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) gens(i, j) = random_scalar<F>(rng);
    return Subspace<F>::span(space, gens);
}

/// A random anisotropic space: either the identity Gram matrix or
/// A^T A + I for a small random integer A (positive definite either way).
template <FieldScalar F>
SpacePtr<F> random_space(std::size_t n, SplitMix64& rng) {
    if (rng.below(2) == 0) return QuadSpace<F>::make(Mat<F>::identity(n));
    Mat<F> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = F(rng.range(-2, 2));
    return QuadSpace<F>::make(a.transpose() * a + Mat<F>::identity(n));
}

/// Product of `length` random building blocks; pure and in the negative cone.
template <FieldScalar F>
GroupElement<F> random_negative(const SpacePtr<F>& space, std::size_t length, SplitMix64& rng) {
    GroupElement<F> acc = GroupElement<F>::identity(space);
    for (std::size_t i = 0; i < length; ++i) acc = acc * generator(random_subspace(space, rng));
    return acc;
}

/// Random pure element of mixed cone: a negative product shifted up by a
/// random central power of t (a fraction-shifted product).
template <FieldScalar F>
GroupElement<F> random_pure(const SpacePtr<F>& space, std::size_t length, SplitMix64& rng) {
    GroupElement<F> sigma = random_negative(space, length, rng);
    const long max_up = -sigma.mat().valuation();
    return sigma.shifted(rng.range(0, max_up));
}

/// Random constant unitary: a product of form-preserving reflections
/// 1 - 2 proj(U) over random subspaces.
template <FieldScalar F>
ConstantElement<F> random_unitary(const SpacePtr<F>& space, std::size_t reflections,
                                  SplitMix64& rng) {
    const Mat<F> id = Mat<F>::identity(space->dim());
    ConstantElement<F> acc = ConstantElement<F>::identity(space);
    for (std::size_t i = 0; i < reflections; ++i) {
        const Subspace<F> u = random_subspace(space, rng);
        acc = acc * ConstantElement<F>::make(space, id - F(2) * u.projection());
    }
    return acc;
}

/// Random Laurent vector with coefficients in [-3, 3] on the exponent
/// window [lo, hi].
template <FieldScalar F>
LaurentVec<F> random_laurent_vec(const SpacePtr<F>& space, long lo, long hi, SplitMix64& rng) {
    LaurentVec<F> v(space->dim());
    for (std::size_t i = 0; i < space->dim(); ++i) {
        LaurentPoly<F> p;
        for (long e = lo; e <= hi; ++e)
            p = p + LaurentPoly<F>::monomial(random_scalar<F>(rng), e);
        v[i] = p;
    }
    return v;
}

} // namespace ppu
