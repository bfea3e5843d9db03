#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "ppu/paraunitary.hpp"

namespace ppu {

/// A finitely generated k[t^-1]-submodule of V+ = V[t,t^-1] / V[t^-1],
/// i.e. a finite-dimensional subspace of t^1 V + ... + t^m V closed under
/// the shift-down action of t^-1 (which discards what falls to exponent 0).
///
/// Coordinates are ordered degree-descending: block 0 of a basis row is the
/// t^m layer, the last block is the t^1 layer. With that ordering the shift
/// action is "drop the last block, prepend a zero block". The bound m is
/// minimal (top layer nonzero) and the basis is in reduced echelon form, so
/// equal submodules compare equal as matrices.
template <FieldScalar F>
class GradedSubmodule {
public:
    static GradedSubmodule zero(SpacePtr<F> space) {
        return GradedSubmodule(std::move(space), 0, Mat<F>(0, 0));
    }

    /// Module generated by the given vectors: their k-span closed under the
    /// shift action. Rows are coordinate vectors of length bound * dim.
    static GradedSubmodule generated_by(SpacePtr<F> space, std::size_t bound,
                                        const Mat<F>& vectors) {
        const std::size_t n = space->dim();
        if (vectors.rows() > 0 && vectors.cols() != bound * n)
            throw DimensionMismatch("submodule generators have wrong coordinate count");
        Mat<F> closure = vectors.rows() ? vectors : Mat<F>(0, bound * n);
        Mat<F> frontier = closure;
        for (std::size_t step = 0; step < bound; ++step) {
            Mat<F> shiftedv(frontier.rows(), frontier.cols());
            for (std::size_t i = 0; i < frontier.rows(); ++i)
                for (std::size_t j = 0; j + n < frontier.cols(); ++j)
                    shiftedv(i, j + n) = frontier(i, j);
            closure = stack_rows(closure, shiftedv);
            frontier = std::move(shiftedv);
        }
        return canonical(std::move(space), bound, closure);
    }

    /// Wraps an alleged basis, requiring shift-closure (throws NotShiftClosed
    /// otherwise). Used when reading externally supplied submodules.
    static GradedSubmodule from_basis_checked(SpacePtr<F> space, std::size_t bound,
                                              const Mat<F>& basis) {
        const std::size_t n = space->dim();
        if (basis.rows() > 0 && basis.cols() != bound * n)
            throw DimensionMismatch("submodule basis has wrong coordinate count");
        GradedSubmodule m =
            canonical(space, bound, basis.rows() ? basis : Mat<F>(0, bound * n));
        for (std::size_t i = 0; i < m.basis_.rows(); ++i) {
            if (!m.contains_coords(shift_row(m.basis_, i, n)))
                throw NotShiftClosed("basis vector " + std::to_string(i) +
                                     " leaves the span under the t^-1 action");
        }
        return m;
    }

    const SpacePtr<F>& space() const { return space_; }
    /// Top exponent layer (m); 0 for the zero module.
    std::size_t bound() const { return bound_; }
    /// Dimension as a k-vector space.
    std::size_t dim() const { return basis_.rows(); }
    const Mat<F>& basis() const { return basis_; }
    bool is_zero() const { return basis_.rows() == 0; }

    /// layer(i) = { v in V : t^i v lies in the module }.
    Subspace<F> layer(std::size_t i) const {
        const std::size_t n = space_->dim();
        if (i < 1 || i > bound_) return Subspace<F>::zero(space_);
        Mat<F> pure(n, bound_ * n);
        const std::size_t block = (bound_ - i) * n;
        for (std::size_t j = 0; j < n; ++j) pure(j, block + j) = F(1);
        const Mat<F> inter = row_space_intersect(basis_, pure);
        Mat<F> coords(inter.rows(), n);
        for (std::size_t r = 0; r < inter.rows(); ++r)
            for (std::size_t j = 0; j < n; ++j) coords(r, j) = inter(r, block + j);
        return Subspace<F>::span(space_, coords);
    }

    /// Image under the t^-1 action.
    GradedSubmodule shift_down() const {
        const std::size_t n = space_->dim();
        if (is_zero()) return *this;
        Mat<F> rows(basis_.rows(), basis_.cols());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const auto r = shift_row(basis_, i, n);
            for (std::size_t j = 0; j < r.size(); ++j) rows(i, j) = r[j];
        }
        return canonical(space_, bound_, rows);
    }

    bool contains(const GradedSubmodule& other) const {
        check_same_space(space_, other.space_);
        if (other.is_zero()) return true;
        if (other.bound_ > bound_) return false;
        for (std::size_t i = 0; i < other.basis_.rows(); ++i)
            if (!contains_coords(pad_row(other.basis_.row(i), other.bound_, bound_,
                                         space_->dim())))
                return false;
        return true;
    }

    /// Membership of a coordinate vector written at this module's bound.
    bool contains_coords(const std::vector<F>& coords) const {
        if (is_zero()) {
            for (const F& c : coords)
                if (!c.is_zero()) return false;
            return true;
        }
        return row_space_contains(basis_, coords);
    }

    friend bool operator==(const GradedSubmodule& a, const GradedSubmodule& b) {
        return same_space(a.space_, b.space_) && a.bound_ == b.bound_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const GradedSubmodule& a, const GradedSubmodule& b) {
        return !(a == b);
    }

    /// Coordinates of row i of basis, re-written at a (larger) bound.
    static std::vector<F> pad_row(const std::vector<F>& row, std::size_t from_bound,
                                  std::size_t to_bound, std::size_t n) {
        std::vector<F> out(to_bound * n, F(0));
        const std::size_t offset = (to_bound - from_bound) * n;
        for (std::size_t j = 0; j < row.size(); ++j) out[offset + j] = row[j];
        return out;
    }

private:
    GradedSubmodule(SpacePtr<F> space, std::size_t bound, Mat<F> basis)
        : space_(std::move(space)), bound_(bound), basis_(std::move(basis)) {}

    /// RREF the rows and trim unused top layers so the bound is minimal.
    static GradedSubmodule canonical(SpacePtr<F> space, std::size_t bound, const Mat<F>& rows) {
        const std::size_t n = space->dim();
        Mat<F> b = row_space(rows);
        if (b.rows() == 0) return zero(std::move(space));
        std::size_t lead_blocks = 0; // all-zero column blocks at the top
        for (; lead_blocks < bound; ++lead_blocks) {
            bool nonzero = false;
            for (std::size_t i = 0; i < b.rows() && !nonzero; ++i)
                for (std::size_t j = 0; j < n && !nonzero; ++j)
                    nonzero = !b(i, lead_blocks * n + j).is_zero();
            if (nonzero) break;
        }
        if (lead_blocks == 0) return GradedSubmodule(std::move(space), bound, std::move(b));
        Mat<F> trimmed(b.rows(), (bound - lead_blocks) * n);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < trimmed.cols(); ++j)
                trimmed(i, j) = b(i, lead_blocks * n + j);
        return GradedSubmodule(std::move(space), bound - lead_blocks, std::move(trimmed));
    }

    static std::vector<F> shift_row(const Mat<F>& basis, std::size_t i, std::size_t n) {
        std::vector<F> out(basis.cols(), F(0));
        for (std::size_t j = 0; j + n < basis.cols(); ++j) out[j + n] = basis(i, j);
        return out;
    }

    template <FieldScalar G>
    friend GradedSubmodule<G> submodule_sum(const GradedSubmodule<G>&, const GradedSubmodule<G>&);
    template <FieldScalar G>
    friend GradedSubmodule<G> submodule_intersect(const GradedSubmodule<G>&,
                                                  const GradedSubmodule<G>&);
    template <FieldScalar G>
    friend GradedSubmodule<G> image_submodule(const GroupElement<G>&, const GradedSubmodule<G>&);
    template <FieldScalar G>
    friend GradedSubmodule<G> kernel_submodule(const GroupElement<G>&);

    SpacePtr<F> space_;
    std::size_t bound_ = 0;
    Mat<F> basis_;
};

namespace detail {
template <FieldScalar F>
Mat<F> rows_at_bound(const GradedSubmodule<F>& m, std::size_t bound, std::size_t n) {
    Mat<F> out(m.dim(), bound * n);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const auto row = GradedSubmodule<F>::pad_row(m.basis().row(i), m.bound(), bound, n);
        for (std::size_t j = 0; j < row.size(); ++j) out(i, j) = row[j];
    }
    return out;
}
} // namespace detail

template <FieldScalar F>
GradedSubmodule<F> submodule_sum(const GradedSubmodule<F>& a, const GradedSubmodule<F>& b) {
    check_same_space(a.space(), b.space());
    const std::size_t n = a.space()->dim();
    const std::size_t bound = std::max(a.bound(), b.bound());
    if (bound == 0) return GradedSubmodule<F>::zero(a.space());
    return GradedSubmodule<F>::canonical(
        a.space(), bound,
        stack_rows(detail::rows_at_bound(a, bound, n), detail::rows_at_bound(b, bound, n)));
}

template <FieldScalar F>
GradedSubmodule<F> submodule_intersect(const GradedSubmodule<F>& a, const GradedSubmodule<F>& b) {
    check_same_space(a.space(), b.space());
    const std::size_t n = a.space()->dim();
    const std::size_t bound = std::max(a.bound(), b.bound());
    if (a.is_zero() || b.is_zero()) return GradedSubmodule<F>::zero(a.space());
    return GradedSubmodule<F>::canonical(
        a.space(), bound,
        row_space_intersect(detail::rows_at_bound(a, bound, n),
                            detail::rows_at_bound(b, bound, n)));
}

/// Image of a submodule under a negative-cone element acting on V+
/// (compute in V[t,t^-1], then discard exponents <= 0).
template <FieldScalar F>
GradedSubmodule<F> image_submodule(const GroupElement<F>& phi, const GradedSubmodule<F>& m) {
    check_same_space(phi.space(), m.space());
    if (phi.mat().degree() > 0)
        throw NotNegativeCone("the action on V+ requires exponents <= 0");
    if (m.is_zero()) return m;
    const std::size_t n = phi.space()->dim();
    const std::size_t bound = m.bound();
    Mat<F> rows(m.dim(), bound * n);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        LaurentVec<F> v(n);
        for (std::size_t block = 0; block < bound; ++block) {
            const long exponent = static_cast<long>(bound - block);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = v[j] + LaurentPoly<F>::monomial(m.basis()(i, block * n + j), exponent);
        }
        const LaurentVec<F> w = phi.apply(v);
        assert(w.degree() <= static_cast<long>(bound));
        for (std::size_t block = 0; block < bound; ++block) {
            const auto lay = w.layer(static_cast<long>(bound - block));
            for (std::size_t j = 0; j < n; ++j) rows(i, block * n + j) = lay[j];
        }
    }
    return GradedSubmodule<F>::canonical(m.space(), bound, rows);
}

/// Kernel of the action of a negative-cone element on V+. The kernel lives
/// inside the layers 1..d with d = -valuation(phi): writing the blocked
/// action of phi on those layers as a dn x dn scalar matrix, the kernel is
/// its nullspace (no exponent above d can occur in the image since all
/// exponents of phi are <= 0).
template <FieldScalar F>
GradedSubmodule<F> kernel_submodule(const GroupElement<F>& phi) {
    if (!phi.is_pure()) throw NotPure("kernel requires a pure element");
    if (phi.mat().degree() > 0)
        throw NotNegativeCone("kernel requires a negative-cone element");
    const std::size_t n = phi.space()->dim();
    const long d = -phi.mat().valuation();
    if (d == 0) return GradedSubmodule<F>::zero(phi.space());

    const std::size_t dn = static_cast<std::size_t>(d) * n;
    Mat<F> action(dn, dn);
    for (long in_layer = 1; in_layer <= d; ++in_layer) {
        for (long out_layer = 1; out_layer <= d; ++out_layer) {
            const Mat<F> block = phi.mat().layer(out_layer - in_layer);
            const std::size_t r0 = static_cast<std::size_t>(d - out_layer) * n;
            const std::size_t c0 = static_cast<std::size_t>(d - in_layer) * n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) action(r0 + i, c0 + j) = block(i, j);
        }
    }
    // rows x with action * x^T = 0, i.e. vectors annihilated in V+
    Mat<F> basis = null_space_rows(action);
    return GradedSubmodule<F>::canonical(phi.space(), static_cast<std::size_t>(d), basis);
}

} // namespace ppu
