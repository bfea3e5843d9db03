#pragma once

#include <map>
#include <utility>

#include "ppu/laurent_matrix.hpp"
#include "ppu/quad_space.hpp"

namespace ppu {

/// The form b extended to V[t,t^-1]: antilinear in the first argument,
/// linear in the second. In coordinates, star(v)^T G w.
template <FieldScalar F>
LaurentPoly<F> extended_form(const SpacePtr<F>& space, const LaurentVec<F>& v,
                             const LaurentVec<F>& w) {
    if (v.dim() != space->dim() || w.dim() != space->dim())
        throw DimensionMismatch("extended form argument dimension");
    const Mat<F>& g = space->gram();
    LaurentPoly<F> acc;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        const LaurentPoly<F> vi = v[i].star();
        for (std::size_t j = 0; j < w.dim(); ++j) {
            if (g(i, j).is_zero() || w[j].is_zero()) continue;
            acc = acc + g(i, j) * (vi * w[j]);
        }
    }
    return acc;
}

/// Degree-zero coefficient of the extended form; a symmetric k-bilinear
/// pairing on V[t,t^-1].
template <FieldScalar F>
F extended_form0(const SpacePtr<F>& space, const LaurentVec<F>& v, const LaurentVec<F>& w) {
    return extended_form(space, v, w).coeff(0);
}

/// Adjoint with respect to the extended form, in coordinates:
/// G^{-1} star_transpose(m) G.
template <FieldScalar F>
LaurentMat<F> adjoint_matrix(const SpacePtr<F>& space, const LaurentMat<F>& m) {
    if (m.n() != space->dim()) throw DimensionMismatch("adjoint: matrix dimension");
    return LaurentMat<F>::constant(space->gram_inverse()) * m.star_transpose() *
           LaurentMat<F>::constant(space->gram());
}

/// A constant automorphism preserving b: m^T G m = G.
template <FieldScalar F>
class ConstantElement {
public:
    static ConstantElement make(SpacePtr<F> space, Mat<F> m) {
        if (m.rows() != space->dim() || m.cols() != space->dim())
            throw DimensionMismatch("constant element has wrong shape");
        if (Mat<F>(m.transpose() * space->gram() * m) != space->gram())
            throw NotUnitary("matrix does not preserve the bilinear form");
        return ConstantElement(std::move(space), std::move(m));
    }

    static ConstantElement identity(SpacePtr<F> space) {
        const std::size_t n = space->dim();
        return ConstantElement(std::move(space), Mat<F>::identity(n));
    }

    const Mat<F>& mat() const { return mat_; }
    const SpacePtr<F>& space() const { return space_; }
    bool is_identity() const { return mat_.is_identity(); }

    friend ConstantElement operator*(const ConstantElement& a, const ConstantElement& b) {
        check_same_space(a.space_, b.space_);
        return ConstantElement(a.space_, a.mat_ * b.mat_);
    }

    ConstantElement inverse() const {
        // m^{-1} = G^{-1} m^T G for form-preserving m
        return ConstantElement(space_,
                               space_->gram_inverse() * mat_.transpose() * space_->gram());
    }

    std::vector<F> apply(const std::vector<F>& v) const { return mat_ * v; }

    friend bool operator==(const ConstantElement& a, const ConstantElement& b) {
        return same_space(a.space_, b.space_) && a.mat_ == b.mat_;
    }
    friend bool operator!=(const ConstantElement& a, const ConstantElement& b) {
        return !(a == b);
    }

private:
    ConstantElement(SpacePtr<F> space, Mat<F> m) : space_(std::move(space)), mat_(std::move(m)) {}

    SpacePtr<F> space_;
    Mat<F> mat_;
};

/// A paraunitary matrix tied to its quadratic space. Construction validates
/// adjoint * mat = identity and caches the adjoint, which is also the group
/// inverse.
template <FieldScalar F>
class GroupElement {
public:
    static GroupElement make(SpacePtr<F> space, LaurentMat<F> m) {
        if (m.n() != space->dim())
            throw DimensionMismatch("group element has wrong matrix dimension");
        LaurentMat<F> adj = adjoint_matrix(space, m);
        const LaurentMat<F> residual = adj * m - LaurentMat<F>::identity(m.n());
        if (!residual.is_zero())
            throw NotParaunitary("adjoint * mat - identity = " + residual.str());
        return GroupElement(std::move(space), std::move(m), std::move(adj));
    }

    static GroupElement identity(SpacePtr<F> space) {
        const std::size_t n = space->dim();
        return GroupElement(std::move(space), LaurentMat<F>::identity(n),
                            LaurentMat<F>::identity(n));
    }

    const LaurentMat<F>& mat() const { return mat_; }
    const LaurentMat<F>& adjoint_mat() const { return adj_; }
    const SpacePtr<F>& space() const { return space_; }

    /// The adjoint element; since (phi')' = phi this just swaps the matrices.
    GroupElement adjoint() const { return GroupElement(space_, adj_, mat_); }

    GroupElement inverse() const { return adjoint(); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        check_same_space(a.space_, b.space_);
        // adjoint of a product is the reversed product of adjoints
        return GroupElement(a.space_, a.mat_ * b.mat_, b.adj_ * a.adj_);
    }

    /// t^k * this (multiplication by the central element t^k I).
    GroupElement shifted(long k) const {
        return GroupElement(space_, mat_.shifted(k), adj_.shifted(-k));
    }

    Mat<F> eval(const F& x) const { return mat_.eval(x); }

    bool is_pure() const { return mat_.eval(F(1)).is_identity(); }

    bool is_identity() const { return mat_.is_identity(); }

    LaurentVec<F> apply(const LaurentVec<F>& v) const { return mat_.apply(v); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return same_space(a.space_, b.space_) && a.mat_ == b.mat_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

private:
    GroupElement(SpacePtr<F> space, LaurentMat<F> m, LaurentMat<F> adj)
        : space_(std::move(space)), mat_(std::move(m)), adj_(std::move(adj)) {}

    SpacePtr<F> space_;
    LaurentMat<F> mat_;
    LaurentMat<F> adj_;
};

/// The degree-one building block of U: t^-1 * proj(U*) + proj(U).
/// It is pure, lies in the negative cone, and multiplies with its
/// complement to t^-1 * identity.
template <FieldScalar F>
GroupElement<F> generator(const Subspace<F>& u) {
    const SpacePtr<F>& space = u.space();
    const Mat<F> proj = u.projection();
    const Mat<F> coproj = Mat<F>::identity(space->dim()) - proj;
    return GroupElement<F>::make(
        space, LaurentMat<F>::from_layers({{-1, coproj}, {0, proj}}, space->dim()));
}

/// t^k * identity; central, pure, paraunitary for every k.
template <FieldScalar F>
GroupElement<F> shift_element(const SpacePtr<F>& space, long k) {
    return GroupElement<F>::identity(space).shifted(k);
}

/// Canonical inclusion of the constants.
template <FieldScalar F>
GroupElement<F> embed_constant(const ConstantElement<F>& h) {
    return GroupElement<F>::make(h.space(), LaurentMat<F>::constant(h.mat()));
}

/// Specialization at t = 1; a group homomorphism onto the constants.
template <FieldScalar F>
ConstantElement<F> specialize1(const GroupElement<F>& phi) {
    return ConstantElement<F>::make(phi.space(), phi.eval(F(1)));
}

/// Specialization at t = -1; the only other specialization homomorphism
/// (the coefficient field never has characteristic 2 here).
template <FieldScalar F>
ConstantElement<F> specialize_minus1(const GroupElement<F>& phi) {
    return ConstantElement<F>::make(phi.space(), phi.eval(F(-1)));
}

/// Splits phi as (pure part, constant part) with
/// phi = pure * embed_constant(constant).
template <FieldScalar F>
std::pair<GroupElement<F>, ConstantElement<F>> semidirect_split(const GroupElement<F>& phi) {
    ConstantElement<F> h = specialize1(phi);
    GroupElement<F> pure = phi * embed_constant(h.inverse());
    return {std::move(pure), std::move(h)};
}

} // namespace ppu
