#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppu/matrix.hpp"

namespace ppu {

/// A finite-dimensional vector space with an anisotropic symmetric bilinear
/// form, held as its Gram matrix. Construction validates anisotropy: over
/// the rationals via Sylvester's criterion (all leading principal minors
/// positive, i.e. positive definiteness), over a prime field by exhaustive
/// search for an isotropic vector (dimension <= 2 only). Characteristic 2
/// is rejected outright.
template <FieldScalar F>
class QuadSpace {
public:
    static std::shared_ptr<const QuadSpace> make(const Mat<F>& gram) {
        if (F::characteristic() == 2)
            throw FormValidationError("coefficient field has characteristic 2");
        if (gram.rows() != gram.cols())
            throw FormValidationError("Gram matrix is not square");
        const std::size_t n = gram.rows();
        if (n == 0) throw FormValidationError("space dimension must be at least 1");
        if (!gram.is_symmetric()) throw FormValidationError("Gram matrix is not symmetric");

        std::vector<F> minors;
        if constexpr (F::characteristic() == 0) {
            minors = leading_principal_minors(gram);
            for (std::size_t k = 0; k < minors.size(); ++k)
                if (minors[k].sign() <= 0)
                    throw FormValidationError("not positive definite: leading principal minor " +
                                              std::to_string(k + 1) + " is " + minors[k].str());
        } else {
            if (n > 2)
                throw FormValidationError(
                    "anisotropic forms over a finite field exist only in dimension <= 2");
            if (auto witness = find_isotropic(gram))
                throw FormValidationError("isotropic vector found: " + vec_str(*witness));
        }
        return std::shared_ptr<const QuadSpace>(
            new QuadSpace(gram, inverse(gram), std::move(minors)));
    }

    std::size_t dim() const { return gram_.rows(); }
    const Mat<F>& gram() const { return gram_; }
    const Mat<F>& gram_inverse() const { return gram_inv_; }

    /// Leading principal minors over the rationals (the anisotropy
    /// certificate); empty over a finite field, where the certificate is the
    /// exhaustive check performed at construction.
    const std::vector<F>& anisotropy_minors() const { return minors_; }

    /// b(v, w) = v^T G w
    F bilinear(const std::vector<F>& v, const std::vector<F>& w) const {
        if (v.size() != dim() || w.size() != dim())
            throw DimensionMismatch("bilinear form argument dimension");
        F acc(0);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) acc += v[i] * gram_(i, j) * w[j];
        return acc;
    }

    friend bool operator==(const QuadSpace& a, const QuadSpace& b) { return a.gram_ == b.gram_; }
    friend bool operator!=(const QuadSpace& a, const QuadSpace& b) { return !(a == b); }

private:
    QuadSpace(Mat<F> gram, Mat<F> inv, std::vector<F> minors)
        : gram_(std::move(gram)), gram_inv_(std::move(inv)), minors_(std::move(minors)) {}

    static std::optional<std::vector<F>> find_isotropic(const Mat<F>& gram) {
        const std::size_t n = gram.rows();
        const unsigned long p = F::characteristic();
        unsigned long count = 1;
        for (std::size_t i = 0; i < n; ++i) count *= p;
        for (unsigned long idx = 1; idx < count; ++idx) {
            std::vector<F> v(n, F(0));
            unsigned long rest = idx;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = F(static_cast<long>(rest % p));
                rest /= p;
            }
            F q(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) q += v[i] * gram(i, j) * v[j];
            if (q.is_zero()) return v;
        }
        return std::nullopt;
    }

    static std::string vec_str(const std::vector<F>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + ")";
    }

    Mat<F> gram_;
    Mat<F> gram_inv_;
    std::vector<F> minors_;
};

template <FieldScalar F>
using SpacePtr = std::shared_ptr<const QuadSpace<F>>;

template <FieldScalar F>
bool same_space(const SpacePtr<F>& a, const SpacePtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

template <FieldScalar F>
void check_same_space(const SpacePtr<F>& a, const SpacePtr<F>& b) {
    if (!same_space(a, b)) throw SpaceMismatch("operands live in different quadratic spaces");
}

/// A subspace of V, stored as a canonical reduced-echelon basis (r x n,
/// full row rank; r = 0 encodes the zero subspace). Equal subspaces have
/// identical bases, so equality is matrix equality.
template <FieldScalar F>
class Subspace {
public:
    /// Row span of the given generators.
    static Subspace span(SpacePtr<F> space, const Mat<F>& generators) {
        if (generators.cols() != space->dim() && generators.rows() > 0)
            throw DimensionMismatch("subspace generators have wrong coordinate count");
        Mat<F> gens = generators;
        if (generators.rows() == 0) gens = Mat<F>(0, space->dim());
        return Subspace(std::move(space), row_space(gens));
    }

    static Subspace zero(SpacePtr<F> space) {
        const std::size_t n = space->dim();
        return Subspace(std::move(space), Mat<F>(0, n));
    }

    static Subspace full(SpacePtr<F> space) {
        const std::size_t n = space->dim();
        return Subspace(std::move(space), Mat<F>::identity(n));
    }

    static Subspace line(SpacePtr<F> space, const std::vector<F>& v) {
        Mat<F> m(1, v.size());
        for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
        return span(std::move(space), m);
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return space_->dim(); }
    const Mat<F>& basis() const { return basis_; }
    const SpacePtr<F>& space() const { return space_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    /// U* = { v : b(u, v) = 0 for all u in U }; the solution space of
    /// (B G) v = 0 for the basis B of U.
    Subspace orthocomplement() const {
        return Subspace(space_, null_space_rows(Mat<F>(basis_ * space_->gram())));
    }

    /// The projection onto U along U*, as a constant matrix:
    /// B^T (B G B^T)^{-1} B G. The middle factor is invertible because the
    /// restriction of the form to U is again anisotropic.
    Mat<F> projection() const {
        const std::size_t n = ambient_dim();
        if (is_zero()) return Mat<F>(n, n);
        const Mat<F>& g = space_->gram();
        const Mat<F> bt = basis_.transpose();
        return bt * inverse(Mat<F>(basis_ * g * bt)) * basis_ * g;
    }

    bool contains(const std::vector<F>& v) const { return row_space_contains(basis_, v); }

    bool contains(const Subspace& other) const {
        check_same_space(space_, other.space_);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return same_space(a.space_, b.space_) && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(SpacePtr<F> space, Mat<F> canonical_basis)
        : space_(std::move(space)), basis_(std::move(canonical_basis)) {}

    SpacePtr<F> space_;
    Mat<F> basis_;
};

template <FieldScalar F>
Subspace<F> meet(const Subspace<F>& u, const Subspace<F>& w) {
    check_same_space(u.space(), w.space());
    return Subspace<F>::span(u.space(), row_space_intersect(u.basis(), w.basis()));
}

template <FieldScalar F>
Subspace<F> join(const Subspace<F>& u, const Subspace<F>& w) {
    check_same_space(u.space(), w.space());
    return Subspace<F>::span(u.space(), stack_rows(u.basis(), w.basis()));
}

/// U bot W: W is contained in U*, i.e. B_U G B_W^T = 0. Symmetric.
template <FieldScalar F>
bool rel_bot(const Subspace<F>& u, const Subspace<F>& w) {
    check_same_space(u.space(), w.space());
    return Mat<F>(u.basis() * u.space()->gram() * w.basis().transpose()).is_zero();
}

/// U top W: W contains U*. Symmetric (equivalent to U* bot W*).
template <FieldScalar F>
bool rel_top(const Subspace<F>& u, const Subspace<F>& w) {
    check_same_space(u.space(), w.space());
    return w.contains(u.orthocomplement());
}

/// U + W when U bot W holds, otherwise undefined.
template <FieldScalar F>
std::optional<Subspace<F>> partial_oplus(const Subspace<F>& u, const Subspace<F>& w) {
    if (!rel_bot(u, w)) return std::nullopt;
    return join(u, w);
}

/// U intersect W when U top W holds, otherwise undefined.
template <FieldScalar F>
std::optional<Subspace<F>> partial_sqcap(const Subspace<F>& u, const Subspace<F>& w) {
    if (!rel_top(u, w)) return std::nullopt;
    return meet(u, w);
}

} // namespace ppu
