#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppu/laurent.hpp"
#include "ppu/matrix.hpp"

namespace ppu {

/// Vector with Laurent-polynomial coordinates, v = sum_i t^i v_i.
template <FieldScalar F>
class LaurentVec {
public:
    explicit LaurentVec(std::size_t dim) : e_(dim) {}
    explicit LaurentVec(std::vector<LaurentPoly<F>> entries) : e_(std::move(entries)) {}

    /// t^exponent * v for a constant coordinate vector v.
    static LaurentVec monomial(const std::vector<F>& v, long exponent) {
        LaurentVec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            r.e_[i] = LaurentPoly<F>::monomial(v[i], exponent);
        return r;
    }

    std::size_t dim() const { return e_.size(); }
    const LaurentPoly<F>& operator[](std::size_t i) const { return e_[i]; }
    LaurentPoly<F>& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    long valuation() const {
        bool any = false;
        long v = 0;
        for (const auto& p : e_) {
            if (p.is_zero()) continue;
            v = any ? std::min(v, p.valuation()) : p.valuation();
            any = true;
        }
        return v;
    }

    long degree() const {
        bool any = false;
        long d = 0;
        for (const auto& p : e_) {
            if (p.is_zero()) continue;
            d = any ? std::max(d, p.degree()) : p.degree();
            any = true;
        }
        return d;
    }

    /// Coefficient vector of t^exponent.
    std::vector<F> layer(long exponent) const {
        std::vector<F> v(e_.size(), F(0));
        for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i].coeff(exponent);
        return v;
    }

    friend LaurentVec operator+(const LaurentVec& a, const LaurentVec& b) {
        if (a.dim() != b.dim()) throw DimensionMismatch("vector sum");
        LaurentVec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend LaurentVec operator*(const LaurentPoly<F>& f, const LaurentVec& v) {
        LaurentVec r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r.e_[i] = f * v.e_[i];
        return r;
    }

    std::vector<F> eval(const F& x) const {
        std::vector<F> r(e_.size(), F(0));
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i].eval(x);
        return r;
    }

    friend bool operator==(const LaurentVec& a, const LaurentVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const LaurentVec& a, const LaurentVec& b) { return !(a == b); }

private:
    std::vector<LaurentPoly<F>> e_;
};

/// Square matrix of Laurent polynomials, representing an endomorphism of
/// V[t,t^-1]. Exponent bounds over all entries are kept up to date on
/// mutation so valuation()/degree() are O(1).
template <FieldScalar F>
class LaurentMat {
public:
    explicit LaurentMat(std::size_t n) : n_(n), e_(n * n) {}

    static LaurentMat identity(std::size_t n) {
        LaurentMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, LaurentPoly<F>::one());
        return m;
    }

    static LaurentMat constant(const Mat<F>& c) { return from_layer(c, 0); }

    /// t^exponent * C for a constant matrix C.
    static LaurentMat from_layer(const Mat<F>& c, long exponent) {
        if (c.rows() != c.cols()) throw DimensionMismatch("Laurent matrix must be square");
        LaurentMat m(c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                m.set(i, j, LaurentPoly<F>::monomial(c(i, j), exponent));
        return m;
    }

    static LaurentMat from_layers(const std::map<long, Mat<F>>& layers, std::size_t n) {
        LaurentMat m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                LaurentPoly<F> p;
                for (const auto& [e, c] : layers) {
                    if (c.rows() != n || c.cols() != n)
                        throw DimensionMismatch("layer shape differs from matrix dimension");
                    p = p + LaurentPoly<F>::monomial(c(i, j), e);
                }
                m.set(i, j, p);
            }
        return m;
    }

    std::size_t n() const { return n_; }

    const LaurentPoly<F>& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, LaurentPoly<F> p) {
        e_[i * n_ + j] = std::move(p);
        refresh_bounds();
    }

    /// Min exponent over all entries; 0 for the zero matrix.
    long valuation() const { return val_; }
    /// Max exponent over all entries; 0 for the zero matrix.
    long degree() const { return deg_; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool is_identity() const { return *this == identity(n_); }

    /// Coefficient matrix of t^exponent.
    Mat<F> layer(long exponent) const {
        Mat<F> c(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) c(i, j) = at(i, j).coeff(exponent);
        return c;
    }

    friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
        if (a.n_ != b.n_)
            throw DimensionMismatch("Laurent matrix product: dimension " +
                                    std::to_string(a.n_) + " vs " + std::to_string(b.n_));
        LaurentMat r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) {
                LaurentPoly<F> s;
                for (std::size_t k = 0; k < a.n_; ++k) s = s + a.at(i, k) * b.at(k, j);
                r.e_[i * r.n_ + j] = std::move(s);
            }
        r.refresh_bounds();
        return r;
    }

    friend LaurentMat operator+(const LaurentMat& a, const LaurentMat& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("Laurent matrix sum");
        LaurentMat r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        r.refresh_bounds();
        return r;
    }

    friend LaurentMat operator-(const LaurentMat& a, const LaurentMat& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("Laurent matrix difference");
        LaurentMat r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        r.refresh_bounds();
        return r;
    }

    friend LaurentMat operator*(const LaurentPoly<F>& f, const LaurentMat& a) {
        LaurentMat r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = f * a.e_[k];
        r.refresh_bounds();
        return r;
    }

    /// result[i][j] = star(this[j][i]); the coefficient layers of the result
    /// are the transposed layers of this at negated exponents.
    LaurentMat star_transpose() const {
        LaurentMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.e_[i * n_ + j] = at(j, i).star();
        r.refresh_bounds();
        return r;
    }

    /// t^k * this
    LaurentMat shifted(long k) const {
        LaurentMat r(n_);
        for (std::size_t idx = 0; idx < e_.size(); ++idx) r.e_[idx] = e_[idx].shifted(k);
        r.refresh_bounds();
        return r;
    }

    /// Substitutes a nonzero field element for t; a ring homomorphism.
    Mat<F> eval(const F& x) const {
        if (x.is_zero()) throw Error("specialization at t = 0 is undefined");
        Mat<F> c(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) c(i, j) = at(i, j).eval(x);
        return c;
    }

    LaurentVec<F> apply(const LaurentVec<F>& v) const {
        if (v.dim() != n_) throw DimensionMismatch("matrix-vector product");
        LaurentVec<F> r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            LaurentPoly<F> s;
            for (std::size_t j = 0; j < n_; ++j) s = s + at(i, j) * v[j];
            r[i] = std::move(s);
        }
        return r;
    }

    friend bool operator==(const LaurentMat& a, const LaurentMat& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const LaurentMat& a, const LaurentMat& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + at(i, j).str();
        }
        return s + "]";
    }

private:
    void refresh_bounds() {
        bool any = false;
        long lo = 0, hi = 0;
        for (const auto& p : e_) {
            if (p.is_zero()) continue;
            if (!any) {
                lo = p.valuation();
                hi = p.degree();
                any = true;
            } else {
                lo = std::min(lo, p.valuation());
                hi = std::max(hi, p.degree());
            }
        }
        val_ = lo;
        deg_ = hi;
    }

    std::size_t n_ = 0;
    std::vector<LaurentPoly<F>> e_;
    long val_ = 0, deg_ = 0;
};

} // namespace ppu
