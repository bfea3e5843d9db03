#pragma once

#include <utility>
#include <vector>

#include "ppu/order.hpp"

namespace ppu {

/// The unique factorization of a lossless matrix into degree-one building
/// blocks followed by a constant: phi = prod_i generator(U_i) * tail, with
/// the adjacency condition U_i* + U_{i+1} = V at every junction. Factors
/// equal to the full space contribute nothing and are dropped; an empty
/// factor list encodes the identity (times the tail).
template <FieldScalar F>
class NormalForm {
public:
    NormalForm(std::vector<Subspace<F>> factors, ConstantElement<F> tail)
        : factors_(std::move(factors)), tail_(std::move(tail)) {
        for (const auto& u : factors_) check_same_space(u.space(), tail_.space());
        std::erase_if(factors_, [](const Subspace<F>& u) { return u.is_full(); });
    }

    const std::vector<Subspace<F>>& factors() const { return factors_; }
    const ConstantElement<F>& tail() const { return tail_; }
    std::size_t length() const { return factors_.size(); }
    const SpacePtr<F>& space() const { return tail_.space(); }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.factors_ == b.factors_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

private:
    std::vector<Subspace<F>> factors_;
    ConstantElement<F> tail_;
};

namespace detail {
template <FieldScalar F>
void assert_adjacency(const std::vector<Subspace<F>>& factors) {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        if (!join(factors[i].orthocomplement(), factors[i + 1]).is_full())
            throw AdjacencyViolation("normal form factors " + std::to_string(i) + "," +
                                     std::to_string(i + 1) + " violate adjacency");
    }
}

/// Peels the greatest interval left-divisor at every step. A building block
/// p_X left-divides phi exactly when X contains the image of the constant
/// coefficient phi_0, so the greatest choice is X = im(phi_0); it is proper
/// unless phi is the identity. Peeling from the left is what makes the
/// emitted sequence satisfy U_i* + U_{i+1} = V; peeling from the right
/// yields the mirrored normal form instead.
template <FieldScalar F>
std::vector<Subspace<F>> left_greedy_factors(GroupElement<F> phi) {
    std::vector<Subspace<F>> factors;
    while (!phi.is_identity()) {
        const Subspace<F> x =
            Subspace<F>::span(phi.space(), phi.mat().layer(0).transpose());
        if (x.is_full())
            throw AdjacencyViolation("constant coefficient of a non-identity factorand "
                                     "must be singular");
        phi = generator(x).inverse() * phi;
        factors.push_back(std::move(x));
    }
    return factors;
}
} // namespace detail

/// Factorizes a pure negative-cone element into building blocks (identity
/// tail), yielding the unique factorization with U_i* + U_{i+1} = V.
template <FieldScalar F>
NormalForm<F> factorize_pure(const GroupElement<F>& phi) {
    const Cone cone = cone_classify(phi);
    if (cone != Cone::Negative && cone != Cone::Identity)
        throw NotNegativeCone("factorization requires a negative-cone element");
    std::vector<Subspace<F>> factors = detail::left_greedy_factors(phi);
    detail::assert_adjacency(factors);
    return NormalForm<F>(std::move(factors), ConstantElement<F>::identity(phi.space()));
}

/// Factorizes a paraunitary matrix with exponents <= 0 (an FIR lossless
/// matrix in t^-1) as building blocks times the constant tail
/// h = specialize1(phi).
template <FieldScalar F>
NormalForm<F> factorize_lossless(const GroupElement<F>& phi) {
    if (phi.mat().degree() > 0)
        throw PositiveExponentPresent("lossless factorization requires exponents <= 0");
    ConstantElement<F> h = specialize1(phi);
    const GroupElement<F> pure = phi * embed_constant(h.inverse());
    std::vector<Subspace<F>> factors = detail::left_greedy_factors(pure);
    detail::assert_adjacency(factors);
    return NormalForm<F>(std::move(factors), std::move(h));
}

/// Multiplies a normal form back out: prod_i generator(U_i) * tail.
template <FieldScalar F>
GroupElement<F> multiply_out(const NormalForm<F>& nf) {
    GroupElement<F> acc = GroupElement<F>::identity(nf.space());
    for (const Subspace<F>& u : nf.factors()) acc = acc * generator(u);
    return acc * embed_constant(nf.tail());
}

/// Writes a pure element as a left fraction over the negative cone:
/// phi = t^k * sigma with sigma negative and k = max(degree, 0).
template <FieldScalar F>
std::pair<long, GroupElement<F>> fraction_form(const GroupElement<F>& phi) {
    if (!phi.is_pure()) throw NotPure("fraction form requires a pure element");
    const long k = std::max(phi.mat().degree(), 0L);
    return {k, phi.shifted(-k)};
}

} // namespace ppu
