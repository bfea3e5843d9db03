#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "ppu/normal_form.hpp"
#include "ppu/rational.hpp"
#include "ppu/submodule.hpp"

// JSON wire formats. Scalars travel as strings "num" or "num/den" so no
// float ever appears; a Laurent polynomial is a list of [exponent, scalar]
// pairs sorted by exponent; serialization is canonical so equal values have
// equal bytes.
namespace ppu::io {

using json = nlohmann::json;
using Q = Rational;

inline json poly_to_json(const LaurentPoly<Q>& p) {
    json a = json::array();
    for (long e = p.valuation(); e <= p.degree() && !p.is_zero(); ++e) {
        const Q c = p.coeff(e);
        if (!c.is_zero()) a.push_back(json::array({e, c.str()}));
    }
    return a;
}

inline LaurentPoly<Q> poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial: expected an array of [exponent, scalar]");
    LaurentPoly<Q> p;
    bool first = true;
    long prev = 0;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_string())
            throw ParseError("polynomial term: expected [integer exponent, scalar string]");
        const long e = item[0].get<long>();
        if (!first && e <= prev) throw ParseError("polynomial terms must have ascending exponents");
        const Q c = Q::from_string(item[1].get<std::string>());
        if (c.is_zero()) throw ParseError("polynomial term with zero coefficient");
        p = p + LaurentPoly<Q>::monomial(c, e);
        prev = e;
        first = false;
    }
    return p;
}

inline json scalar_mat_to_json(const Mat<Q>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Parses a rectangular array of scalar strings; `cols_hint` fixes the row
/// length when there are no rows.
inline Mat<Q> scalar_mat_from_json(const json& j, std::size_t cols_hint = 0) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = cols_hint;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError("matrix row: expected an array");
        cols = j[0].size();
    }
    Mat<Q> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must all have the same length");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_string()) throw ParseError("matrix entry must be a scalar string");
            m(i, k) = Q::from_string(j[i][k].get<std::string>());
        }
    }
    return m;
}

inline json space_to_json(const QuadSpace<Q>& space) {
    return json{{"n", space.dim()}, {"gram", scalar_mat_to_json(space.gram())}};
}

/// Syntactic read of {"n":, "gram":}; form validation is up to the caller.
inline Mat<Q> gram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw ParseError("space: expected an object with a \"gram\" field");
    Mat<Q> gram = scalar_mat_from_json(j.at("gram"));
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 0)
            throw ParseError("space: \"n\" must be a nonnegative integer");
        if (j.at("n").get<std::size_t>() != gram.rows())
            throw ParseError("space: \"n\" disagrees with the Gram matrix shape");
    }
    return gram;
}

inline json subspace_to_json(const Subspace<Q>& u) {
    return json{{"basis", scalar_mat_to_json(u.basis())}};
}

inline Mat<Q> subspace_basis_from_json(const json& j, std::size_t ambient_dim) {
    if (!j.is_object() || !j.contains("basis"))
        throw ParseError("subspace: expected an object with a \"basis\" field");
    return scalar_mat_from_json(j.at("basis"), ambient_dim);
}

inline json laurent_mat_to_json(const LaurentMat<Q>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LaurentMat<Q> laurent_mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
    const std::size_t n = j.size();
    LaurentMat<Q> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw ParseError("matrix must be square");
        for (std::size_t k = 0; k < n; ++k) m.set(i, k, poly_from_json(j[i][k]));
    }
    return m;
}

inline json element_to_json(const GroupElement<Q>& phi) {
    return json{{"gram", scalar_mat_to_json(phi.space()->gram())},
                {"mat", laurent_mat_to_json(phi.mat())}};
}

inline json submodule_to_json(const GradedSubmodule<Q>& m) {
    const std::size_t n = m.space()->dim();
    json basis = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json vec = json::array();
        for (std::size_t block = 0; block < m.bound(); ++block) {
            json lay = json::array();
            for (std::size_t j = 0; j < n; ++j) lay.push_back(m.basis()(i, block * n + j).str());
            vec.push_back(std::move(lay));
        }
        basis.push_back(std::move(vec));
    }
    return json{{"m", m.bound()}, {"basis", basis}};
}

/// Returns (bound, coordinate rows); the caller builds the checked module.
inline std::pair<std::size_t, Mat<Q>> submodule_from_json(const json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("m") || !j.contains("basis"))
        throw ParseError("submodule: expected an object with \"m\" and \"basis\"");
    if (!j.at("m").is_number_integer() || j.at("m").get<long>() < 0)
        throw ParseError("submodule: \"m\" must be a nonnegative integer");
    const std::size_t bound = j.at("m").get<std::size_t>();
    const json& basis = j.at("basis");
    if (!basis.is_array()) throw ParseError("submodule: \"basis\" must be an array");
    Mat<Q> rows(basis.size(), bound * n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_array() || basis[i].size() != bound)
            throw ParseError("submodule vector must list one layer per degree");
        for (std::size_t block = 0; block < bound; ++block) {
            const json& lay = basis[i][block];
            if (!lay.is_array() || lay.size() != n)
                throw ParseError("submodule layer has wrong coordinate count");
            for (std::size_t k = 0; k < n; ++k) {
                if (!lay[k].is_string()) throw ParseError("submodule entry must be a string");
                rows(i, block * n + k) = Q::from_string(lay[k].get<std::string>());
            }
        }
    }
    return {bound, std::move(rows)};
}

inline json normal_form_to_json(const NormalForm<Q>& nf) {
    json factors = json::array();
    for (const auto& u : nf.factors()) factors.push_back(subspace_to_json(u));
    return json{{"factors", factors}, {"tail", scalar_mat_to_json(nf.tail().mat())}};
}

/// Canonical one-line rendering used by the CLI: compact dump plus newline.
inline std::string render(const json& j) { return j.dump() + "\n"; }

} // namespace ppu::io
