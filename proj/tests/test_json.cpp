#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppu/json.hpp"
#include "ppu/rng.hpp"
#include "support/test_util.hpp"

using namespace tu;
using ppu::SplitMix64;
namespace io = ppu::io;
using io::json;

TEST_CASE("polynomial serialization round trip") {
    CHECK(io::poly_to_json(PolyQ{}).dump() == "[]");
    const PolyQ p = poly({{-1, q(1, 2)}, {0, Q(3)}});
    CHECK(io::poly_to_json(p).dump() == R"([[-1,"1/2"],[0,"3"]])");
    CHECK(io::poly_from_json(io::poly_to_json(p)) == p);

    SplitMix64 rng(71);
    for (int iter = 0; iter < 50; ++iter) {
        PolyQ f;
        for (long e = -4; e <= 4; ++e)
            f = f + PolyQ::monomial(Q(rng.range(-3, 3), 1 + rng.range(0, 3)), e);
        CHECK(io::poly_from_json(io::poly_to_json(f)) == f);
    }
}

TEST_CASE("polynomial parsing is strict") {
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([[0,"1"],[0,"2"]])")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([[1,"1"],[0,"2"]])")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([[0,"0"]])")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([[0,1]])")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([["0","1"]])")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"("1")")), ppu::ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"([[0,"1/1.5"]])")), ppu::ParseError);
}

TEST_CASE("element serialization round trip") {
    SplitMix64 rng(72);
    for (int iter = 0; iter < 30; ++iter) {
        const auto s = ppu::random_space<Q>(1 + rng.below(4), rng);
        const ElemQ phi = ppu::random_negative(s, rng.below(4), rng) *
                          ppu::embed_constant(ppu::random_unitary(s, 1, rng));
        const json j = io::element_to_json(phi);
        const ElemQ back = ElemQ::make(SpaceQ::make(io::scalar_mat_from_json(j.at("gram"))),
                                       io::laurent_mat_from_json(j.at("mat")));
        CHECK(back == phi);
        // canonical serialization: equal values, equal bytes
        CHECK(io::render(io::element_to_json(back)) == io::render(j));
    }
}

TEST_CASE("matrix payload parsing is strict") {
    CHECK_THROWS_AS(io::laurent_mat_from_json(json::parse("[]")), ppu::ParseError);
    CHECK_THROWS_AS(io::laurent_mat_from_json(json::parse(R"([[[[0,"1"]]],[[[0,"1"]]],[]])")),
                    ppu::ParseError);
    CHECK_THROWS_AS(io::scalar_mat_from_json(json::parse(R"([["1"],["1","2"]])")),
                    ppu::ParseError);
    CHECK_THROWS_AS(io::gram_from_json(json::parse(R"({"n":3,"gram":[["1"]]})")),
                    ppu::ParseError);
    CHECK(io::gram_from_json(json::parse(R"({"n":1,"gram":[["1"]]})")) == mat({{1}}));
}

TEST_CASE("subspace and space serialization") {
    const auto s = space_of({{2, 1}, {1, 1}});
    CHECK(io::render(io::space_to_json(*s)) ==
          "{\"gram\":[[\"2\",\"1\"],[\"1\",\"1\"]],\"n\":2}\n");
    const SubQ u = span_of(s, {{2, 4}});
    CHECK(io::subspace_to_json(u).dump() == R"({"basis":[["1","2"]]})");
    CHECK(io::subspace_to_json(SubQ::zero(s)).dump() == R"({"basis":[]})");
    const MatQ basis = io::subspace_basis_from_json(json::parse(R"({"basis":[["1","2"]]})"), 2);
    CHECK(SubQ::span(s, basis) == u);
}

TEST_CASE("submodule serialization round trip") {
    SplitMix64 rng(73);
    for (int iter = 0; iter < 30; ++iter) {
        const auto s = ppu::random_space<Q>(1 + rng.below(3), rng);
        const ModQ m = ppu::kernel_submodule(ppu::random_negative(s, rng.below(5), rng));
        const json j = io::submodule_to_json(m);
        const auto [bound, rows] = io::submodule_from_json(j, s->dim());
        CHECK(ModQ::from_basis_checked(s, bound, rows) == m);
    }
    const auto s = euclid(2);
    CHECK_THROWS_AS(io::submodule_from_json(json::parse(R"({"m":1,"basis":[[["1"]]]})"), 2),
                    ppu::ParseError);
}

TEST_CASE("normal form serialization") {
    const auto s = euclid(2);
    const ElemQ phi = ppu::generator(span_of(s, {{1, 0}})) *
                      ppu::embed_constant(ConstQ::make(s, mat({{-1, 0}, {0, 1}})));
    const json j = io::normal_form_to_json(ppu::factorize_lossless(phi));
    CHECK(j.dump() ==
          R"({"factors":[{"basis":[["1","0"]]}],"tail":[["-1","0"],["0","1"]]})");
}
