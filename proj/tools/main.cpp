#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "ppu/json.hpp"
#include "ppu/order.hpp"
#include "ppu/rng.hpp"

namespace {

using Q = ppu::Rational;
using json = ppu::io::json;
using ElemQ = ppu::GroupElement<Q>;
using MatQ = ppu::Mat<Q>;
using SpaceQ = ppu::QuadSpace<Q>;
using SubQ = ppu::Subspace<Q>;

struct Options {
    std::string gram_path;
    std::uint64_t seed = 0;
    std::string output_path;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ppu::ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ppu::ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

ppu::SpacePtr<Q> space_from_file(const std::string& path) {
    return SpaceQ::make(ppu::io::gram_from_json(read_json_file(path)));
}

/// Space resolution: --gram file beats the "gram" field embedded in the
/// payload, which beats the identity form of the inferred dimension.
ppu::SpacePtr<Q> resolve_space(const json& payload, const Options& opt, std::size_t n) {
    if (!opt.gram_path.empty()) return space_from_file(opt.gram_path);
    if (payload.is_object() && payload.contains("gram"))
        return SpaceQ::make(ppu::io::scalar_mat_from_json(payload.at("gram")));
    return SpaceQ::make(MatQ::identity(n));
}

ElemQ load_element(const std::string& path, const Options& opt) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("mat"))
        throw ppu::ParseError("matrix payload must be an object with a \"mat\" field");
    ppu::LaurentMat<Q> mat = ppu::io::laurent_mat_from_json(j.at("mat"));
    return ElemQ::make(resolve_space(j, opt, mat.n()), std::move(mat));
}

int emit(const json& j, const Options& opt) {
    const std::string text = ppu::io::render(j);
    if (opt.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output_path, std::ios::binary);
        if (!out) throw ppu::Error("cannot write output file: " + opt.output_path);
        out << text;
    }
    return 0;
}

int run_verify(const std::string& path, const Options& opt) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("mat"))
        throw ppu::ParseError("matrix payload must be an object with a \"mat\" field");
    ppu::LaurentMat<Q> mat = ppu::io::laurent_mat_from_json(j.at("mat"));
    const auto space = resolve_space(j, opt, mat.n());
    json report;
    try {
        const ElemQ phi = ElemQ::make(space, std::move(mat));
        const bool pure = phi.is_pure();
        report["paraunitary"] = true;
        report["pure"] = pure;
        report["cone"] = pure ? json(ppu::to_string(ppu::cone_classify(phi))) : json(nullptr);
        report["interval"] = pure && ppu::in_interval(phi);
        emit(report, opt);
        return 0;
    } catch (const ppu::NotParaunitary&) {
        report["paraunitary"] = false;
        report["pure"] = nullptr;
        report["cone"] = nullptr;
        report["interval"] = nullptr;
        emit(report, opt);
        return 1;
    }
}

int run_gen(const std::string& path, const Options& opt) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("basis"))
        throw ppu::ParseError("subspace payload must be an object with a \"basis\" field");
    const json& basis = j.at("basis");
    if (!basis.is_array()) throw ppu::ParseError("subspace basis must be an array");
    std::size_t n = 0;
    if (!basis.empty() && basis[0].is_array()) {
        n = basis[0].size();
    } else if (!opt.gram_path.empty()) {
        n = space_from_file(opt.gram_path)->dim();
    } else {
        throw ppu::ParseError("cannot infer the dimension of an empty basis; pass --gram");
    }
    const auto space = resolve_space(j, opt, n);
    const SubQ u = SubQ::span(space, ppu::io::scalar_mat_from_json(basis, space->dim()));
    return emit(ppu::io::element_to_json(ppu::generator(u)), opt);
}

int run_factor(const std::string& path, const Options& opt) {
    const ElemQ phi = load_element(path, opt);
    const ppu::NormalForm<Q> nf = ppu::factorize_lossless(phi);
    const bool verified = ppu::multiply_out(nf) == phi;
    json out = ppu::io::normal_form_to_json(nf);
    out["verified"] = verified;
    emit(out, opt);
    return verified ? 0 : 1;
}

int run_meet_join(const std::string& a_path, const std::string& b_path, bool is_meet,
                  const Options& opt) {
    const ElemQ a = load_element(a_path, opt);
    const ElemQ b = load_element(b_path, opt);
    const ElemQ bound = is_meet ? ppu::lattice_meet(a, b) : ppu::lattice_join(a, b);
    const auto ok = [](ppu::OrderRelation r) {
        return r == ppu::OrderRelation::LessEq || r == ppu::OrderRelation::Equal;
    };
    const bool sound = is_meet
                           ? ok(ppu::compare(bound, a)) && ok(ppu::compare(bound, b))
                           : ok(ppu::compare(a, bound)) && ok(ppu::compare(b, bound));
    if (!sound) throw ppu::Error("lattice postcondition failed"); // unreachable
    return emit(ppu::io::element_to_json(bound), opt);
}

int run_compare(const std::string& a_path, const std::string& b_path, const Options& opt) {
    const ElemQ a = load_element(a_path, opt);
    const ElemQ b = load_element(b_path, opt);
    return emit(json{{"relation", ppu::to_string(ppu::compare(a, b))}}, opt);
}

int run_omega(const std::string& path, const Options& opt) {
    const ElemQ phi = load_element(path, opt);
    const ppu::GradedSubmodule<Q> kernel = ppu::kernel_submodule(phi);
    if (!ppu::image_submodule(phi, kernel).is_zero())
        throw ppu::Error("kernel postcondition failed"); // unreachable
    return emit(ppu::io::submodule_to_json(kernel), opt);
}

int run_complement(const std::string& path, const Options& opt) {
    const ElemQ phi = load_element(path, opt);
    return emit(ppu::io::element_to_json(ppu::interval_complement(phi)), opt);
}

int run_random(std::size_t dim, std::size_t length, const Options& opt) {
    const auto space = opt.gram_path.empty()
                           ? SpaceQ::make(MatQ::identity(dim))
                           : space_from_file(opt.gram_path);
    if (space->dim() != dim) throw ppu::Error("--gram dimension disagrees with <dim>");
    ppu::SplitMix64 rng(opt.seed);
    const ElemQ phi = ppu::random_negative(space, length, rng);
    const auto cone = ppu::cone_classify(phi);
    if (cone != ppu::Cone::Negative && cone != ppu::Cone::Identity)
        throw ppu::Error("random element postcondition failed"); // unreachable
    return emit(ppu::io::element_to_json(phi), opt);
}

int run_spec(const std::string& path, long at, const Options& opt) {
    const ElemQ phi = load_element(path, opt);
    const ppu::ConstantElement<Q> value =
        at == 1 ? ppu::specialize1(phi) : ppu::specialize_minus1(phi);
    return emit(json{{"at", at}, {"mat", ppu::io::scalar_mat_to_json(value.mat())}}, opt);
}

json error_json(const std::string& kind, const std::string& detail) {
    return json{{"error", kind}, {"detail", detail}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for paraunitary matrices over an anisotropic form: "
                 "verification, building blocks, the lattice order, and normal-form "
                 "factorization"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--gram", opt.gram_path, "space file {\"n\":..,\"gram\":..} (default: identity)");
    app.add_option("--seed", opt.seed, "64-bit seed for `random` (default 0)");
    app.add_option("--output", opt.output_path, "write the result here instead of stdout");

    std::string a_path, b_path;
    std::size_t dim = 0, length = 0;
    long at = 1;

    auto* verify = app.add_subcommand("verify", "check paraunitarity, purity, cone, interval");
    verify->add_option("file", a_path)->required();
    auto* gen = app.add_subcommand("gen", "building block of a subspace");
    gen->add_option("subspace", a_path)->required();
    auto* factor = app.add_subcommand("factor", "normal-form factorization");
    factor->add_option("file", a_path)->required();
    auto* meet = app.add_subcommand("meet", "greatest lower bound of two pure elements");
    meet->add_option("a", a_path)->required();
    meet->add_option("b", b_path)->required();
    auto* join = app.add_subcommand("join", "least upper bound of two pure elements");
    join->add_option("a", a_path)->required();
    join->add_option("b", b_path)->required();
    auto* cmp = app.add_subcommand("compare", "order relation between two pure elements");
    cmp->add_option("a", a_path)->required();
    cmp->add_option("b", b_path)->required();
    auto* omega = app.add_subcommand("omega", "kernel submodule of a negative-cone element");
    omega->add_option("file", a_path)->required();
    auto* complement = app.add_subcommand("complement", "interval complement t^-1 phi^-1");
    complement->add_option("file", a_path)->required();
    auto* random = app.add_subcommand("random", "seeded product of random building blocks");
    random->add_option("dim", dim)->required()->check(CLI::PositiveNumber);
    random->add_option("length", length)->required();
    auto* spec = app.add_subcommand("spec", "specialize t to 1 or -1");
    spec->add_option("file", a_path)->required();
    spec->add_option("--at", at, "specialization point")
        ->required()
        ->check(CLI::IsMember({1, -1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(a_path, opt);
        if (gen->parsed()) return run_gen(a_path, opt);
        if (factor->parsed()) return run_factor(a_path, opt);
        if (meet->parsed()) return run_meet_join(a_path, b_path, true, opt);
        if (join->parsed()) return run_meet_join(a_path, b_path, false, opt);
        if (cmp->parsed()) return run_compare(a_path, b_path, opt);
        if (omega->parsed()) return run_omega(a_path, opt);
        if (complement->parsed()) return run_complement(a_path, opt);
        if (random->parsed()) return run_random(dim, length, opt);
        if (spec->parsed()) return run_spec(a_path, at, opt);
    } catch (const ppu::ParseError& e) {
        std::cout << ppu::io::render(error_json("parse", e.what()));
        return 2;
    } catch (const ppu::Error& e) {
        std::cout << ppu::io::render(error_json("semantic", e.what()));
        return 1;
    } catch (const std::logic_error& e) {
        std::cout << ppu::io::render(error_json("internal", e.what()));
        return 1;
    }
    return 2;
}
