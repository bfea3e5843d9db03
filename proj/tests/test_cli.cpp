#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppu/json.hpp"
#include "support/cli_runner.hpp"
#include "support/test_util.hpp"

using namespace tu;
using json = ppu::io::json;

TEST_CASE("golden files for the worked 2x2 examples") {
    auto golden = [](const std::string& args, const std::string& expected_fixture,
                     int expected_exit) {
        const CliResult r = run_cli(args);
        CHECK(r.exit_code == expected_exit);
        CHECK(r.output == read_file(fixture(expected_fixture)));
    };
    golden("gen " + fixture("in_span_e1.json"), "out_gen_span_e1.json", 0);
    golden("gen " + fixture("in_span_diag.json"), "out_gen_span_diag.json", 0);
    golden("verify " + fixture("in_diag_1_tm1.json"), "out_verify_diag_1_tm1.json", 0);
    golden("factor " + fixture("in_diag_1_tm2.json"), "out_factor_diag_1_tm2.json", 0);
    golden("omega " + fixture("in_diag_1_tm2.json"), "out_omega_diag_1_tm2.json", 0);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("verify " + write_temp("{not json", "garbage")).exit_code == 2);
    CHECK(run_cli("verify /nonexistent/path.json").exit_code == 2);
    const std::string not_para = write_temp(R"({"mat":[[[[0,"2"]],[]],[[],[[0,"1"]]]]})", "np");
    CHECK(run_cli("verify " + not_para).exit_code == 1);
    // omega of a positive-cone element is a semantic failure
    const std::string pos = write_temp(R"({"mat":[[[[0,"1"]],[]],[[],[[1,"1"]]]]})", "pos");
    const CliResult r = run_cli("omega " + pos);
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output).at("error") == "semantic");
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("random 0 3").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("seeded runs are byte-identical") {
    const CliResult a = run_cli("random 3 4 --seed 99");
    const CliResult b = run_cli("random 3 4 --seed 99");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const CliResult c = run_cli("random 3 4 --seed 100");
    CHECK(a.output != c.output);
}

TEST_CASE("random edge lengths") {
    // length 0 is the identity for every seed
    const CliResult id = run_cli("random 2 0 --seed 5");
    REQUIRE(id.exit_code == 0);
    CHECK(json::parse(id.output).at("mat") ==
          json::parse(R"([[[[0,"1"]],[]],[[],[[0,"1"]]]])"));
    // a single factor is a building block, hence inside the interval
    const CliResult one = run_cli("random 3 1 --seed 5");
    REQUIRE(one.exit_code == 0);
    const std::string path = write_temp(one.output, "single");
    const CliResult verified = run_cli("verify " + path);
    REQUIRE(verified.exit_code == 0);
    CHECK(json::parse(verified.output).at("interval") == true);
}

TEST_CASE("output flag writes the same bytes") {
    const std::string out_path = write_temp("", "out");
    const CliResult direct = run_cli("gen " + fixture("in_span_e1.json"));
    const CliResult redirected =
        run_cli("gen " + fixture("in_span_e1.json") + " --output " + out_path);
    REQUIRE(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    CHECK(read_file(out_path) == direct.output);
}

TEST_CASE("pipeline: random, factor, remultiply") {
    const CliResult random = run_cli("random 2 4 --seed 17");
    REQUIRE(random.exit_code == 0);
    const std::string elem_path = write_temp(random.output, "elem");
    const CliResult factored = run_cli("factor " + elem_path);
    REQUIRE(factored.exit_code == 0);
    const json nf = json::parse(factored.output);
    CHECK(nf.at("verified") == true);
    CHECK(nf.at("factors").size() <= 4);
}

TEST_CASE("pipeline: gen, verify, factor reproduces the subspace") {
    const CliResult gen = run_cli("gen " + fixture("in_span_diag.json"));
    REQUIRE(gen.exit_code == 0);
    const std::string elem_path = write_temp(gen.output, "gen_elem");
    CHECK(run_cli("verify " + elem_path).exit_code == 0);
    const CliResult factored = run_cli("factor " + elem_path);
    REQUIRE(factored.exit_code == 0);
    const json nf = json::parse(factored.output);
    CHECK(nf.at("verified") == true);
    REQUIRE(nf.at("factors").size() == 1);
    CHECK(nf.at("factors")[0] == json::parse(read_file(fixture("in_span_diag.json"))));
    CHECK(nf.at("tail") == json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_CASE("complement and specialization commands") {
    const CliResult comp = run_cli("complement " + fixture("in_diag_1_tm1.json"));
    REQUIRE(comp.exit_code == 0);
    // t^-1 * diag(1, t^-1)^-1 = diag(t^-1, 1), the block of span(e2)
    CHECK(json::parse(comp.output).at("mat") ==
          json::parse(R"([[[[-1,"1"]],[]],[[],[[0,"1"]]]])"));

    const CliResult at1 = run_cli("spec " + fixture("in_diag_1_tm1.json") + " --at 1");
    REQUIRE(at1.exit_code == 0);
    CHECK(json::parse(at1.output).at("mat") == json::parse(R"([["1","0"],["0","1"]])"));
    const CliResult atm1 = run_cli("spec " + fixture("in_diag_1_tm1.json") + " --at -1");
    REQUIRE(atm1.exit_code == 0);
    CHECK(json::parse(atm1.output).at("mat") == json::parse(R"([["1","0"],["0","-1"]])"));
    CHECK(run_cli("spec " + fixture("in_diag_1_tm1.json") + " --at 2").exit_code == 2);
}

TEST_CASE("meet and join commands") {
    const std::string p1 = write_temp(R"({"mat":[[[[0,"1"]],[]],[[],[[-1,"1"]]]]})", "p1");
    const std::string p2 = write_temp(R"({"mat":[[[[-1,"1"]],[]],[[],[[0,"1"]]]]})", "p2");
    const CliResult meet = run_cli("meet " + p1 + " " + p2);
    REQUIRE(meet.exit_code == 0);
    CHECK(json::parse(meet.output).at("mat") ==
          json::parse(R"([[[[-1,"1"]],[]],[[],[[-1,"1"]]]])"));
    const CliResult join = run_cli("join " + p1 + " " + p2);
    REQUIRE(join.exit_code == 0);
    CHECK(json::parse(join.output).at("mat") ==
          json::parse(R"([[[[0,"1"]],[]],[[],[[0,"1"]]]])"));
    const CliResult cmp = run_cli("compare " + p1 + " " + p1);
    CHECK(json::parse(cmp.output).at("relation") == "Equal");
}

TEST_CASE("gram flag selects the space") {
    const std::string gram =
        write_temp(R"({"n":2,"gram":[["2","1"],["1","1"]]})", "gram");
    const std::string sub = write_temp(R"({"basis":[["1","0"]]})", "sub");
    const CliResult r = run_cli("gen " + sub + " --gram " + gram);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("gram") == json::parse(R"([["2","1"],["1","1"]])"));
    // indefinite gram is a semantic failure
    const std::string bad = write_temp(R"({"n":2,"gram":[["1","0"],["0","-1"]]})", "badgram");
    CHECK(run_cli("gen " + sub + " --gram " + bad).exit_code == 1);
    // empty basis needs --gram for the dimension
    const std::string empty = write_temp(R"({"basis":[]})", "empty");
    CHECK(run_cli("gen " + empty).exit_code == 2);
    const CliResult zero = run_cli("gen " + empty + " --gram " + gram);
    REQUIRE(zero.exit_code == 0);
    CHECK(json::parse(zero.output).at("mat") ==
          json::parse(R"([[[[-1,"1"]],[]],[[],[[-1,"1"]]]])"));
}
