#include "doctest.h"

#include "ncdeg/cli.hpp"
#include "ncdeg/parser.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ncdeg;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("print then parse is the identity") {
    const FieldTag Q = field_rationals();
    auto names = default_names(2);
    for (const char* text :
         {"0", "1", "-1", "x^2*y - y*x^2", "3/2*x - y + 1", "x*y*x*y",
          "2*x^10", "[x,y]^2", "(x+y)^3 - x*y"}) {
        auto p = parse_poly(text, 2, Q);
        auto printed = p.str(names);
        auto again = parse_poly(printed, 2, Q);
        CHECK(again == p);
        CHECK(again.str(names) == printed);
    }

    const FieldTag F5 = field_gf(5);
    auto p = parse_poly("3*x^2 + 4*y - 2", 2, F5);
    CHECK(parse_poly(p.str(names), 2, F5) == p);
}

TEST_CASE("verify command and its exit codes") {
    auto ok = run({"verify", "[x,y]", "x^2", "x^3+y"});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "slack = 0/1"));
    CHECK(has(ok.out, "estimate holds"));

    auto divides = run({"verify", "[x,y]", "x^2", "x^4+y"});
    CHECK(divides.code == 1);
    CHECK(has(divides.out, "degrees non-dividing   no"));

    auto malformed = run({"verify", "[x,y", "x", "y"});
    CHECK(malformed.code == 2);
    CHECK(has(malformed.err, "expected"));

    auto bad_field = run({"--field", "gf:4", "verify", "[x,y]", "x", "y"});
    CHECK(bad_field.code == 2);

    auto bad_coeff =
        run({"--field", "gf:2", "verify", "x*y", "1/2*x", "y"});
    CHECK(bad_coeff.code == 2);
}

TEST_CASE("global flags may follow the subcommand") {
    auto r = run({"verify", "[x,y]", "x^2", "x^3+y", "--field", "gf:2"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "field: gf:2"));
}

TEST_CASE("verify json output") {
    auto r = run({"--format", "json", "verify", "[x,y]", "x^2", "x^3+y"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["f"] == "x^2");
    CHECK(j["g"] == "x^3 + y");
    CHECK(j["P"] == "x*y - y*x");
    CHECK(j["field"] == "q");
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["N"] == 5);
    CHECK(j["comm_deg"] == 3);
    CHECK(j["bound"] == "3/1");
    CHECK(j["lhs"] == 3);
    CHECK(j["slack"] == "0/1");
    CHECK(j["holds"] == true);
    CHECK(j["hypotheses"]["all"] == true);
}

TEST_CASE("centralize command reproduces the worked example") {
    auto r = run({"--format", "json", "centralize", "x^2+x*y"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "complete");
    CHECK(j["steps"] == 1);
    CHECK(j["b"] == "x^2");
    CHECK(j["e"] == "1 + x^-1*y");
    CHECK(j["valid_floor"] == 2);
    CHECK(j["residual_lead"].is_null());
    REQUIRE(j["trace"].size() == 1);
    CHECK(j["trace"][0]["kind"] == "correct_left");
    CHECK(j["trace"][0]["lead_word"] == "x*y");
    CHECK(j["trace"][0]["applied_word"] == "x^-1*y");
    CHECK(j["trace"][0]["applied_coeff"] == "1");
}

TEST_CASE("centralize reports truncation with exit 0") {
    auto r = run({"--format", "json", "--budget-centralize", "5", "centralize",
                  "x^2+y"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "truncated");
    CHECK(j["steps"] == 5);
    CHECK_FALSE(j["residual_lead"].is_null());

    auto zero = run({"centralize", "0"});
    CHECK(zero.code == 2);
}

TEST_CASE("order flag permutes the precedence") {
    auto r = run({"--order", "y,x", "centralize", "y^2+y*x"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "status: complete"));
    CHECK(has(r.out, "b = y^2"));

    auto bad = run({"--order", "y,q", "centralize", "x"});
    CHECK(bad.code == 2);

    auto repeated = run({"--order", "x,x", "centralize", "x"});
    CHECK(repeated.code == 2);
}

TEST_CASE("witness command") {
    auto r = run({"--format", "json", "witness", "[x,y]", "2", "3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["z"] == "x*y");
    CHECK(j["u"] == "t^2*s");
    CHECK(j["N"] == 5);
    CHECK(j["q"] == 1);
    CHECK(j["deg_t"] == 2);
    CHECK(j["deg_s"] == 1);
    CHECK(j["special_case"] == false);

    auto dividing = run({"witness", "x^2+y", "2", "4"});
    CHECK(dividing.code == 2);

    auto inhomogeneous = run({"witness", "x+y", "2", "3"});
    CHECK(inhomogeneous.code == 2);
}

TEST_CASE("campaign output is deterministic and well formed") {
    auto a = run({"--format", "json", "--seed", "11", "campaign", "--count",
                  "6"});
    auto b = run({"--format", "json", "--seed", "11", "campaign", "--count",
                  "6"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    int lines = 0;
    std::istringstream stream(a.out);
    std::string line;
    while (std::getline(stream, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["holds"] == true);
        CHECK(j["hypotheses"]["all"] == true);
        ++lines;
    }
    CHECK(lines == 6);

    auto other_seed = run({"--format", "json", "--seed", "12", "campaign",
                           "--count", "6"});
    CHECK(other_seed.out != a.out);

    auto gf = run({"--field", "gf:3", "--seed", "4", "campaign", "--count",
                   "4"});
    CHECK(gf.code == 0);
    CHECK(has(gf.out, "campaign: 4/4 hold"));
}

TEST_CASE("campaign csv has a header and one row per instance") {
    auto r = run({"--format", "csv", "--seed", "3", "campaign", "--count",
                  "3"});
    REQUIRE(r.code == 0);
    std::istringstream stream(r.out);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "f,g,P,field,m,n,N,comm_deg,bound,lhs,slack,holds");
    int rows = 0;
    while (std::getline(stream, line)) {
        CHECK(has(line, ",true"));
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("csv is rejected outside campaign and sharpness") {
    auto r = run({"--format", "csv", "verify", "[x,y]", "x^2", "x^3+y"});
    CHECK(r.code == 2);
    CHECK(has(r.err, "csv"));
}

TEST_CASE("sharpness sweep is exact on every cell") {
    auto r = run({"sharpness", "3", "3", "2"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "sharpness: 4/4 cells attain the bound"));

    auto j = run({"--format", "json", "--field", "gf:2", "sharpness", "3",
                  "3", "1"});
    REQUIRE(j.code == 0);
    std::istringstream stream(j.out);
    std::string line;
    while (std::getline(stream, line)) {
        auto cell = nlohmann::json::parse(line);
        CHECK(cell["sharp"] == true);
        CHECK(cell["slack"] == "0/1");
    }
}

TEST_CASE("pipeline command exit codes and chain") {
    auto ok = run({"pipeline", "[x,y]", "x^2", "x^3+y"});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "status: complete"));
    CHECK(has(ok.out,
              "chain: deg P(f,g) = 3 >= leading image 3 >= witness 3 >= "
              "bound 3/1"));

    auto failed = run({"pipeline", "[x,y]", "x^2", "x^4+y"});
    CHECK(failed.code == 1);
    CHECK(has(failed.out, "hypotheses_failed"));

    auto truncated = run({"--budget-centralize", "5", "pipeline", "[x,y]",
                          "x^2+y", "x^3+x*y"});
    CHECK(truncated.code == 0);
    CHECK(has(truncated.out, "truncation_insufficient"));
}

TEST_CASE("pipeline json carries the whole trace") {
    auto r = run({"--format", "json", "pipeline", "[x,y]", "x^2", "x^3+y"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "complete");
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["h"] == "x");
    CHECK(j["q_exp"] == 2);
    CHECK(j["p_exp"] == 3);
    CHECK(j["bound"] == "3/1");
    CHECK(j["P_bar"] == "x*y - y*x");
    CHECK(j["centralize"]["status"] == "complete");
    CHECK(j["peel"]["powers"]["3"] == "1");
    CHECK(j["s_lead_degree"] == 1);
    CHECK(j["leading_image_degree"] == 3);
    CHECK(j["witness"]["u"] == "t^2*s");
    CHECK(j["witness_degree"] == 3);
    CHECK(j["lhs"] == 3);
}

TEST_CASE("reports can be written to a file") {
    const char* path = "cli_out_test.json";
    auto r = run({"--format", "json", "--out", path, "verify", "[x,y]", "x^2",
                  "x^3+y"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["slack"] == "0/1");
    in.close();
    std::remove(path);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "x"}).code == 2);
    CHECK(run({"--no-such-flag", "verify", "x", "y", "z"}).code == 2);
    CHECK(run({"--format", "yaml", "verify", "x", "y", "z"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
