#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cfzeta::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify prints both sides of the identity for the golden expansion") {
    const CliRun r = run({"verify", "--cf", "[;(1)]", "--order", "40"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(2 - z) / (1 - z - z^2)") != std::string::npos);
    CHECK(r.out.find("all cases passed") != std::string::npos);
}

TEST_CASE("verify defaults to the three canonical expansions") {
    const CliRun r = run({"verify", "--json"});
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.contains("cases"));
    CHECK(doc["cases"].size() == 3);
    CHECK(doc["all_passed"] == true);
    for (const auto& c : doc["cases"]) {
        CHECK(c["equal_exact"] == true);
        CHECK(c["witness"].is_null());
    }
}

TEST_CASE("json output is byte-identical across runs") {
    const std::vector<std::string> args = {"verify", "--cf", "[1;(2)]", "--json"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const std::vector<std::string> mc = {"montecarlo", "--samples", "5",
                                         "--depth", "100", "--seed", "42", "--json"};
    const CliRun c = run(mc);
    const CliRun d = run(mc);
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("batch inputs preserve order") {
    const CliRun r = run({"verify", "--cf", "[;(1)]", "--cf", "[;(2)]",
                          "--cf", "[1;(2)]", "--json"});
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["cases"].size() == 3);
    CHECK(doc["cases"][0]["input"]["text"] == "[;(1)]");
    CHECK(doc["cases"][1]["input"]["text"] == "[;(2)]");
    CHECK(doc["cases"][2]["input"]["text"] == "[1;(2)]");
}

TEST_CASE("expand reports the expansion of a surd") {
    const CliRun r = run({"expand", "--surd", "sqrt(2)/2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[1;(2)]") != std::string::npos);
}

TEST_CASE("convergents prints the table") {
    const CliRun r = run({"convergents", "--cf", "[;(1)]", "--order", "5"});
    CHECK(r.exit_code == 0);
    // Convergent rows 0..5 of the golden expansion end at 5/8.
    CHECK(r.out.find("8") != std::string::npos);

    const CliRun j = run({"convergents", "--cf", "[;(1)]", "--order", "5", "--json"});
    const json doc = json::parse(j.out);
    const auto& rows = doc["cases"][0]["convergents"];
    REQUIRE(rows.size() == 6);
    CHECK(rows[5][0] == "5");
    CHECK(rows[5][1] == "8");
}

TEST_CASE("genfun prints closed forms per monomial") {
    const CliRun r = run({"genfun", "--cf", "[1;(2)]", "--r", "2"});
    CHECK(r.exit_code == 0);
    // The p*q entry for sqrt(2)/2 at level 2 is z / (1 - 6z + z^2).
    CHECK(r.out.find("1 - 6z + z^2") != std::string::npos);
}

TEST_CASE("levy reports exact and empirical values") {
    const CliRun r = run({"levy", "--cf", "[;(2)]", "--depth", "200", "--json"});
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const auto& c = doc["cases"][0];
    const std::string exact = c["exact"].get<std::string>();
    CHECK(exact.substr(0, 18) == "0.8813735870195430");
}

TEST_CASE("torus matches the published orbit counts") {
    const CliRun r = run({"torus", "--matrix", "[[2,1],[1,1]]", "--order", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1, 5, 16, 45, 121, 320") != std::string::npos);
}

TEST_CASE("zeta verifies the series against the closed form") {
    const CliRun r = run({"zeta", "--matrix", "[[2,1],[1,1]]", "--order", "8", "--json"});
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["all_passed"] == true);
    CHECK(doc["cases"][0]["series_matches_closed_form"] == true);
}

TEST_CASE("montecarlo is deterministic in the seed") {
    const CliRun r = run({"montecarlo", "--samples", "20", "--depth", "120",
                          "--seed", "12345"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.2045973490407493") != std::string::npos);
}

TEST_CASE("report bundles every analysis") {
    const CliRun r = run({"report", "--cf", "[;(1)]", "--order", "12",
                          "--depth", "200", "--samples", "5",
                          "--mc-depth", "100", "--seed", "7"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all cases passed") != std::string::npos);

    const CliRun j = run({"report", "--cf", "[;(1)]", "--order", "12",
                          "--depth", "200", "--samples", "5",
                          "--mc-depth", "100", "--seed", "7", "--json"});
    REQUIRE(j.exit_code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc.contains("montecarlo"));
    const auto& c = doc["cases"][0];
    for (const char* section : {"input", "expand", "convergents", "genfun",
                                "levy", "torus", "zeta", "verify"}) {
        CHECK(c.contains(section));
    }
}

TEST_CASE("input errors exit with code 2 and a message on stderr") {
    const CliRun sq = run({"expand", "--surd", "sqrt(4)"});
    CHECK(sq.exit_code == 2);
    CHECK(sq.err.find("perfect square") != std::string::npos);

    const CliRun pos = run({"verify", "--cf", "[;("});
    CHECK(pos.exit_code == 2);
    CHECK(pos.err.find("parse error at position") != std::string::npos);

    const CliRun parabolic = run({"torus", "--matrix", "[[1,1],[0,1]]"});
    CHECK(parabolic.exit_code == 2);

    const CliRun nosub = run({});
    CHECK(nosub.exit_code == 2);

    const CliRun badsub = run({"frobnicate"});
    CHECK(badsub.exit_code == 2);

    const CliRun noinput = run({"expand"});
    CHECK(noinput.exit_code == 2);

    const CliRun badprec = run({"levy", "--cf", "[;(1)]", "--precision", "10"});
    CHECK(badprec.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliRun r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("expand") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
