#include <doctest.h>

#include "tsilab/cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace tsilab;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

nlohmann::json parse(const CliRun& result) {
    return nlohmann::json::parse(result.out);
}

const std::string kPairVector = R"({"entries": [[2, "1"], [3, "1"]]})";

} // namespace

TEST_CASE("expected subcommand prints the closed form") {
    const auto result = run({"expected", "--theta", "2/3"});
    REQUIRE(result.code == 0);
    const auto j = parse(result);
    CHECK(j.at("value") == "3/2");
    CHECK(j.at("manifest").at("command") == "expected");
    CHECK(j.at("manifest").at("theta") == "2/3");
    CHECK(j.at("manifest").at("version") == kVersion);
    CHECK(j.at("manifest").at("config_hash").get<std::string>().size() == 16);
    CHECK(j.at("manifest").contains("timestamp"));

    const auto approx = run({"expected", "--theta", "2/3", "--approx", "4"});
    CHECK(parse(approx).at("value_approx") == "1.5000");
}

TEST_CASE("norm subcommand emits value and certificate") {
    // No multi-part family may start at coordinate 1, so the witness has to
    // be a sup-norm leaf.
    const auto flat = run({"norm", "--theta", "1/2", "--vector",
                           R"({"entries": [[1, "1"], [2, "1"]]})"});
    REQUIRE(flat.code == 0);
    const auto j = parse(flat);
    CHECK(j.at("value") == "1");
    CHECK(j.at("certificate").at("value") == "1");
    CHECK(j.at("certificate").at("coordinate") == 1);

    const auto split = run({"norm", "--theta", "2/3", "--vector", kPairVector});
    REQUIRE(split.code == 0);
    const auto k = parse(split);
    CHECK(k.at("value") == "4/3");
    CHECK(k.at("certificate").contains("parts"));
    CHECK(k.at("certificate").at("children").size() == 2);
    CHECK(k.at("manifest").at("space") == "tsirelson:2/3");
}

TEST_CASE("dual norm subcommand emits the maximizer") {
    const auto result = run({"dual-norm", "--theta", "2/3", "--functional", kPairVector});
    REQUIRE(result.code == 0);
    const auto j = parse(result);
    CHECK(j.at("value") == "3/2");
    CHECK(j.at("maximizer").at("entries").size() == 2);
}

TEST_CASE("norming set subcommand counts functionals") {
    const auto result = run({"norming-set", "--theta", "2/3", "--dim", "3"});
    REQUIRE(result.code == 0);
    const auto j = parse(result);
    CHECK(j.at("count") == 10);
    CHECK(j.at("functionals").size() == 10);
}

TEST_CASE("c0 constant subcommand with and without witness") {
    const std::string blocks =
        R"([{"entries": [[2, "1"]]}, {"entries": [[3, "1"]]}])";
    const auto plain = run({"c0-constant", "--theta", "2/3", "--blocks", blocks});
    REQUIRE(plain.code == 0);
    CHECK(parse(plain).at("value") == "3/2");

    const std::string longer =
        R"([{"entries": [[3, "1"]]}, {"entries": [[4, "1"]]}, {"entries": [[5, "1"]]}])";
    const auto witness =
        run({"c0-constant", "--theta", "2/3", "--blocks", longer, "--witness", "2"});
    REQUIRE(witness.code == 0);
    const auto j = parse(witness);
    CHECK(j.at("subsequence").size() == 2);
    CHECK(j.at("value") == "3/2");
}

TEST_CASE("separate subcommand in json and csv form") {
    const std::string family =
        R"([{"entries": [[1, "1"]]}, {"entries": [[2, "1"]]}])";

    const auto plain = run({"separate", "--space", "c0", "--family", family});
    REQUIRE(plain.code == 0);
    const auto j = parse(plain);
    CHECK(j.at("separation") == "1");
    CHECK(j.at("symmetric_separation") == "1");
    CHECK(j.at("manifest").at("space") == "c0");
    CHECK(j.at("pairs").size() == 1);

    const auto csv = run({"separate", "--space", "c0", "--family", family, "--csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("i,j,diff_norm,sum_norm\n", 0) == 0);
    CHECK(csv.out.find("1,2,1,1") != std::string::npos);
    // The manifest still arrives, on the diagnostic stream.
    CHECK(nlohmann::json::parse(csv.err).at("command") == "separate");
}

TEST_CASE("extract subcommand modes") {
    const std::string basis =
        R"([{"entries": [[1, "1"]]}, {"entries": [[2, "1"]]}, {"entries": [[3, "1"]]}, {"entries": [[4, "1"]]}])";

    const auto gamma0 =
        run({"extract", "--space", "lp:2", "--family", basis, "--mode", "gamma0"});
    REQUIRE(gamma0.code == 0);
    CHECK(parse(gamma0).at("value") == "2");

    const auto sqrt_mode =
        run({"extract", "--space", "lp:2", "--family", basis, "--mode", "sqrt"});
    REQUIRE(sqrt_mode.code == 0);
    const auto j = parse(sqrt_mode);
    CHECK(j.at("branch") == "monochrome-greater");
    CHECK(j.at("guarantee") == "2");
    CHECK(j.at("measured") == "4");
    CHECK(j.at("result_power") == 4);

    const std::string planar =
        R"([{"entries": [[1, "1"]]},)"
        R"( {"entries": [[1, "-3/5"], [2, "4/5"]]},)"
        R"( {"entries": [[1, "-3/5"], [2, "-4/5"]]}])";
    const auto ramsey = run({"extract", "--space", "lp:2", "--family", planar, "--mode",
                             "ramsey", "--eta", "1/5", "--kb", "5/2"});
    REQUIRE(ramsey.code == 0);
    const auto r = parse(ramsey);
    CHECK(r.at("branch") == "plus-construction");
    CHECK(r.at("guarantee") == "4/9");
    CHECK(r.at("measured") == "4/9");
    CHECK(r.at("eta") == "1/5");

    const auto missing_eta =
        run({"extract", "--space", "lp:2", "--family", basis, "--mode", "ramsey"});
    CHECK(missing_eta.code == 2);
}

TEST_CASE("kottman subcommand reports the search result") {
    const auto result = run({"kottman", "--space", "c0", "--seed", "1", "--iters", "5",
                             "--family-size", "3", "--support-cap", "12"});
    REQUIRE(result.code == 0);
    const auto j = parse(result);
    CHECK(j.at("separation") == "2");
    CHECK(j.at("family").size() == 3);
    CHECK(j.at("manifest").at("seed") == 1);
}

TEST_CASE("identical invocations share a config hash") {
    const std::vector<std::string> args = {"expected", "--theta", "9/10"};
    auto first = parse(run(args));
    auto second = parse(run(args));
    CHECK(first.at("value") == "10/9");
    first.at("manifest").erase("timestamp");
    second.at("manifest").erase("timestamp");
    CHECK(first == second);

    const auto other = parse(run({"expected", "--theta", "1/2"}));
    CHECK(other.at("manifest").at("config_hash") != first.at("manifest").at("config_hash"));
}

TEST_CASE("input problems exit with code two") {
    CHECK(run({}).code == 2);                                   // no subcommand
    CHECK(run({"norm"}).code == 2);                             // missing required flags
    CHECK(run({"norm", "--bogus"}).code == 2);                  // unknown flag
    CHECK(run({"expected", "--theta", "3/2"}).code == 2);       // theta out of range
    CHECK(run({"expected", "--theta", "0"}).code == 2);         // theta out of range
    CHECK(run({"norm", "--theta", "1/2", "--vector", "nope"}).code == 2);
    CHECK(run({"norm", "--theta", "1/2", "--vector",
               R"({"entries": [[0, "1"]]})"}).code == 2);       // bad index
    CHECK(run({"separate", "--space", "l7", "--family", "[]"}).code == 2);

    const auto diagnostics = run({"expected", "--theta", "3/2"});
    CHECK(diagnostics.out.empty());
    CHECK(!diagnostics.err.empty());
}

TEST_CASE("version and help exit cleanly") {
    const auto version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find(kVersion) != std::string::npos);

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("norm") != std::string::npos);
}
