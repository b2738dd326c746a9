#include "subprocess.hpp"

#include "recring/json_io.hpp"
#include "recring/parse.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using testutil::run_cli;

namespace {

std::string write_temp_json(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/recring_test_") + name + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

TEST_CASE("seq subcommand") {
    auto r = run_cli("seq cbc --from 0 --to 6 --method ring");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 6 20 70 252 924\n");

    r = run_cli("seq gould --from 0 --to 7 --method mod2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 2 4 2 4 4 8\n");

    r = run_cli("seq cbc --from 5 --to 5 --method oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "252\n");

    r = run_cli("seq gould --from 0 --to 7 --method signed");
    CHECK(r.output == "1 2 2 4 2 4 4 8\n");

    // for gould, the generic ring method is the signed ring
    r = run_cli("seq gould --from 0 --to 7 --method ring");
    CHECK(r.output == "1 2 2 4 2 4 4 8\n");
}

TEST_CASE("seq usage errors exit with 2") {
    CHECK(run_cli("seq cbc --from 3 --to 1 --method ring").exit_code == 2);
    CHECK(run_cli("seq cbc --from -2 --to 1 --method ring").exit_code == 2);
    CHECK(run_cli("seq cbc --from 0 --to 4 --method mod2").exit_code == 2);
    CHECK(run_cli("seq cbc --from 0 --to 4 --method signed").exit_code == 2);
    CHECK(run_cli("seq cbc --from 0 --to 4 --method nope").exit_code == 2);
    CHECK(run_cli("seq fib --from 0 --to 4").exit_code == 2);
    CHECK(run_cli("seq cbc --to 4").exit_code == 2);
}

TEST_CASE("seq csv and json formats") {
    auto r = run_cli("seq gould --from 2 --to 4 --method oracle --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2,2\n3,4\n4,2\n");

    r = run_cli("seq cbc --from 0 --to 2 --method oracle --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("sequence") == "cbc");
    CHECK(j.at("terms").size() == 3);
    CHECK(j.at("terms")[2] == nlohmann::json({{"n", 2}, {"value", "6"}}));
}

TEST_CASE("expand subcommand") {
    auto r = run_cli("expand --family K --n 3 --base \"1+x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 13*x1 + 5*x2 + x1*x2 | sum=20\n");

    r = run_cli("expand --family Kmod --m 2 --n 6 --base \"1+x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + x2 + x3 + x2*x3 | sum=4\n");

    r = run_cli("expand --family K --n 0 --base \"1+x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 | sum=1\n");

    r = run_cli("expand --family Kprime --n 5 --base \"1+x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + x1 + x3 + x1*x3 | sum=4\n");

    r = run_cli("expand --family K --n 2 --base \"1+x1\" --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("sum") == "6");
    CHECK(j.at("polynomial").size() == 3);
    // the emitted polynomial JSON round-trips through the documented schema
    auto Z = recring::CoefficientRing::integers();
    CHECK(recring::poly_from_json(j.at("polynomial"), Z) ==
          recring::parse_polynomial("1 + 4*x1 + x2", Z));
}

TEST_CASE("expand usage errors exit with 2") {
    CHECK(run_cli("expand --family Kmod --n 2 --base \"1+x1\"").exit_code == 2);
    CHECK(run_cli("expand --family K --n 2 --base \"1+)\"").exit_code == 2);
    CHECK(run_cli("expand --family K --n 2 --base \"x0\"").exit_code == 2);
    CHECK(run_cli("expand --family Q --n 2 --base \"1\"").exit_code == 2);
    CHECK(run_cli("expand --family K --n 2 --base \"1+x1\" --format csv").exit_code == 2);
    CHECK(run_cli("expand --n 2 --base \"1\"").exit_code == 2);
    CHECK(run_cli("expand --family K --n 2 --base \"x9\"").exit_code == 2);
}

TEST_CASE("expand with a custom ring spec") {
    // x1^2 = 3*x2, x2^2 = 0 over Z
    std::string spec = write_temp_json("spec_ok", R"({
      "d": 2, "n": 2, "coeff": {"kind": "Z"},
      "P": [[{"c": "3", "e": [[2, 1]]}], []]
    })");
    auto r = run_cli("expand --spec " + spec + " --n 2 --base \"x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3*x2 | sum=3\n");

    // reducers whose generators fail Buchberger still expand, with a warning
    std::string nongb = write_temp_json("spec_nongb", R"({
      "d": 2, "n": 3, "coeff": {"kind": "Z"},
      "P": [[{"c": "1", "e": [[2, 1], [3, 1]]}],
            [{"c": "1", "e": [[1, 1], [3, 1]]}], []]
    })");
    r = run_cli("expand --spec " + nongb + " --n 2 --base \"x2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1*x3 | sum=1\n");
    {
        std::string command = "'" + testutil::cli_path() + "' expand --spec " + nongb +
                              " --n 2 --base \"x2\" 2>&1 1>/dev/null";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string err;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
            err.append(buf, got);
        pclose(pipe);
        CHECK(err.find("not a Groebner basis") != std::string::npos);
    }
    r = run_cli("check groebner --spec " + nongb);
    CHECK(r.exit_code == 1);

    CHECK(run_cli("expand --spec /tmp/recring_no_such_file.json --n 1 --base \"1\"")
              .exit_code == 2);
    CHECK(run_cli("expand --spec " + spec + " --family K --n 1 --base \"1\"").exit_code ==
          2);

    std::string bad = write_temp_json("spec_bad", R"({"d": 2, "n": 2})");
    CHECK(run_cli("expand --spec " + bad + " --n 1 --base \"1\"").exit_code == 2);
}

TEST_CASE("transform subcommand") {
    auto r = run_cli("transform --seq cbc --t 1 --from 0 --to 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 3 11 45 195\n");

    r = run_cli("transform --seq gould --t 1 --from 0 --to 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 3 7 17 39\n");

    r = run_cli("transform --seq cbc --t 0 --from 0 --to 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 6 20\n");

    r = run_cli("transform --seq cbc --t 1 --from 0 --to 4 --method direct");
    CHECK(r.output == "1 3 11 45 195\n");

    r = run_cli("transform --seq gould --t -1 --from 0 --to 4");
    CHECK(r.exit_code == 0);

    CHECK(run_cli("transform --seq cbc --t 1 --from 4 --to 1").exit_code == 2);
    CHECK(run_cli("transform --seq cbc --t 1 --from 0 --to 4 --method fast").exit_code == 2);
}

TEST_CASE("check groebner subcommand") {
    auto r = run_cli("check groebner --family K --vars 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "groebner: pass (pairs_checked=10)\n");

    r = run_cli("check groebner --family Kmod --m 2 --vars 4 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("is_groebner") == true);
    CHECK(j.at("failing_pair").is_null());

    // a generator list that fails the criterion: exit 1 and a report
    std::string gens = write_temp_json("gens_bad", R"({
      "generators": [
        [{"c": "1", "e": [[1, 1]]}, {"c": "-1", "e": [[2, 2]]}],
        [{"c": "1", "e": [[2, 2]]}]
      ]
    })");
    r = run_cli("check groebner --spec " + gens + " --format json");
    CHECK(r.exit_code == 1);
    j = nlohmann::json::parse(r.output);
    CHECK(j.at("is_groebner") == false);
    CHECK(j.at("failing_pair").at("i") == 1);
    CHECK(j.at("failing_pair").at("j") == 2);

    CHECK(run_cli("check groebner --family K").exit_code == 2);
    CHECK(run_cli("check groebner --family K --vars 0").exit_code == 2);
}

TEST_CASE("check chain subcommand") {
    auto r = run_cli("check chain --family Kprime --vars 4");
    CHECK(r.exit_code == 0);

    r = run_cli("check chain --family K --vars 3 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("is_regular_chain") == true);
    CHECK(j.at("variable_order") == nlohmann::json({3, 2, 1}));
    CHECK(j.at("leading_regular") == true);

    // generator set missing the terminal pure power: zero-dimensionality fails
    std::string gens = write_temp_json("gens_trimmed", R"({
      "generators": [
        [{"c": "1", "e": [[1, 2]]}, {"c": "-2", "e": [[1, 1]]}, {"c": "-1", "e": [[2, 1]]}]
      ]
    })");
    r = run_cli("check chain --spec " + gens + " --format json");
    CHECK(r.exit_code == 1);
    j = nlohmann::json::parse(r.output);
    CHECK(j.at("zero_dimensional") == false);
    CHECK(j.at("is_regular_chain") == false);
}

TEST_CASE("thread cap environment variable") {
    std::string cli = testutil::cli_path();
    auto run_env = [&cli](const std::string& env, const std::string& args) {
        std::string command = env + " '" + cli + "' " + args + " 2>/dev/null";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string output;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
            output.append(buf, got);
        int status = pclose(pipe);
        return std::pair<std::string, int>(output,
                                           WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    };

    auto [capped, code] = run_env("RECRING_THREADS=1", "seq cbc --from 0 --to 12 --method ring");
    CHECK(code == 0);
    CHECK(capped == "1 2 6 20 70 252 924 3432 12870 48620 184756 705432 2704156\n");

    auto [wide, code2] = run_env("RECRING_THREADS=4", "seq cbc --from 0 --to 12 --method ring");
    CHECK(code2 == 0);
    CHECK(wide == capped);

    auto bad = run_env("RECRING_THREADS=0", "seq cbc --from 0 --to 2 --method ring");
    CHECK(bad.second == 2);
    auto bad2 = run_env("RECRING_THREADS=lots", "seq cbc --from 0 --to 2 --method ring");
    CHECK(bad2.second == 2);
}
