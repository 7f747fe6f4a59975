#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/skewpf_cli_out.txt";
    const std::string command =
        std::string(SKEWPF_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("skew-eval on builtin and file graphs") {
    CHECK(run_cli("skew-eval C3 --martin 1").output == "-2\n");
    CHECK(run_cli("skew-eval C3 --martin 1").exit_code == 0);
    CHECK(run_cli("skew-eval P2 --martin 1").output == "0\n");

    const std::string circle = write_temp("skewpf_circle.txt", "graph 0 1\n");
    CHECK(run_cli("skew-eval " + circle + " --martin 2").output == "-4\n");

    const std::string tensor = write_temp("skewpf_martin1.txt", "skewtensor 1\n- 1\n1,2 -1\n");
    CHECK(run_cli("skew-eval C4 --tensor " + tensor).output == "-2\n");

    CHECK(run_cli("--output json skew-eval C3 --martin 1").exit_code == 0);
}

TEST_CASE("martin polynomial and evaluations") {
    CHECK(trimmed(run_cli("martin fig8 --poly").output) == "0 2 1");
    CHECK(trimmed(run_cli("martin circle --poly").output) == "0 1");
    CHECK(trimmed(run_cli("martin P2 --poly").output) == "0");
    CHECK(trimmed(run_cli("martin bowtie --at -4").output) == "8");
    CHECK(trimmed(run_cli("martin bowtie --at 1").output) == "3");
    CHECK(run_cli("martin bowtie --at -4").exit_code == 0);

    const auto json_run = run_cli("--output json martin bowtie --at -4");
    const auto parsed = nlohmann::json::parse(json_run.output);
    CHECK(parsed["value"] == "8");
    CHECK(parsed["agree"] == true);
    CHECK(parsed["routes"].size() >= 2);
}

TEST_CASE("verify commands emit JSON reports") {
    const auto relation = run_cli("verify relation --martin 1 --graph C4 --U 0,2");
    CHECK(relation.exit_code == 0);
    auto parsed = nlohmann::json::parse(relation.output);
    CHECK(parsed["check"] == "relation");
    CHECK(parsed["failures"].empty());
    // Round trip: serialize and reparse.
    CHECK(nlohmann::json::parse(parsed.dump()) == parsed);

    const auto relation_sweep = run_cli("verify relation --martin 1 --max-edges 3");
    CHECK(relation_sweep.exit_code == 0);
    parsed = nlohmann::json::parse(relation_sweep.output);
    CHECK(parsed["failures"].empty());
    CHECK(parsed["instances"] > 3);

    const auto gram = run_cli("verify gram --ell 1 --m 2");
    CHECK(gram.exit_code == 0);
    parsed = nlohmann::json::parse(gram.output);
    CHECK(parsed["instances"] == 144);

    const auto invariance = run_cli("verify invariance --martin 1 --graph C4");
    CHECK(invariance.exit_code == 0);

    const auto v0 = run_cli("verify v0 --ell 1 --m 2");
    CHECK(v0.exit_code == 0);

    const auto signid = run_cli("verify signid --m 2");
    CHECK(signid.exit_code == 0);

    const auto gram_fragments = run_cli("verify gram --fragments --max-edges 3 --ell 1");
    CHECK(gram_fragments.exit_code == 0);
    parsed = nlohmann::json::parse(gram_fragments.output);
    CHECK(parsed["failures"].empty());

    const auto agree = run_cli("verify agree --max-edges 3");
    CHECK(agree.exit_code == 0);
    parsed = nlohmann::json::parse(agree.output);
    CHECK(parsed["failures"].empty());
    CHECK(parsed["instances"] > 10);
}

TEST_CASE("rank certificates") {
    const auto matching = run_cli("rank --matching -2 2");
    CHECK(matching.exit_code == 0);
    auto parsed = nlohmann::json::parse(matching.output);
    CHECK(parsed["rank"] == 2);
    CHECK(parsed["rows"] == 3);
    CHECK(parsed["rank_equals_catalan"] == true);
    CHECK(parsed["within_bound"] == true);

    const auto bigger = run_cli("rank --matching -2 3");
    parsed = nlohmann::json::parse(bigger.output);
    CHECK(parsed["rank"] == 5);
    CHECK(parsed["rows"] == 15);

    const std::string fragments = write_temp(
        "skewpf_frags2.txt",
        "graph 2 0\nedge 0 1\nlabel 0 1\nlabel 1 2\n"
        "graph 2 0\nedge 0 1\nlabel 0 2\nlabel 1 1\n"
        "graph 3 0\nedge 1 0\nedge 0 2\nlabel 1 1\nlabel 2 2\n");
    const auto connection = run_cli("rank --connection " + fragments + " --martin 1");
    CHECK(connection.exit_code == 0);
    parsed = nlohmann::json::parse(connection.output);
    CHECK(parsed["rank"] <= 4);
    CHECK(parsed["bound"] == "4");
    CHECK(parsed["within_bound"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("skew-eval /nonexistent.graph --martin 1").exit_code == 2);
    CHECK(run_cli("skew-eval C3").exit_code == 2);  // no model given
    CHECK(run_cli("--bound 10 skew-eval C4 --martin 2").exit_code == 3);
    CHECK(run_cli("verify signid --m 9").exit_code == 3);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
}
