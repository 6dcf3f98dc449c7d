#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "hadwiger/families.hpp"
#include "hadwiger/graph_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// runs the installed binary with stdout+stderr captured
RunResult run_cli(const std::string& args)
{
    const std::string out_path = "cli_test_output.txt";
    const std::string command = std::string(CLI_BINARY_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    std::remove(out_path.c_str());
    return result;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("family subcommand emits the exact file format")
{
    RunResult r = run_cli("family --kind d --r 3 --n 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output == hadwiger::serialize_graph(hadwiger::build_d_r_n(3, 9)));
}

TEST_CASE("bound and exact subcommands")
{
    write_file("cli_fig1a.txt", hadwiger::serialize_graph(hadwiger::build_figure_1a()));

    RunResult bound = run_cli("bound cli_fig1a.txt");
    CHECK(bound.exit_code == 0);
    CHECK(bound.output.find("ek: 4") != std::string::npos);
    CHECK(bound.output.find("improved: 3") != std::string::npos);

    RunResult exact = run_cli("exact cli_fig1a.txt");
    CHECK(exact.exit_code == 0);
    CHECK(exact.output.find("chi: 3") != std::string::npos);
    CHECK(exact.output.find("h: 4") != std::string::npos);

    std::remove("cli_fig1a.txt");
}

TEST_CASE("check subcommand accepts the D_{3,9} column witness")
{
    write_file("cli_d39.txt", hadwiger::serialize_graph(hadwiger::build_d_r_n(3, 9)));
    write_file("cli_d39_witness.txt", "0 3 6\n1 4 7\n2 5 8\n");
    RunResult r = run_cli("check cli_d39.txt --witness cli_d39_witness.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("accepted") != std::string::npos);
    CHECK(r.output.find(">= 3") != std::string::npos);

    write_file("cli_d39_bad.txt", "0 6\n3 1 4 7\n2 5 8\n");
    RunResult bad = run_cli("check cli_d39.txt --witness cli_d39_bad.txt");
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("rejected") != std::string::npos);

    std::remove("cli_d39.txt");
    std::remove("cli_d39_witness.txt");
    std::remove("cli_d39_bad.txt");
}

TEST_CASE("exact --witness-out round-trips through check")
{
    write_file("cli_fig1a.txt", hadwiger::serialize_graph(hadwiger::build_figure_1a()));
    RunResult solve = run_cli("exact cli_fig1a.txt --hadwiger --witness-out cli_fig1a_w.txt");
    CHECK(solve.exit_code == 0);
    RunResult check = run_cli("check cli_fig1a.txt --witness cli_fig1a_w.txt");
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("accepted") != std::string::npos);
    CHECK(check.output.find(">= 4") != std::string::npos);
    std::remove("cli_fig1a.txt");
    std::remove("cli_fig1a_w.txt");
}

TEST_CASE("experiment subcommand, flags and config file")
{
    RunResult r = run_cli("experiment --source exhaustive --n 4 --checks thm1,chi_bounds");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("graph_id,", 0) == 0);
    // 38 graphs plus header and trailing newline
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 39);

    write_file("cli_cfg.json",
               R"({"source":"exhaustive","n":4,"checks":["thm1","chi_bounds"],"seed":9})");
    RunResult from_config = run_cli("experiment --config cli_cfg.json");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.output == r.output);
    std::remove("cli_cfg.json");

    RunResult table = run_cli("experiment --source family --kind fig1a --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("graph_id") != std::string::npos);

    RunResult serial = run_cli("experiment --source exhaustive --n 4 --checks thm1,chi_bounds --serial");
    CHECK(serial.output == r.output);
}

TEST_CASE("usage and parse errors exit with code 2")
{
    CHECK(run_cli("bound no_such_file.txt").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("family --kind nope").exit_code == 2);

    write_file("cli_bad_graph.txt", "2 1\n0 0\n");
    RunResult r = run_cli("bound cli_bad_graph.txt");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
    std::remove("cli_bad_graph.txt");
}
