// End-to-end CLI checks: spawns the real binary and inspects exit codes and
// JSON reports.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse_envelope(const RunResult& r) {
    json j = json::parse(r.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j.contains("command"));
    CHECK(j.contains("parameters"));
    CHECK(j.contains("result"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("timing"));
    CHECK(j.contains("provenance"));
    return j;
}

}  // namespace

TEST_CASE("construct then verify round trip") {
    RunResult c = run("construct --family w1 --a 1/2 --n 10 --out cli_w1_tmp.rcol");
    CHECK(c.exit_code == 0);
    json env = parse_envelope(c);
    CHECK(env["result"]["n_vertices"] == 25);
    CHECK(env["result"]["lower_bound"] == 26);

    RunResult v = run("verify --coloring cli_w1_tmp.rcol --cycle 10 --fan 10");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("avoids") == 0);

    RunResult vj = run("verify --coloring cli_w1_tmp.rcol --cycle 10 --fan 10 --json");
    CHECK(vj.exit_code == 0);
    json vjenv = parse_envelope(vj);
    CHECK(vjenv["result"]["verdict"] == "avoids");
    CHECK(vjenv["result"]["max_blue_blades"] == 8);
    std::remove("cli_w1_tmp.rcol");
}

TEST_CASE("construct rejects regime violations with exit 1") {
    RunResult r = run("construct --family w2 --a 1/2 --n 10 --out cli_bad_tmp.rcol");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify flags counterexamples with exit 2") {
    {
        std::ofstream out("cli_blue_tmp.rcol", std::ios::binary);
        out << "RAMSEY-COLORING v1\nD??\n";  // all-blue K_5
    }
    RunResult r = run("verify --coloring cli_blue_tmp.rcol --cycle 3 --fan 2 --json");
    CHECK(r.exit_code == 2);
    json env = parse_envelope(r);
    CHECK(env["result"]["verdict"] == "contains-blue-fan");
    CHECK(env["witnesses"].size() == 1);
    std::remove("cli_blue_tmp.rcol");
}

TEST_CASE("verify reports parse failures with exit 1") {
    {
        std::ofstream out("cli_corrupt_tmp.rcol", std::ios::binary);
        out << "RAMSEY-COLORING v1\n\x01\x02\n";
    }
    RunResult r = run("verify --coloring cli_corrupt_tmp.rcol --cycle 3 --fan 2");
    CHECK(r.exit_code == 1);
    std::remove("cli_corrupt_tmp.rcol");
    RunResult missing = run("verify --coloring cli_missing_tmp.rcol --cycle 3 --fan 2");
    CHECK(missing.exit_code == 1);
    RunResult usage = run("verify");
    CHECK(usage.exit_code == 1);
}

TEST_CASE("detect subcommands") {
    {
        std::ofstream out("cli_k5_tmp.g6", std::ios::binary);
        out << "D~{\n";
    }
    RunResult cyc = run("detect cycle --graph cli_k5_tmp.g6");
    CHECK(cyc.exit_code == 0);
    json cenv = parse_envelope(cyc);
    CHECK(cenv["result"]["circumference"] == 5);

    RunResult fan = run("detect fan --graph cli_k5_tmp.g6 --blades 2");
    CHECK(fan.exit_code == 0);
    json fenv = parse_envelope(fan);
    CHECK(fenv["result"]["found"] == true);
    CHECK(fenv["witnesses"].size() == 1);

    RunResult cm = run("detect cmatching --graph cli_k5_tmp.g6");
    json cmenv = parse_envelope(cm);
    CHECK(cmenv["result"]["size"] == 2);
    std::remove("cli_k5_tmp.g6");
}

TEST_CASE("search subcommands and determinism flags") {
    RunResult exact = run("search exact --cycle 3 --fan 1 --max-n 10");
    CHECK(exact.exit_code == 0);
    json eenv = parse_envelope(exact);
    CHECK(eenv["result"]["result"] == "exact");
    CHECK(eenv["result"]["value"] == 6);

    RunResult a8 = run("search arrows --n 8 --cycle 3 --fan 2");
    CHECK(a8.exit_code == 0);
    json a8env = parse_envelope(a8);
    CHECK(a8env["result"]["result"] == "good-coloring-found");

    // byte-identical stable output across repeat runs and thread counts
    RunResult s1 = run("--stable-output search arrows --n 6 --cycle 3 --fan 1 --threads 1");
    RunResult s2 = run("--stable-output search arrows --n 6 --cycle 3 --fan 1 --threads 1");
    CHECK(s1.out == s2.out);
    RunResult s4 = run("--stable-output search arrows --n 6 --cycle 3 --fan 1 --threads 4");
    json j1 = json::parse(s1.out), j4 = json::parse(s4.out);
    CHECK(j1["result"]["nodes_expanded"] == j4["result"]["nodes_expanded"]);
    CHECK(j1["result"]["result"] == j4["result"]["result"]);
}

TEST_CASE("search audit requires samples and records the seed") {
    RunResult r = run("search audit --n 6 --cycle 3 --fan 1 --samples 100 --seed 42");
    CHECK(r.exit_code == 0);  // R(C_3,F_1)=6: no counterexample exists at n=6
    json env = parse_envelope(r);
    CHECK(env["provenance"]["seed"] == 42);
    CHECK(env["result"]["samples"] == 100);
    CHECK(env["result"]["fraction"] == 1.0);
    // below the Ramsey value counterexamples exist and are flagged with exit 2
    RunResult below = run("search audit --n 5 --cycle 3 --fan 1 --exhaustive --seed 1");
    CHECK(below.exit_code == 2);
    json benv = parse_envelope(below);
    CHECK(benv["result"]["good_colorings"].get<long long>() > 0);
    RunResult bad = run("search audit --n 5 --cycle 3 --fan 1");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("lemma subcommands") {
    RunResult star = run("lemma starmatch --k 1 --n1 2 --n2 1");
    CHECK(star.exit_code == 0);
    json senv = parse_envelope(star);
    CHECK(senv["result"]["formula_value"] == 4);
    CHECK(senv["result"]["violated"] == false);

    {
        std::ofstream out("cli_c5_tmp.g6", std::ios::binary);
        out << "Dhc\n";  // 5-cycle 0-1-2-3-4-0
    }
    RunResult dirac = run("lemma dirac --graph cli_c5_tmp.g6");
    CHECK(dirac.exit_code == 0);
    json denv = parse_envelope(dirac);
    CHECK(denv["result"]["bound"] == 4);
    CHECK(denv["result"]["circumference"] == 5);
    std::remove("cli_c5_tmp.g6");
}

TEST_CASE("thread count defaults come from the environment") {
    std::string cmd = std::string("RAMSEY_WORKBENCH_THREADS=3 ") + RAMSEY_CLI_PATH +
                      " search arrows --n 6 --cycle 3 --fan 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    json env = json::parse(out);
    CHECK(env["provenance"]["thread_count"] == 3);
    CHECK(env["result"]["result"] == "arrows");
}

TEST_CASE("budget exhaustion and resume through the CLI") {
    RunResult out_of_time = run(
        "search arrows --n 9 --cycle 3 --fan 2 --budget 0 --checkpoint cli_frontier_tmp.json");
    CHECK(out_of_time.exit_code == 3);
    json env = parse_envelope(out_of_time);
    CHECK(env["result"]["result"] == "budget-exhausted");
    CHECK(env["result"]["checkpoint"] == "cli_frontier_tmp.json");

    RunResult resumed = run("search arrows --n 9 --cycle 3 --fan 2 --resume cli_frontier_tmp.json");
    CHECK(resumed.exit_code == 0);
    json renv = parse_envelope(resumed);
    CHECK(renv["result"]["result"] == "arrows");
    std::remove("cli_frontier_tmp.json");
}

TEST_CASE("table text and json modes") {
    RunResult text = run("table --a-list 1/2,3/4,1,3/2 --n 1000000");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("lower_bound") != std::string::npos);

    RunResult j = run("table --a-list 1/4 --n 100 --json");
    CHECK(j.exit_code == 0);
    json env = parse_envelope(j);
    CHECK(env["result"]["rows"][0]["lower_bound"] == 225);
    CHECK(env["result"]["rows"][0]["main_term_times_n"].is_null());

    RunResult empty = run("table --a-list '' --n 50");
    CHECK(empty.exit_code == 0);

    RunResult decimal = run("table --a-list 0.5 --n 100");
    CHECK(decimal.exit_code == 1);
}
