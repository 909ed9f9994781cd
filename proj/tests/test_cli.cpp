#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string data_file(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& tag, const std::string& content) {
    std::string path = "/tmp/cyclemass_test_" + std::to_string(getpid()) + "_" + tag;
    std::ofstream out(path);
    out << content;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("beta command") {
    CmdResult c5 = run("beta --mass " + data_file("uniform_c5.mass") + " --m 5");
    CHECK(c5.status == 0);
    CHECK(c5.out == "beta 1/3125 0.00032\n");

    CmdResult c6 = run("beta --mass " + data_file("uniform_c6.mass") + " --m 6 --exact");
    CHECK(c6.status == 0);
    CHECK(contains(c6.out, "beta 1/46656 "));

    std::string dec = temp_file("dec.mass", "3 3\n0 1 0.25\n1 2 0.25\n0 2 0.5\n");
    CmdResult d = run("beta --mass " + dec + " --m 3");
    CHECK(d.status == 0);
    CHECK(d.out == "beta 1/32 0.03125\n");

    std::string out_path = "/tmp/cyclemass_test_" + std::to_string(getpid()) + "_beta.json";
    CmdResult j = run("beta --mass " + data_file("uniform_c5.mass") + " --m 5 --out " + out_path);
    CHECK(j.status == 0);
    std::ifstream in(out_path);
    json parsed = json::parse(in);
    CHECK(parsed["m"] == 5);
    CHECK(parsed["beta"]["fraction"] == "1/3125");
    CHECK(parsed["beta"]["value"] == 0.00032);
    CHECK(parsed["mass"]["n"] == 5);
    CHECK(parsed["mass"]["edges"].size() == 5);
}

TEST_CASE("beta command failure modes") {
    CHECK(run("beta --mass /nonexistent.mass --m 5").status == 2);
    CHECK(run("beta --mass " + data_file("uniform_c5.mass") + " --m 2").status == 2);

    std::string bad_sum = temp_file("badsum.mass", "3 2\n0 1 0.5\n1 2 0.4\n");
    CHECK(run("beta --mass " + bad_sum + " --m 3").status == 3);

    std::string bad_header = temp_file("badheader.mass", "3\n");
    CHECK(run("beta --mass " + bad_header + " --m 3").status == 2);
}

TEST_CASE("search command") {
    std::string base_args = "search --m 5 --n-max 5 --restarts 4";
    CmdResult rep = run(base_args);
    CHECK(rep.status == 0);
    CHECK(contains(rep.out, "best DLo 0.00032\n"));
    CHECK(contains(rep.out, "m 5\n"));
    CHECK(contains(rep.out, "exploratory no\n"));

    // Byte-identical output across thread counts and repeated runs.
    CHECK(run(base_args + " --threads 4").out == rep.out);
    CHECK(run(base_args).out == rep.out);

    std::string out_path = "/tmp/cyclemass_test_" + std::to_string(getpid()) + "_search.json";
    CmdResult j = run(base_args + " --out " + out_path);
    CHECK(j.status == 0);
    std::ifstream in(out_path);
    json parsed = json::parse(in);
    CHECK(parsed["best"]["graph6"] == "DLo");
    CHECK(parsed["table"].size() == 8);

    CHECK(run("search --m 5 --n-max 9").status == 2);
    CHECK(run("search --m 5 --n-max 4 --n-min 5").status == 2);
}

TEST_CASE("verify command") {
    CmdResult five = run("verify --m 5");
    CHECK(five.status == 0);
    CHECK(contains(five.out, "suite full\n"));
    CHECK(contains(five.out, "all_pass yes\n"));
    CHECK(contains(five.out, "pass edge threshold certified"));

    CmdResult six = run("verify --m 6 --exact");
    CHECK(six.status == 0);
    CHECK(contains(six.out, "all_pass yes\n"));
    CHECK(contains(six.out, "pass six-vertex case analysis"));

    CmdResult four = run("verify --m 4");
    CHECK(four.status == 0);
    CHECK(contains(four.out, "suite partial\n"));
    CHECK(contains(four.out, "all_pass yes\n"));

    CHECK(run("verify --m 2").status == 2);
}

TEST_CASE("blowup command") {
    CmdResult spec = run("blowup --spec " + data_file("c5_bags2.blowup") + " --m 5");
    CHECK(spec.status == 0);
    CHECK(contains(spec.out, "base Dhc\n"));
    CHECK(contains(spec.out, "bags 2 2 2 2 2\n"));
    CHECK(contains(spec.out, "count 32\n"));
    CHECK(contains(spec.out, "ratio 1 1\n"));

    CmdResult mass = run("blowup --mass " + data_file("uniform_c5.mass") + " --n 25 --m 5");
    CHECK(mass.status == 0);
    CHECK(contains(mass.out, "count 3125\n"));
    CHECK(contains(mass.out, "ratio 1 1\n"));

    // Exactly one of --spec / --mass.
    CHECK(run("blowup --m 5").status == 2);
    CHECK(run("blowup --spec a --mass b --m 5").status == 2);
    CHECK(run("blowup --spec /nonexistent.blowup --m 5").status == 2);
    CHECK(run("blowup --mass " + data_file("uniform_c5.mass") + " --m 5").status == 2); // no --n

    std::string empty_bags = temp_file("empty.blowup", "Dhc\n0 1 0\n0 4 0\n1 2 0\n2 3 0\n3 4 0\n");
    CHECK(run("blowup --spec " + empty_bags + " --m 5").status == 3);
}

TEST_CASE("mc command") {
    CmdResult rep = run("mc --mass " + data_file("uniform_c5.mass") +
                        " --m 5 --samples 20000 --seed 7 --threads 2");
    CHECK(rep.status == 0);
    CHECK(contains(rep.out, "samples 20000\n"));
    CHECK(contains(rep.out, "seed 7\n"));
    CHECK(contains(rep.out, "target 0.0384\n"));
    CHECK(contains(rep.out, "z_score "));

    CHECK(run("mc --mass " + data_file("uniform_c5.mass") + " --m 5 --samples 0").status == 2);
}

TEST_CASE("gen command") {
    CmdResult cubic = run("gen --n 6 --min-degree 3 --regular 3 --connected");
    CHECK(cubic.status == 0);
    CHECK(cubic.out == "EFz_\nELv_\n");

    CmdResult all4 = run("gen --n 4");
    CHECK(all4.status == 0);
    int lines = 0;
    for (char ch : all4.out) lines += ch == '\n';
    CHECK(lines == 11);

    CHECK(run("gen --n 9").status == 2);
}

TEST_CASE("top-level interface") {
    CHECK(run("").status == 2);           // a subcommand is required
    CHECK(run("frobnicate").status == 2); // unknown subcommand
    CHECK(run("--help").status == 0);
    CHECK(run("beta --help").status == 0);
    CHECK(run("beta --mass x").status == 2); // missing required --m
}
