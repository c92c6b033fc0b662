#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "inversion/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string tool() {
    const char* p = std::getenv("INVTOOL");
    REQUIRE_MESSAGE(p != nullptr, "INVTOOL must point at the built binary");
    return p;
}

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    fs::path out_file = fs::temp_directory_path() / "invtool_test_out.txt";
    std::string cmd = tool() + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "invtool_test_scratch";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("gen emits parseable digraphs") {
    Run r = run("gen --family r5");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    inversion::OrientedGraph g = inversion::parse_digraph(in);
    CHECK(g.order() == 5);
    CHECK(g.is_tournament());

    Run dot = run("gen --family cycle --n 4 --format dot");
    CHECK(dot.status == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);

    Run tk = run("gen --family tk --k 3 --N 2");
    CHECK(tk.status == 0);
    CHECK(tk.out.find("n 8") == 0);

    CHECK(run("gen --family no-such-thing").status != 0);
}

TEST_CASE("solve computes inv with a certificate") {
    fs::path f = scratch() / "r5.dg";
    {
        Run g = run("gen --family r5 --out " + f.string());
        REQUIRE(g.status == 0);
    }
    Run r = run("solve --op inv --in " + f.string());
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["value"] == 2);
    CHECK(j["result"]["family"].size() == 2);

    Run t = run("solve --op tau --in " + f.string());
    REQUIRE(t.status == 0);
    CHECK(json::parse(t.out)["result"]["value"] == 2);
}

TEST_CASE("solve reads stdin and respects budgets") {
    fs::path f = scratch() / "rt9.dg";
    REQUIRE(run("gen --family random-tournament --n 9 --seed 5 --out " + f.string()).status == 0);
    // a tiny budget must end in the budget exit code
    Run r = run("solve --op inv-oracle --limit 3 --budget 10 --in " + f.string());
    CHECK(r.status == 3);
}

TEST_CASE("certificates round-trip through check") {
    fs::path dir = scratch();
    fs::path graph = dir / "g.dg";
    REQUIRE(run("gen --family random-oriented --n 7 --seed 1 --out " + graph.string()).status == 0);
    Run solved = run("solve --op inv --in " + graph.string());
    REQUIRE(solved.status == 0);
    json j = json::parse(solved.out);

    fs::path cert = dir / "cert.json";
    std::ofstream(cert) << json{{"family", j["result"]["family"]}}.dump();
    Run ok = run("check --in " + graph.string() + " --certificate " + cert.string());
    CHECK(ok.status == 0);
    CHECK(json::parse(ok.out)["decycles"] == true);

    // an empty family does not decycle a cyclic graph
    std::ofstream(cert) << json{{"family", json::array()}}.dump();
    Run bad = run("check --in " + graph.string() + " --certificate " + cert.string());
    CHECK(bad.status == 2);
}

TEST_CASE("verify writes journal lines and exit codes track verdicts") {
    fs::path journal = scratch() / "journal.jsonl";
    fs::remove(journal);
    Run a = run("verify --experiment gram-obstruction --k 3 --out " + journal.string());
    CHECK(a.status == 0);
    Run b = run("verify --experiment max-inv --n 4 --out " + journal.string());
    CHECK(b.status == 0);

    std::ifstream in(journal);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        json j = json::parse(line);
        CHECK(j["verdict"] == "consistent");
        ++lines;
    }
    CHECK(lines == 2);

    Run rep = run("report --in " + journal.string());
    CHECK(rep.status == 0);
    CHECK(rep.out.find("| experiment |") != std::string::npos);
    CHECK(rep.out.find("gram-obstruction") != std::string::npos);
    CHECK(rep.out.find("max-inv") != std::string::npos);
}

TEST_CASE("parse failures carry the offending line") {
    fs::path bad = scratch() / "bad.dg";
    std::ofstream(bad) << "n 3\na 0 9\n";
    Run r = run("solve --op inv --in " + bad.string());
    CHECK(r.status == 1);
}
