// End-to-end checks of the command-line tool: exit codes, JSON reports, and
// byte-level determinism (up to timings). The binary path arrives as argv[1]
// from ctest; data files live under the source tree.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;
std::string g_data_dir;
std::string g_work_dir;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), nread);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

std::string strip_timings(std::string text) {
    auto j = nlohmann::json::parse(text);
    j.erase("timings");
    return j.dump();
}

std::string tmp_path(const std::string& name) { return g_work_dir + "/" + name; }

} // namespace

TEST_CASE("construct: vamos, det, singular-cubic, graph-cubic") {
    auto vamos = run("construct vamos");
    CHECK(vamos.exit_code == 0);
    auto vj = parse(vamos.out);
    CHECK(vj["poly"]["nvars"] == 4);
    CHECK(vj["e"].size() == 4);

    auto det3 = run("construct det 3 -o " + tmp_path("det3.json"));
    CHECK(det3.exit_code == 0);

    auto sc = run("construct singular-cubic -o " + tmp_path("sc.json"));
    CHECK(sc.exit_code == 0);

    auto gc = run("construct graph-cubic " + g_data_dir + "/icosa.edges 3 --normalized -o " +
                  tmp_path("icosa_cubic.json"));
    CHECK(gc.exit_code == 0);
    std::ifstream in(tmp_path("icosa_cubic.json"));
    nlohmann::json gj;
    in >> gj;
    CHECK(gj["poly"]["nvars"] == 43);

    CHECK(run("construct nonsense").exit_code == 2);
    CHECK(run("construct graph-cubic " + g_data_dir + "/icosa.edges 2 --normalized").exit_code ==
          2); // irrational normalization
}

TEST_CASE("check hyperbolic: exit codes and determinism") {
    run("construct vamos -o " + tmp_path("vamos.json"));
    std::string base =
        "check hyperbolic " + tmp_path("vamos.json") + " --e 1,1,1,1 --trials 60 --seed 7";
    auto first = run(base);
    CHECK(first.exit_code == 0);
    auto fj = parse(first.out);
    CHECK(fj["verdict"] == "passed");
    CHECK(fj["seed"] == 7);

    auto second = run(base);
    CHECK(strip_timings(first.out) == strip_timings(second.out));

    // Parallel run has the identical report.
    auto parallel = run(base + " --jobs 4");
    CHECK(strip_timings(first.out) == strip_timings(parallel.out));

    // A falsifiable instance exits 1 with a witness: x1^2 + x2^2 has
    // p(e1) > 0 but complex roots along the e2 line (a structured sample).
    std::ofstream circle(tmp_path("circle.json"));
    circle << R"({"poly": {"nvars": 2, "terms": [
                   {"exp": [2, 0], "num": "1", "den": "1"},
                   {"exp": [0, 2], "num": "1", "den": "1"}]},
                  "e": ["1", "0"]})";
    circle.close();
    auto bad = run("check hyperbolic " + tmp_path("circle.json") + " --trials 40 --seed 7 --log " +
                   tmp_path("trials.jsonl"));
    CHECK(bad.exit_code == 1);
    auto bj = parse(bad.out);
    CHECK(bj["verdict"] == "falsified");
    CHECK(bj["witnesses"].size() == 1);
    std::ifstream log(tmp_path("trials.jsonl"));
    std::string line;
    int lines = 0, failures = 0;
    while (std::getline(log, line)) {
        ++lines;
        auto lj = parse(line);
        if (!lj["ok"].get<bool>()) ++failures;
    }
    CHECK(lines == 40);
    CHECK(failures >= 1);
}

TEST_CASE("check member: inside / boundary / outside exit codes") {
    run("construct graph-cubic " + g_data_dir + "/icosa.edges 3 --normalized -o " +
        tmp_path("icosa_cubic.json"));
    auto inside = run("check member " + tmp_path("icosa_cubic.json") + " --u e0");
    CHECK(inside.exit_code == 0);
    CHECK(parse(inside.out)["verdict"] == "inside");

    run("construct det 2 -o " + tmp_path("det2.json"));
    auto boundary = run("check member " + tmp_path("det2.json") + " --u 1,0,0");
    CHECK(boundary.exit_code == 0);
    CHECK(parse(boundary.out)["verdict"] == "boundary");

    auto outside = run("check member " + tmp_path("det2.json") + " --u 1,0,-1");
    CHECK(outside.exit_code == 1);
    CHECK(parse(outside.out)["verdict"] == "outside");
}

TEST_CASE("check eigenvalues and the 'I' direction") {
    run("construct det 2 -o " + tmp_path("det2.json"));
    auto eig = run("check eigenvalues " + tmp_path("det2.json") + " --e I --x 1,0,2");
    CHECK(eig.exit_code == 0);
    auto ej = parse(eig.out);
    REQUIRE(ej["eigenvalues"].size() == 2);
    CHECK(ej["eigenvalues"][0]["multiplicity"] == 1);
}

TEST_CASE("certify: both paper certificates and gram files") {
    auto vamos = run("certify vamos-not-sos");
    CHECK(vamos.exit_code == 0);
    auto vj = parse(vamos.out);
    CHECK(vj["verdict"] == "not_sos");
    CHECK(vj["margin"] == "144");
    CHECK(vj["moment_psd"] == true);

    auto icosa = run("certify icosa-not-sos");
    CHECK(icosa.exit_code == 0);
    auto ij = parse(icosa.out);
    CHECK(ij["verdict"] == "obstruction_confirmed");
    CHECK(ij["complement_dimension"] == 22);
    CHECK(ij["trace"] == "-12");

    // The shipped separation data file verifies as-is.
    auto sep = run("certify separation " + g_data_dir + "/vamos_separation.json");
    CHECK(sep.exit_code == 0);
    CHECK(parse(sep.out)["verdict"] == "not_sos");

    // A valid gram file.
    std::ofstream gram(tmp_path("gram.json"));
    gram << R"({
      "target": {"nvars": 2, "terms": [
        {"exp": [2, 0], "num": "1", "den": "1"},
        {"exp": [0, 2], "num": "1", "den": "1"}]},
      "basis": [
        {"nvars": 2, "terms": [{"exp": [1, 0], "num": "1", "den": "1"}]},
        {"nvars": 2, "terms": [{"exp": [0, 1], "num": "1", "den": "1"}]}],
      "gram": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
    })";
    gram.close();
    auto gres = run("certify gram " + tmp_path("gram.json"));
    CHECK(gres.exit_code == 0);
    CHECK(parse(gres.out)["verdict"] == "valid_sos");

    // sos-recovery from a file.
    std::ofstream rec(tmp_path("recovery.json"));
    rec << R"({"d": 1, "m": 2, "gram": {"rows": 2, "cols": 2,
               "entries": [["1", "0"], ["0", "1"]]}})";
    rec.close();
    auto rres = run("certify sos-recovery " + tmp_path("recovery.json"));
    CHECK(rres.exit_code == 0);
    CHECK(parse(rres.out)["verdict"] == "identity_holds");
}

TEST_CASE("matrix: the standard-cubic display via --at, symbolic hermite, phi") {
    // p = x0^3 - 3 x0 (x1^2) + 2 x1^3 as a std-cubic built from q = x1^3.
    std::ofstream q(tmp_path("q.json"));
    q << R"({"nvars": 1, "terms": [{"exp": [3], "num": "1", "den": "1"}]})";
    q.close();
    run("construct std-cubic " + tmp_path("q.json") + " -o " + tmp_path("p.json"));
    auto bez = run("matrix bezout " + tmp_path("p.json") + " --e e0 --u e0 --at 0=0");
    CHECK(bez.exit_code == 0);
    auto bj = parse(bez.out);
    CHECK(bj["matrix"]["rows"] == 3);
    // Entry (2,2) of the displayed matrix is the constant 3.
    auto corner = bj["matrix"]["entries"][2][2];
    CHECK(corner["terms"].size() == 1);
    CHECK(corner["terms"][0]["num"] == "3");

    run("construct det 2 -o " + tmp_path("det2.json"));
    auto herm = run("matrix hermite " + tmp_path("det2.json") + " --e I --u I --symbolic");
    CHECK(herm.exit_code == 0);
    CHECK(parse(herm.out)["matrix"]["rows"] == 2);

    auto phi = run("matrix phi " + tmp_path("det2.json") + " --e I --x 1,0,2 --y 0,1");
    CHECK(phi.exit_code == 0);
    CHECK(parse(phi.out)["functional"].size() == 3);

    auto csv = run("matrix hermite " + tmp_path("det2.json") + " --e I --u I --x 1,0,2 "
                   "--format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "2,-3\n-3,5\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("check hyperbolic /nonexistent.json").exit_code == 2);
    CHECK(run("check member " + tmp_path("det2.json") + " --u 1,2").exit_code == 2);
    CHECK(run("certify separation /nonexistent.json").exit_code == 2);
}

TEST_CASE("HYPERCERT_SEED fallback is honored") {
    run("construct vamos -o " + tmp_path("vamos.json"));
    std::string cmd = "HYPERCERT_SEED=99 " + g_binary + " check hyperbolic " +
                      tmp_path("vamos.json") + " --e 1,1,1,1 --trials 20 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), nread);
    pclose(pipe);
    auto j = parse(out);
    CHECK(j["seed"] == 99);
    CHECK(j["seed_source"] == "HYPERCERT_SEED");
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <hypercert-binary> <data-dir> [work-dir]\n");
        return 1;
    }
    g_binary = argv[1];
    g_data_dir = argv[2];
    g_work_dir = (argc >= 4) ? argv[3] : ".";
    doctest::Context context;
    return context.run();
}
