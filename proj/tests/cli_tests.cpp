#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(JDM_CLI_PATH) + " " + args + " 2>/dev/null </dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "jdm-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

const std::string kTriangle = R"({"classes":[{"name":"A","size":3,"degree":2}],"matrix":[[3]]})";
const std::string kInfeasible = R"({"classes":[{"name":"A","size":3,"degree":1}],"matrix":[[2]]})";
const std::string kTwoTriangles =
    R"({"classes":[{"name":"A","size":3,"degree":2},{"name":"B","size":3,"degree":2}],)"
    R"("matrix":[[3,0],[0,3]]})";
const std::string kFourCycle = R"({"classes":[{"name":"A","size":4,"degree":2}],"matrix":[[4]]})";

}  // namespace

TEST_CASE("check reports feasibility with the exit-code contract") {
    const auto ok = run("check --instance " + write_file("tri.json", kTriangle));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("degree feasibility: ok") != std::string::npos);

    const auto bad = run("check --instance " + write_file("bad.json", kInfeasible));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("violated") != std::string::npos);
    CHECK(bad.out.find("degree feasibility") != std::string::npos);
}

TEST_CASE("realize produces a parseable graph") {
    const std::string inst = write_file("tri.json", kTriangle);
    const auto balanced = run("realize --instance " + inst);
    CHECK(balanced.exit_code == 0);
    CHECK(balanced.out.find("jdm-graph v1") == 0);
    CHECK(balanced.out.find("A_0 A_1") != std::string::npos);

    const auto simple = run("realize --instance " + inst + " --method simple");
    CHECK(simple.exit_code == 0);
    CHECK(simple.out == balanced.out);  // the triangle is the only realization

    const auto infeasible = run("realize --instance " + write_file("bad.json", kInfeasible));
    CHECK(infeasible.exit_code == 1);
}

TEST_CASE("realize-connected distinguishes graphs from certificates") {
    const auto graph = run("realize-connected --instance " + write_file("tri.json", kTriangle));
    CHECK(graph.exit_code == 0);
    CHECK(graph.out.find("jdm-graph v1") == 0);

    const auto cert =
        run("realize-connected --instance " + write_file("twotri.json", kTwoTriangles));
    CHECK(cert.exit_code == 2);
    CHECK(cert.out.find("\"type\": \"certificate\"") != std::string::npos);
    CHECK(cert.out.find("\"refutes\": true") != std::string::npos);
}

TEST_CASE("realize-star handles wildcards and infeasibility") {
    const std::string star = write_file(
        "star.json",
        R"({"classes":[{"name":"A","size":2,"degree":1},{"name":"B","size":2,"degree":1}],)"
        R"("matrix":[[0,"*"],["*",0]]})");
    const auto ok = run("realize-star --instance " + star);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("edges 2") != std::string::npos);

    const std::string odd = write_file(
        "odd.json", R"({"classes":[{"name":"A","size":3,"degree":1}],"matrix":[["*"]]})");
    CHECK(run("realize-star --instance " + odd).exit_code == 1);
}

TEST_CASE("enumerate lists omega") {
    const auto r = run("enumerate --instance " + write_file("c4.json", kFourCycle));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count 3") == 0);
}

TEST_CASE("sample with zero steps echoes the input graph") {
    const std::string inst = write_file("c4.json", kFourCycle);
    const auto realized = run("realize --instance " + inst);
    REQUIRE(realized.exit_code == 0);
    const std::string graph = write_file("c4.graph", realized.out);
    const auto sampled = run("sample --graph " + graph + " --steps 0 --seed 7");
    CHECK(sampled.exit_code == 0);
    // identical apart from the metadata comment
    std::string stripped;
    std::istringstream in(sampled.out);
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') stripped += line + "\n";
    CHECK(stripped == realized.out);
    CHECK(sampled.out.find("# meta {\"acceptance_rate\"") != std::string::npos);
}

TEST_CASE("sample is deterministic and records visits") {
    const std::string inst = write_file("c4.json", kFourCycle);
    const std::string graph = write_file("c4.graph", run("realize --instance " + inst).out);
    const std::string args = "sample --graph " + graph + " --steps 200 --seed 3 --histogram";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# visit ") != std::string::npos);

    const auto multi = run("sample --graph " + graph + " --steps 50 --seed 3 --chains 3");
    CHECK(multi.exit_code == 0);
}

TEST_CASE("switch-path connects enumerated realizations") {
    const std::string inst = write_file("c4.json", kFourCycle);
    const auto listing = run("enumerate --instance " + inst);
    REQUIRE(listing.exit_code == 0);
    // take two different members from the listing
    std::istringstream in(listing.out);
    std::string line;
    std::getline(in, line);  // count
    std::vector<std::string> members;
    while (std::getline(in, line)) members.push_back(line);
    REQUIRE(members.size() == 3);
    auto to_doc = [](const std::string& edges) {
        std::string doc = "jdm-graph v1\nclass A 4\nedges 4\n";
        std::string item;
        std::istringstream es(edges);
        while (std::getline(es, item, ',')) {
            const auto dash = item.find('-');
            doc += item.substr(0, dash) + " " + item.substr(dash + 1) + "\n";
        }
        return doc;
    };
    const std::string from = write_file("from.graph", to_doc(members[0]));
    const std::string to = write_file("to.graph", to_doc(members[1]));
    const auto path = run("switch-path --from " + from + " --to " + to);
    CHECK(path.exit_code == 0);
    CHECK(path.out.find("moves ") == 0);
}

TEST_CASE("verify checks a graph against an instance") {
    const std::string inst = write_file("tri.json", kTriangle);
    const std::string good = write_file("tri.graph", run("realize --instance " + inst).out);
    CHECK(run("verify --graph " + good + " --instance " + inst).exit_code == 0);

    const std::string path_doc = "jdm-graph v1\nclass A 3\nedges 2\nA_0 A_1\nA_1 A_2\n";
    const std::string bad = write_file("path.graph", path_doc);
    CHECK(run("verify --graph " + bad + " --instance " + inst).exit_code == 1);
}

TEST_CASE("extract round-trips a realized instance") {
    const std::string inst = write_file("tri.json", kTriangle);
    const std::string graph = write_file("tri.graph", run("realize --instance " + inst).out);
    const auto extracted = run("extract --graph " + graph);
    CHECK(extracted.exit_code == 0);
    CHECK(extracted.out.find("\"size\": 3") != std::string::npos);
    CHECK(extracted.out.find("\"degree\": 2") != std::string::npos);

    const std::string mixed = write_file(
        "mixed.graph", "jdm-graph v1\nclass A 3\nedges 2\nA_0 A_1\nA_1 A_2\n");
    CHECK(run("extract --graph " + mixed).exit_code == 1);
    CHECK(run("extract --graph " + mixed + " --classes by-degree").exit_code == 0);
}

TEST_CASE("dot export and output files") {
    const std::string inst = write_file("tri.json", kTriangle);
    const auto dot = run("realize --instance " + inst + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph jdm {") == 0);

    const std::string out_path = (scratch() / "out.graph").string();
    const auto to_file = run("realize --instance " + inst + " --output " + out_path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(out_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("jdm-graph v1") == 0);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("realize --instance /nonexistent.json").exit_code == 1);
    CHECK(run("sample --steps 5").exit_code == 1);  // missing --graph default stdin? closed
}

