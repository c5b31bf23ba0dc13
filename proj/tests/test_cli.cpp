#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "framelift/bias_matroid.hpp"
#include "framelift/graph_io.hpp"
#include "framelift/matroid_io.hpp"

using namespace framelift;
using namespace framelift::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("framelift_cli_" + std::to_string(::getpid())) / name;
    fs::create_directories(p.parent_path());
    return p;
}

int run(const std::string& args, const fs::path& out = {}) {
    std::string cmd = std::string(FRAMELIFT_BINARY) + " " + args;
    cmd += out.empty() ? " > /dev/null 2>&1" : " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int count(const RunReport& r, const std::string& prefix) {
    int n = 0;
    for (const auto& c : r.checks) n += c.name.rfind(prefix, 0) == 0;
    return n;
}

Multigraph k4() {
    return Multigraph({"a", "b", "c", "d"},
                      {{"ab", 0, 1}, {"ac", 0, 2}, {"ad", 0, 3}, {"bc", 1, 2}, {"bd", 1, 3}, {"cd", 2, 3}});
}

}  // namespace

TEST_CASE("generate writes five files that parse back") {
    const fs::path dir = scratch("gen_frame");
    const auto r = cmd_generate(MatroidKind::Frame, 3, dir.string());
    CHECK(r.passed());
    CHECK(r.outputs.size() == 5);
    for (const auto& a : r.outputs) CHECK(fs::exists(dir / a.path));
    CHECK(load_matroid((dir / "M3_contracted.matroid").string()).size() == 12);

    const auto lift = cmd_generate(MatroidKind::Lift, 3, scratch("gen_lift").string());
    CHECK(lift.passed());
    bool named = false;
    for (const auto& c : lift.checks)
        named = named || (c.name == "Q+{e1,e2} is a circuit-hyperplane of N" && c.detail.find("e1") != std::string::npos);
    CHECK(named);
    CHECK_THROWS_AS(cmd_generate(MatroidKind::Frame, 4, scratch("gen_bad").string()), UsageError);
}

TEST_CASE("verify levels") {
    SearchOptions opt;
    const auto facts = cmd_verify(MatroidKind::Frame, 3, Level::Facts, opt);
    CHECK(facts.passed());
    const auto minors = cmd_verify(MatroidKind::Lift, 3, Level::Minors, opt);
    CHECK(minors.passed());
    CHECK(count(minors, "minor: M \\") == 12);
    CHECK(count(minors, "minor: M /") == 12);
    CHECK(minors.outputs.size() == 3);
    CHECK(minors.checks.back().detail == "12 of 12");
    const auto full = cmd_verify(MatroidKind::Lift, 3, Level::Full, opt);
    CHECK(full.passed());
    REQUIRE(full.certificates.size() == 1);
    CHECK(full.certificates[0].verdict == "NOT_REPRESENTABLE");
    CHECK_THROWS_AS(cmd_verify(MatroidKind::Frame, 5, Level::Minors, opt), UsageError);
}

TEST_CASE("decide on exported files") {
    const fs::path u24 = scratch("u24.matroid");
    save_matroid(u24.string(), uniform_matroid(2, 4));
    const fs::path k4f = scratch("k4.matroid");
    save_matroid(k4f.string(), fm_matroid(BiasedGraph(k4(), all_cycles(k4()))));
    SearchOptions opt;
    const auto a = cmd_decide(u24.string(), MatroidKind::Frame, opt, Verdict::Representable);
    CHECK(a.passed());
    CHECK_FALSE(a.certificates[0].witness.empty());
    CHECK(cmd_decide(k4f.string(), MatroidKind::Lift, opt, Verdict::Representable).passed());

    const fs::path dir = scratch("gen_for_decide");
    cmd_generate(MatroidKind::Lift, 3, dir.string());
    const auto c = cmd_decide((dir / "M3_contracted.matroid").string(), MatroidKind::Lift, opt);
    CHECK(c.passed());
    CHECK(c.certificates[0].verdict == "NOT_REPRESENTABLE");
    CHECK_FALSE(c.inputs[0].sha256.empty());

    SearchOptions tiny;
    tiny.budget_nodes = 10;
    tiny.strategy = Strategy::Enumerate;
    CHECK_FALSE(cmd_decide((dir / "M3_contracted.matroid").string(), MatroidKind::Lift, tiny).passed());
}

TEST_CASE("crosscheck") {
    const fs::path tri = scratch("tri.graph");
    std::ofstream(tri) << "GROUP Q+\nVERTICES 3\nx y z\nEDGES 3\na x y 2\nb y z 1/3\nc z x 1\n";
    const auto r = cmd_crosscheck(tri.string());
    CHECK(r.passed());
    CHECK(r.checks[0].detail == "EQUAL");
    CHECK_THROWS_AS(cmd_crosscheck(tri.string(), MatroidKind::Lift), UsageError);

    const fs::path c4 = scratch("c4.graph");
    std::ofstream(c4) << "GROUP Z\nVERTICES 4\nx y z w\nEDGES 4\na x y 1\nb y z\nc z w\nd w x\n";
    const auto l = cmd_crosscheck(c4.string(), MatroidKind::Lift);
    CHECK(l.passed());
    CHECK(l.checks[0].detail == "EQUAL");
}

TEST_CASE("report round trip and digest") {
    auto r = cmd_verify(MatroidKind::Lift, 3, Level::Full, {});
    r.threads = 3;
    r.seconds = 1.25;
    const auto j = to_json(r);
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    CHECK(render_text(back) == render_text(r));

    auto other = r;
    other.threads = 1;
    other.seconds = 99;
    CHECK(canonical_digest(other) == canonical_digest(r));
    other.checks[0].detail += "x";
    CHECK(canonical_digest(other) != canonical_digest(r));

    auto tampered = nlohmann::json::parse(j.dump());
    tampered["checks"][0]["passed"] = false;
    CHECK_THROWS(report_from_json(tampered));
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("binary exit codes") {
    const fs::path dir = scratch("bin");
    CHECK(run("generate frame 3 --out " + (dir / "f").string()) == 0);
    CHECK(run("generate frame 4 --out " + (dir / "x").string()) == 2);
    CHECK(run("verify lift 3 --level full") == 0);
    CHECK(run("verify --kind frame --k 3 --level facts") == 0);
    CHECK(run("verify frame 3 --level bogus") == 2);
    CHECK(run("decide " + (dir / "f" / "M3_contracted.matroid").string() +
              " --kind frame --expect not-representable") == 0);
    CHECK(run("decide " + (dir / "f" / "M3_contracted.matroid").string() + " --kind frame --expect representable") == 1);
    CHECK(run("decide " + (dir / "f" / "M3_contracted.matroid").string() +
              " --kind frame --strategy enumerate --budget-nodes 5") == 1);

    const fs::path bad = dir / "bad.matroid";
    std::ofstream(bad) << "GROUND 2\na\nRANK 1\n";
    const fs::path err = dir / "err.txt";
    CHECK(run("decide " + bad.string() + " --kind frame", err) == 3);
    CHECK(slurp(err).find("line 3") != std::string::npos);

    const fs::path r1 = dir / "r1.json", r4 = dir / "r4.json";
    CHECK(run("verify frame 3 --level full --format structured --threads 1 --out " + r1.string()) == 0);
    CHECK(run("verify frame 3 --level full --format structured --threads 4 --out " + r4.string()) == 0);
    const auto a = report_from_json(nlohmann::json::parse(slurp(r1)));
    const auto b = report_from_json(nlohmann::json::parse(slurp(r4)));
    CHECK(canonical_text(a) == canonical_text(b));
    CHECK(run("render " + r1.string()) == 0);
}
