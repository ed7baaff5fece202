#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <steinberg/subsets.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::path(STEINBERG_SCRATCH) / name;
    fs::create_directories(p.parent_path());
    return p;
}

Run run(const std::string& args, const std::string& env = "")
{
    static int counter = 0;
    const fs::path out = scratch("out_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    const std::string cmd = env + " \"" + std::string(STEINBERG_CLI) + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

json read_json(const fs::path& p)
{
    std::ifstream f(p);
    return json::parse(f);
}

} // namespace

TEST(Cli, BuildWritesThreeAlgebras)
{
    const auto dir = scratch("build_d2");
    ASSERT_EQ(run("--d 2 build --out " + dir.string()).code, 0);
    for (const char* name : {"dat_ext.json", "path_quotient.json", "endomorphism.json"}) {
        const auto j = read_json(dir / name);
        EXPECT_EQ(j["rank"], 2);
        EXPECT_EQ(j["basis"].size(), 16u);
    }
}

TEST(Cli, CartanTypeGivesRank)
{
    const auto dir = scratch("build_a3");
    ASSERT_EQ(run("--type A3 build --out " + dir.string()).code, 0);
    EXPECT_EQ(read_json(dir / "endomorphism.json")["basis"].size(), 64u);
    const auto r = run("--type A1xA1 report");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["type"], "A1xA1");
}

TEST(Cli, UsageAndResourceErrorsExitTwo)
{
    EXPECT_EQ(run("--d 20 build --out " + scratch("never").string()).code, 2);
    EXPECT_EQ(run("--d 2 --type A2 report").code, 2);
    EXPECT_EQ(run("--type Q7 report").code, 2);
    EXPECT_EQ(run("report").code, 2);
    EXPECT_EQ(run("--d 2").code, 2);
    EXPECT_EQ(run("--d 2 verify --format dot").code, 2);
    EXPECT_EQ(run("--d 2 ext-table --max-k 13").code, 2);
    EXPECT_EQ(run("--d 4 ext-table").code, 2);
    EXPECT_EQ(run("--d 1 verify", "STEINBERG_QUIVER_SEED=abc").code, 2);
    EXPECT_EQ(run("--d 1 frobnicate").code, 2);
}

TEST(Cli, VerifyPasses)
{
    for (const char* d : {"0", "1", "3"}) {
        const auto r = run(std::string("--d ") + d + " verify");
        EXPECT_EQ(r.code, 0) << r.out;
        const auto j = json::parse(r.out);
        EXPECT_TRUE(j["all_passed"].get<bool>());
        EXPECT_EQ(j["summary"]["failed"], 0);
    }
    const auto md = run("--d 2 verify --format markdown");
    EXPECT_EQ(md.code, 0);
    EXPECT_NE(md.out.find("All checks passed."), std::string::npos);
}

TEST(Cli, VerifyIsDeterministicAcrossRunsSeedsAndJobs)
{
    const auto a = run("--d 3 verify");
    const auto b = run("--d 3 verify");
    const auto c = run("--d 3 --jobs 4 verify");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    const auto seeded = run("--d 3 verify", "STEINBERG_QUIVER_SEED=17");
    EXPECT_EQ(seeded.code, 0);
    EXPECT_EQ(json::parse(seeded.out)["seed"], 17);
}

TEST(Cli, TamperedStructureConstantFailsVerification)
{
    const auto dir = scratch("tampered_d3");
    ASSERT_EQ(run("--d 3 build --out " + dir.string()).code, 0);
    ASSERT_EQ(run("--d 3 verify --from " + dir.string()).code, 0);

    auto j = read_json(dir / "dat_ext.json");
    bool done = false;
    std::vector<unsigned> degree(j["basis"].size());
    for (const auto& b : j["basis"])
        degree[b["id"].get<std::size_t>()] = b["degree"].get<unsigned>();
    for (auto& p : j["products"]) {
        if (degree[p[0].get<std::size_t>()] > 0 && degree[p[1].get<std::size_t>()] > 0) {
            p[2][0][1] = "3/1";
            done = true;
            break;
        }
    }
    ASSERT_TRUE(done);
    std::ofstream(dir / "dat_ext.json") << j.dump();

    const auto r = run("--d 3 verify --from " + dir.string());
    EXPECT_EQ(r.code, 1);
    const auto report = json::parse(r.out);
    EXPECT_FALSE(report["all_passed"].get<bool>());
    std::vector<std::string> failed;
    for (const auto& f : report["failures"])
        failed.push_back(f["name"]);
    EXPECT_NE(std::find(failed.begin(), failed.end(), "associativity"), failed.end());
    for (const auto& c : report["checks"])
        if (c["name"] == "associativity") {
            EXPECT_TRUE(c["counterexample"].contains("h"));
            EXPECT_TRUE(c["counterexample"].contains("g"));
            EXPECT_TRUE(c["counterexample"].contains("f"));
        }
}

TEST(Cli, ExtTable)
{
    const auto r = run("--d 2 ext-table --max-k 4");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 16u);
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> keys;
    for (const auto& e : j["entries"]) {
        keys.emplace_back(e["I"].get<std::vector<unsigned>>(), e["J"].get<std::vector<unsigned>>());
        EXPECT_EQ(e["dims"].size(), 5u);
    }
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_EQ(keys.front().first, std::vector<unsigned>{});
    EXPECT_EQ(j["entries"][0]["dims"], json::parse("[1,0,2,0,3]"));
    EXPECT_EQ(run("--d 2 --jobs 3 ext-table --max-k 4").out, r.out);
}

TEST(Cli, ExtGridReproducesDistances)
{
    const auto r = run("--d 2 ext-table --format markdown");
    ASSERT_EQ(r.code, 0);
    // Rows in order {}, {1}, {1,2}, {2}.
    for (const char* row : {"| {} | 0 | 1 | 2 | 1 |", "| {1} | 1 | 0 | 1 | 2 |", "| {1,2} | 2 | 1 | 0 | 1 |",
                            "| {2} | 1 | 2 | 1 | 0 |"})
        EXPECT_NE(r.out.find(row), std::string::npos) << row;
}

TEST(Cli, Report)
{
    const auto r = run("--d 1 report");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["entries"][0]["steinberg"], "St_G");
    EXPECT_EQ(j["entries"][0]["orbit"]["dim"], 1);
    EXPECT_EQ(j["entries"][1]["steinberg"], "triv_G");
    EXPECT_EQ(j["entries"][1]["exponents_doubled"], json::parse("[1,-1]"));
}

TEST(Cli, ExportQuiver)
{
    const auto r = run("--d 2 export-quiver");
    ASSERT_EQ(r.code, 0);
    std::size_t edges = 0;
    for (std::size_t at = r.out.find("->"); at != std::string::npos; at = r.out.find("->", at + 1))
        ++edges;
    EXPECT_EQ(edges, 8u);
    EXPECT_NE(r.out.find("v3 [label=\"[1,2]\"]"), std::string::npos);
    const auto file = scratch("q.dot");
    EXPECT_EQ(run("--d 2 export-quiver --out " + file.string()).code, 0);
    std::ifstream f(file);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), r.out);
    EXPECT_EQ(run("--d 2 export-quiver --format json").code, 2);
}
