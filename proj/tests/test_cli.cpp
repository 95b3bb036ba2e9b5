#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int rc = -1;
    std::string out;
};

Result run(const std::string& args, bool with_stderr = false)
{
    const std::string cmd = std::string(MHR_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data() { return std::string(MHR_DATA_DIR) + "/paper_examples.mhr"; }

fs::path scratch(const std::string& name)
{
    fs::path d = fs::temp_directory_path() / ("mhr-cli-" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

struct Golden {
    const char* file;
    std::string args;
};

class GoldenOutput : public ::testing::TestWithParam<Golden> {};

} // namespace

TEST_P(GoldenOutput, Matches)
{
    const Golden& g = GetParam();
    const Result r = run(g.args);
    EXPECT_EQ(r.rc, 0);
    EXPECT_EQ(r.out, slurp(fs::path(MHR_GOLDEN_DIR) / g.file));
}

INSTANTIATE_TEST_SUITE_P(
    Cli, GoldenOutput,
    ::testing::Values(Golden{"paper_examples.txt", "paper-examples"},
                      Golden{"paper_examples.machine.txt", "--machine paper-examples"},
                      Golden{"validate.txt", "validate " + data()},
                      Golden{"validate.machine.txt", "--machine validate " + data()},
                      Golden{"classify_madar.txt", "classify " + data() + " madar_A madar_S"},
                      Golden{"classify_weak.txt", "classify " + data() + " weak_zero weak_S"},
                      Golden{"classify_weak.machine.txt", "--machine classify " + data() + " weak_zero weak_S"},
                      Golden{"radical_madar.txt", "radical " + data() + " madar_A"},
                      Golden{"ideals_weak.txt", "ideals " + data() + " weak"},
                      Golden{"ideals_product.machine.txt", "--machine ideals " + data() + " madar_x_haji"},
                      Golden{"conformance_builtin4.machine.txt",
                             "--machine conformance --corpus builtin --max-n 4 --dump-dir " +
                                 scratch("golden").string()}),
    [](const ::testing::TestParamInfo<Golden>& info) {
        std::string n = info.param.file;
        for (char& c : n)
            if (c == '.')
                c = '_';
        return n;
    });

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("").rc, 1);
    EXPECT_EQ(run("frobnicate").rc, 1);
    EXPECT_EQ(run("classify " + data()).rc, 1);
    EXPECT_EQ(run("validate /nonexistent/file.mhr").rc, 2);
    EXPECT_EQ(run("classify " + data() + " madar_A nope").rc, 2);
    EXPECT_EQ(run("radical " + data() + " weak_S").rc, 2);
    EXPECT_EQ(run("--capacity 4 validate " + data()).rc, 2);
}

TEST(Cli, ParseErrorIsLocated)
{
    const fs::path d = scratch("parse");
    std::ofstream(d / "bad.mhr") << "ring g { kind = zphi n = 4 phi = {1} }\n\nideal a in h = {0}\n";
    const Result r = run("validate " + (d / "bad.mhr").string(), true);
    EXPECT_EQ(r.rc, 2);
    EXPECT_NE(r.out.find("3:12: E_REFERENCE"), std::string::npos) << r.out;
}

TEST(Cli, ConformanceIsDeterministicAcrossRunsAndWorkers)
{
    const std::string base = "--machine conformance --seed 7 --count 25 --dump-dir " + scratch("det").string();
    const Result a = run(base + " --jobs 1");
    const Result b = run(base + " --jobs 1");
    const Result c = run(base + " --jobs 4");
    EXPECT_EQ(a.rc, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.out.find("total_fail=0"), std::string::npos) << a.out;
}

TEST(Cli, MutationFailsAndDumpReplays)
{
    const fs::path d = scratch("dump");
    const Result m = run("conformance --corpus builtin --max-n 5 --jobs 2 --mutation quasi-ignores-witness --dump-dir " +
                      d.string());
    EXPECT_EQ(m.rc, 3);
    EXPECT_EQ(m.out.find("total_fail=0"), std::string::npos);

    std::vector<fs::path> dumps;
    for (const auto& e : fs::directory_iterator(d))
        dumps.push_back(e.path());
    ASSERT_FALSE(dumps.empty());
    std::sort(dumps.begin(), dumps.end());
    const Result replay = run("conformance " + dumps.front().string());
    EXPECT_EQ(replay.rc, 3) << replay.out;
    EXPECT_NE(replay.out.find("status=fail"), std::string::npos) << replay.out;
    const Result machine = run("--machine conformance " + dumps.front().string());
    EXPECT_EQ(machine.out.rfind("instance name=replay ", 0), 0u) << machine.out;

    // the same instance without the mutation line passes on the correct engine
    std::string text = slurp(dumps.front());
    std::string clean;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        if (line.find("mutation") == std::string::npos)
            clean += line + "\n";
    std::ofstream(d / "clean.mhr") << clean;
    const Result fixed = run("conformance " + (d / "clean.mhr").string());
    EXPECT_EQ(fixed.rc, 0) << fixed.out;
}

TEST(Cli, BuiltinCorpusHasNoFailures)
{
    const Result r = run("--machine conformance --corpus builtin --max-n 6 --dump-dir " + scratch("builtin").string());
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("total_fail=0"), std::string::npos);
}
